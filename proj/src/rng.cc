// Copyright 2026 The ncpit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncpit/rng.h"

#include "ncpit/errors.h"

namespace ncpit {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SeededRng::uniform(std::uint64_t bound) {
  if (bound == 0) throw UsageError("uniform: empty range");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool SeededRng::coin(double p_true) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p_true;
}

FieldElem sample(SeededRng& rng, const PrimeField& field) {
  return field.elem(rng.uniform(field.modulus()));
}

FieldElem sample_nonzero(SeededRng& rng, const PrimeField& field) {
  return field.elem(1 + rng.uniform(field.modulus() - 1));
}

}  // namespace ncpit
