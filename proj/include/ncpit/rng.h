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

#ifndef NCPIT_RNG_H_
#define NCPIT_RNG_H_

#include <cstdint>
#include <random>

#include "ncpit/field.h"

namespace ncpit {

// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t x);

// A reproducible random stream. Uses only the fully specified mt19937_64
// engine plus our own rejection sampling, so streams are identical across
// standard libraries (std::uniform_int_distribution is not).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform(hi - lo + 1);
  }
  bool coin(double p_true = 0.5);

  // Child stream `stream` of this seed. Does not advance this stream.
  SeededRng split(std::uint64_t stream) const {
    return SeededRng(derive(seed_, stream));
  }
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix_seed(seed ^ mix_seed(stream + 0x9e3779b97f4a7c15ULL));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Uniform element of `field`.
FieldElem sample(SeededRng& rng, const PrimeField& field);
// Uniform nonzero element of `field`.
FieldElem sample_nonzero(SeededRng& rng, const PrimeField& field);

}  // namespace ncpit

#endif  // NCPIT_RNG_H_
