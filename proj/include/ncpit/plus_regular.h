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

#ifndef NCPIT_PLUS_REGULAR_H_
#define NCPIT_PLUS_REGULAR_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "ncpit/circuit.h"
#include "ncpit/classify.h"
#include "ncpit/lin_forms.h"
#include "ncpit/pistar.h"
#include "ncpit/products.h"
#include "ncpit/slp.h"

namespace ncpit {

// One elimination step: the products feeding the lowest + layer that still
// has products below it, and the circuit above them with every product
// replaced by a fresh variable y_i (i = position in `products`, 1-based).
struct LayerFrontier {
  Circuit residual;
  std::shared_ptr<SlpArena> arena;
  LinAlphabet alphabet;
  std::vector<SigmaProduct> products;
  std::vector<std::uint32_t> product_gates;  // indices in layering.circuit
  // True when the products are x-trees over the inputs below layer 1 (the
  // letters are then the input variables themselves).
  bool normalization = false;
  BigInt product_degree;
};

// Requires either at least two layers or a bottom layer of degree > 1.
LayerFrontier extract_frontier(const PlusLayering& layering,
                               std::uint64_t fingerprint_seed = 0);

struct PlusRegularConfig {
  PiStarConfig pistar;
  std::uint64_t seed = 0;
};

struct PlusRegularRound {
  std::size_t layers;
  bool normalization;
  std::size_t products;
  std::size_t independent;
};

struct PlusRegularOutcome {
  bool is_zero = false;
  // False if some independence decision rests on fingerprints.
  bool certain = true;
  std::vector<PlusRegularRound> rounds;
};

// Throws StructuralError if `c` is not +-regular and ConfigCapExceeded from
// the independence test.
PlusRegularOutcome pit_plus_regular(const Circuit& c,
                                    const PlusRegularConfig& config = {});

}  // namespace ncpit

#endif  // NCPIT_PLUS_REGULAR_H_
