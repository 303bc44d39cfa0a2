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

#ifndef NCPIT_PISTAR_H_
#define NCPIT_PISTAR_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ncpit/field.h"
#include "ncpit/lin_forms.h"
#include "ncpit/oracle.h"
#include "ncpit/products.h"
#include "ncpit/slp.h"

namespace ncpit {

// Partition of nonzero products into classes of scalar multiples.
struct ScalarClasses {
  // Per product: index of its class representative (the smallest index in
  // the class); nullopt for zero products.
  std::vector<std::optional<std::size_t>> representative;
  // Per product: P_j = ratio[j] * P_{representative[j]}.
  std::vector<std::uint64_t> ratio;
  // False if some "same word" decision rests on fingerprints.
  bool certain = true;
};

ScalarClasses scalar_classes(std::span<const SigmaProduct> ps,
                             const SlpEqualityOptions& options = {});

struct ExplicitProduct {
  std::uint64_t scalar;
  LinearProduct forms;
};

// Keeps the letters at the given 1-based positions (in the given order) and
// the scalar. Throws ConfigCapExceeded when more than `cap` positions are
// requested.
ExplicitProduct restrict_to_positions(const SigmaProduct& p,
                                      const LinAlphabet& alphabet,
                                      std::span<const BigInt> positions,
                                      std::size_t cap);

struct PiStarConfig {
  std::uint64_t c_const = 4;
  SlpEqualityOptions equality;
};

struct IndepResult {
  std::vector<std::size_t> independent;
  // For every other index j: P_j = sum_k expressions[j][k] * P_{independent[k]}.
  std::map<std::size_t, std::vector<std::uint64_t>> expressions;
  // False if some decision rests on fingerprints.
  bool certain = true;
};

// Leftmost maximal linearly independent subset of the products with exact
// expressions of the others. Every product must use `alphabet` and one arena.
IndepResult max_lin_indep(std::span<const SigmaProduct> ps,
                          const LinAlphabet& alphabet,
                          const PiStarConfig& config = {});

}  // namespace ncpit

#endif  // NCPIT_PISTAR_H_
