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

#ifndef NCPIT_ORACLE_H_
#define NCPIT_ORACLE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ncpit/circuit.h"
#include "ncpit/field.h"
#include "ncpit/lin_forms.h"
#include "ncpit/matrix.h"
#include "ncpit/sparse_poly.h"

namespace ncpit {

struct ExpandBudget {
  std::size_t max_terms = std::size_t{1} << 20;
  std::size_t max_degree = 64;
};

// Exact expansion of the polynomial computed by `c`. Throws BudgetExceeded
// when an intermediate polynomial has more than max_terms terms or a degree
// above max_degree.
NcPoly expand(const Circuit& c, const ExpandBudget& budget = {});

// Replaces, in every monomial, the variable at position `position` (1-based)
// by its image under A: x_i -> sum_k A(k, i) x_k. Requires f homogeneous of
// degree >= position and A invertible; throws UsageError otherwise.
NcPoly apply_position_map(const NcPoly& f, std::size_t position,
                          const Matrix& a);

// Renames x_i at position j to x_{(i-1)*d + j} for f homogeneous of degree d;
// the result lives in n*d variables.
NcPoly set_multilinearize(const NcPoly& f);

// Monomial of an I-projected polynomial: (position, variable) pairs for the
// positions in I, and the exponent vector of the commuting z_1..z_n.
struct ProjMonomial {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ordered;
  std::vector<std::uint32_t> exponents;

  friend auto operator<=>(const ProjMonomial&, const ProjMonomial&) = default;
  friend bool operator==(const ProjMonomial&, const ProjMonomial&) = default;
};

class ProjPoly {
 public:
  ProjPoly(const PrimeField& field, std::uint32_t num_vars,
           std::vector<std::uint32_t> positions)
      : field_(field), num_vars_(num_vars), positions_(std::move(positions)) {}

  const PrimeField& field() const { return field_; }
  std::uint32_t num_vars() const { return num_vars_; }
  const std::vector<std::uint32_t>& positions() const { return positions_; }
  const std::map<ProjMonomial, std::uint64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ProjMonomial& m, std::uint64_t c);
  // this += c * other (same positions).
  void add_scaled(const ProjPoly& other, std::uint64_t c);

 private:
  PrimeField field_;
  std::uint32_t num_vars_;
  std::vector<std::uint32_t> positions_;
  std::map<ProjMonomial, std::uint64_t> terms_;
};

// I-projection of a homogeneous f; `positions` are 1-based, any order,
// without repeats, and at most deg f.
ProjPoly project(const NcPoly& f, std::span<const std::uint32_t> positions);

// A product L_1 L_2 ... L_D of linear forms.
using LinearProduct = std::vector<LinForm>;

NcPoly expand_product(const PrimeField& field, std::uint32_t num_vars,
                      const LinearProduct& product,
                      std::size_t max_terms = std::size_t{1} << 20);

// Smallest position set I (by size, then lexicographically) with
// sum_i beta_i P_i = 0  iff  sum_i beta_i P_{i,I} = 0. Products must share
// their length D; beta must be nonzero.
std::vector<std::uint32_t> find_isolating_set(
    const PrimeField& field, std::uint32_t num_vars,
    std::span<const LinearProduct> products,
    std::span<const std::uint64_t> beta,
    std::size_t max_terms = std::size_t{1} << 20);

// Smallest I for which the equivalence above holds for every choice of
// nonzero beta at once, checked by enumerating (p-1)^s vectors; throws
// BudgetExceeded if that exceeds max_combinations.
std::vector<std::uint32_t> find_uniform_isolating_set(
    const PrimeField& field, std::uint32_t num_vars,
    std::span<const LinearProduct> products,
    std::size_t max_combinations = std::size_t{1} << 16,
    std::size_t max_terms = std::size_t{1} << 20);

}  // namespace ncpit

#endif  // NCPIT_ORACLE_H_
