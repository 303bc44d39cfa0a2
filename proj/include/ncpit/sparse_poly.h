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

#ifndef NCPIT_SPARSE_POLY_H_
#define NCPIT_SPARSE_POLY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncpit/field.h"

namespace ncpit {

// A monomial of the free algebra: 1-based variable indices, left to right.
using Word = std::vector<std::uint32_t>;

// Shorter words first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Explicit sparse noncommutative polynomial over Z_p in x_1..x_n. Zero
// coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Word, std::uint64_t, ShortLex>;

  NcPoly(const PrimeField& field, std::uint32_t num_vars)
      : field_(field), num_vars_(num_vars) {}

  static NcPoly constant(const PrimeField& field, std::uint32_t num_vars,
                         std::uint64_t c);
  static NcPoly variable(const PrimeField& field, std::uint32_t num_vars,
                         std::uint32_t var);

  const PrimeField& field() const { return field_; }
  std::uint32_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t coeff(const Word& w) const;

  // Length of the longest word; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  // True for the zero polynomial as well.
  bool is_homogeneous() const;

  // Adds c * w, dropping the term if the coefficient becomes zero.
  void add_term(const Word& w, std::uint64_t c);

  NcPoly scaled(std::uint64_t c) const;
  NcPoly operator+(const NcPoly& other) const;
  NcPoly operator-(const NcPoly& other) const;
  NcPoly operator*(const NcPoly& other) const;
  friend bool operator==(const NcPoly& a, const NcPoly& b);

  // Value after letting the variables commute, at scalars point[0..n-1].
  std::uint64_t evaluate_commutative(
      std::span<const std::uint64_t> point) const;

  // One `coeff: x_i1 x_i2 ...` line per term in ShortLex order; the empty
  // word prints as `1`.
  std::string dump() const;

 private:
  void require_compatible(const NcPoly& other) const;

  PrimeField field_;
  std::uint32_t num_vars_;
  Terms terms_;
};

// Product with a cap on the number of terms of the result (before
// cancellation is complete); throws BudgetExceeded(kTerms).
NcPoly multiply(const NcPoly& a, const NcPoly& b, std::size_t max_terms);

}  // namespace ncpit

#endif  // NCPIT_SPARSE_POLY_H_
