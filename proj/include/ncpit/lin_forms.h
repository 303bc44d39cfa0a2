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

#ifndef NCPIT_LIN_FORMS_H_
#define NCPIT_LIN_FORMS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ncpit/field.h"
#include "ncpit/matrix.h"

namespace ncpit {

// Homogeneous linear form sum_i coeffs[i] * x_{i+1}; coefficients are residues
// of the ambient field.
struct LinForm {
  std::vector<std::uint64_t> coeffs;

  std::size_t num_vars() const { return coeffs.size(); }
  bool is_zero() const;
  static LinForm unit(std::size_t n, std::size_t var_index0);

  friend bool operator==(const LinForm&, const LinForm&) = default;
  friend auto operator<=>(const LinForm&, const LinForm&) = default;
};

struct CanonicalForm {
  LinForm form;          // leading nonzero coefficient is 1
  std::uint64_t scalar;  // original = scalar * form
};

// Scales the first nonzero coefficient to 1. Returns nullopt for the zero form.
std::optional<CanonicalForm> canonicalize(const PrimeField& field,
                                          const LinForm& form);

// A letter of a LinAlphabet together with the scalar relating the original
// form to the canonical one.
struct LetterRef {
  std::uint32_t letter;  // 1-based
  std::uint64_t scalar;
};

// Pairwise non-proportional canonical forms, numbered 1..r in order of first
// occurrence.
class LinAlphabet {
 public:
  LinAlphabet(const PrimeField& field, std::size_t num_vars)
      : field_(field), num_vars_(num_vars) {}

  // Interns `form`; nullopt when the form is zero (zero forms are never
  // letters).
  std::optional<LetterRef> intern(const LinForm& form);

  const PrimeField& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return forms_.size(); }
  // `letter` is 1-based.
  const LinForm& form(std::uint32_t letter) const {
    return forms_.at(letter - 1);
  }

 private:
  PrimeField field_;
  std::size_t num_vars_;
  std::vector<LinForm> forms_;
  std::map<LinForm, std::uint32_t> index_;
};

struct AlphabetBuild {
  LinAlphabet alphabet;
  // Per input form; nullopt marks a zero form.
  std::vector<std::optional<LetterRef>> assignment;
  std::vector<std::size_t> zero_forms;
};

AlphabetBuild build_alphabet(const PrimeField& field, std::size_t num_vars,
                             std::span<const LinForm> forms);

// Result of leftmost-greedy row selection. `pivots` lists the chosen rows in
// increasing order; every other row r has an entry in `expressions` with
// row_r = sum_k expressions[r][k] * row_{pivots[k]}.
struct RowDependencies {
  std::vector<std::size_t> pivots;
  std::map<std::size_t, std::vector<std::uint64_t>> expressions;

  bool is_pivot(std::size_t row) const { return !expressions.contains(row); }
};

// Leftmost maximal independent subset of the rows of `m` (smallest indices win)
// with exact expressions of the remaining rows.
RowDependencies max_indep_rows(const Matrix& m);

}  // namespace ncpit

#endif  // NCPIT_LIN_FORMS_H_
