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

#include "ncpit/lin_forms.h"

#include <algorithm>

#include "ncpit/errors.h"

namespace ncpit {

bool LinForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](std::uint64_t c) { return c == 0; });
}

LinForm LinForm::unit(std::size_t n, std::size_t var_index0) {
  LinForm f{std::vector<std::uint64_t>(n, 0)};
  f.coeffs.at(var_index0) = 1;
  return f;
}

std::optional<CanonicalForm> canonicalize(const PrimeField& field,
                                          const LinForm& form) {
  auto lead = std::find_if(form.coeffs.begin(), form.coeffs.end(),
                           [](std::uint64_t c) { return c != 0; });
  if (lead == form.coeffs.end()) return std::nullopt;
  const std::uint64_t scalar = *lead;
  const std::uint64_t inv = field.inv(scalar);
  CanonicalForm out{form, scalar};
  for (auto& c : out.form.coeffs) c = field.mul(c, inv);
  return out;
}

std::optional<LetterRef> LinAlphabet::intern(const LinForm& form) {
  if (form.num_vars() != num_vars_) {
    throw UsageError("linear form has " + std::to_string(form.num_vars()) +
                     " coefficients, alphabet expects " +
                     std::to_string(num_vars_));
  }
  auto canon = canonicalize(field_, form);
  if (!canon) return std::nullopt;
  auto [it, inserted] = index_.try_emplace(
      canon->form, static_cast<std::uint32_t>(forms_.size() + 1));
  if (inserted) forms_.push_back(canon->form);
  return LetterRef{it->second, canon->scalar};
}

AlphabetBuild build_alphabet(const PrimeField& field, std::size_t num_vars,
                             std::span<const LinForm> forms) {
  AlphabetBuild out{LinAlphabet(field, num_vars), {}, {}};
  out.assignment.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto ref = out.alphabet.intern(forms[i]);
    if (!ref) out.zero_forms.push_back(i);
    out.assignment.push_back(ref);
  }
  return out;
}

RowDependencies max_indep_rows(const Matrix& m) {
  const PrimeField& f = m.field();
  const std::size_t cols = m.cols();

  // Echelon basis; each basis vector carries its expression over the pivot
  // rows chosen so far (tracked in `combo`, indexed by pivot ordinal).
  struct BasisRow {
    std::vector<std::uint64_t> vec;
    std::vector<std::uint64_t> combo;
    std::size_t lead;
  };
  std::vector<BasisRow> basis;
  RowDependencies out;

  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::uint64_t> vec(cols);
    for (std::size_t c = 0; c < cols; ++c) vec[c] = m(r, c);
    // combo expresses (original row r) - vec as a combination of pivots.
    std::vector<std::uint64_t> combo(out.pivots.size(), 0);
    for (const BasisRow& b : basis) {
      const std::uint64_t coef = vec[b.lead];
      if (coef == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        vec[c] = f.sub(vec[c], f.mul(coef, b.vec[c]));
      }
      for (std::size_t k = 0; k < b.combo.size(); ++k) {
        combo[k] = f.add(combo[k], f.mul(coef, b.combo[k]));
      }
    }
    auto lead = std::find_if(vec.begin(), vec.end(),
                             [](std::uint64_t x) { return x != 0; });
    if (lead == vec.end()) {
      out.expressions.emplace(r, std::move(combo));
      continue;
    }
    // New pivot: vec = row_r - combo, normalized so vec[lead] = 1.
    const std::size_t lead_col = static_cast<std::size_t>(lead - vec.begin());
    const std::uint64_t inv = f.inv(*lead);
    for (auto& x : vec) x = f.mul(x, inv);
    std::vector<std::uint64_t> new_combo(out.pivots.size() + 1, 0);
    for (std::size_t k = 0; k < combo.size(); ++k) {
      new_combo[k] = f.mul(f.neg(combo[k]), inv);
    }
    new_combo.back() = inv;
    out.pivots.push_back(r);
    // Keep the basis fully reduced on the new lead column so later rows
    // reduce against a consistent echelon form.
    for (BasisRow& b : basis) {
      const std::uint64_t coef = b.vec[lead_col];
      b.combo.resize(out.pivots.size(), 0);
      if (coef == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        b.vec[c] = f.sub(b.vec[c], f.mul(coef, vec[c]));
      }
      for (std::size_t k = 0; k < new_combo.size(); ++k) {
        b.combo[k] = f.sub(b.combo[k], f.mul(coef, new_combo[k]));
      }
    }
    basis.push_back(BasisRow{std::move(vec), std::move(new_combo), lead_col});
  }
  // Expressions recorded before later pivots appeared are shorter; pad them.
  for (auto& [row, combo] : out.expressions) combo.resize(out.pivots.size(), 0);
  return out;
}

}  // namespace ncpit
