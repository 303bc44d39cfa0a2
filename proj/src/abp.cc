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

#include "ncpit/abp.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "ncpit/errors.h"

namespace ncpit {

void ProductAbp::validate() const {
  if (scalars.size() != products.size()) {
    throw UsageError("need one scalar per product");
  }
  for (const LinearProduct& p : products) {
    if (p.size() != length()) throw UsageError("products differ in length");
    for (const LinForm& l : p) {
      if (l.num_vars() != num_vars) {
        throw UsageError("linear form has the wrong number of variables");
      }
    }
  }
}

LayerBasis rs_initial(const ProductAbp& abp) {
  abp.validate();
  const std::size_t m = abp.size();
  LayerBasis out{0, {}, Matrix(abp.field, 0, m)};
  if (std::any_of(abp.scalars.begin(), abp.scalars.end(),
                  [&](std::uint64_t s) { return abp.field.reduce(s) != 0; })) {
    out.monomials.push_back({});
    out.coeffs = Matrix(abp.field, 1, m);
    for (std::size_t j = 0; j < m; ++j) {
      out.coeffs(0, j) = abp.field.reduce(abp.scalars[j]);
    }
  }
  return out;
}

LayerBasis rs_advance(const LayerBasis& basis, std::span<const LinForm> forms) {
  const PrimeField& f = basis.coeffs.field();
  const std::size_t m = basis.coeffs.cols();
  if (forms.size() != m) throw UsageError("need one form per product");
  const std::size_t n = m == 0 ? 0 : forms[0].num_vars();
  for (const LinForm& l : forms) {
    if (l.num_vars() != n) throw UsageError("forms differ in arity");
  }

  struct Candidate {
    Word monomial;
    std::vector<std::uint64_t> row;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
    for (std::uint32_t v = 0; v < n; ++v) {
      Candidate cand{basis.monomials[i], std::vector<std::uint64_t>(m)};
      cand.monomial.push_back(v + 1);
      bool nonzero = false;
      for (std::size_t j = 0; j < m; ++j) {
        cand.row[j] = f.mul(basis.coeffs(i, j), forms[j].coeffs[v]);
        nonzero |= cand.row[j] != 0;
      }
      if (nonzero) candidates.push_back(std::move(cand));
    }
  }
  // Basis monomials are distinct, so extended monomials are too.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.monomial < b.monomial;
            });

  Matrix all(f, candidates.size(), m);
  for (std::size_t r = 0; r < candidates.size(); ++r) {
    for (std::size_t j = 0; j < m; ++j) all(r, j) = candidates[r].row[j];
  }
  const RowDependencies deps = max_indep_rows(all);
  LayerBasis out{basis.degree + 1, {}, Matrix(f, deps.pivots.size(), m)};
  for (std::size_t k = 0; k < deps.pivots.size(); ++k) {
    const Candidate& c = candidates[deps.pivots[k]];
    out.monomials.push_back(c.monomial);
    for (std::size_t j = 0; j < m; ++j) out.coeffs(k, j) = c.row[j];
  }
  return out;
}

RowDependencies rs_dependencies(const ProductAbp& abp) {
  LayerBasis basis = rs_initial(abp);
  std::vector<LinForm> column(abp.size());
  for (std::size_t q = 0; q < abp.length(); ++q) {
    for (std::size_t j = 0; j < abp.size(); ++j) {
      column[j] = abp.products[j][q];
    }
    basis = rs_advance(basis, column);
  }
  return max_indep_rows(basis.coeffs.transpose());
}

}  // namespace ncpit
