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

#ifndef NCPIT_ABP_H_
#define NCPIT_ABP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ncpit/field.h"
#include "ncpit/lin_forms.h"
#include "ncpit/matrix.h"
#include "ncpit/oracle.h"
#include "ncpit/sparse_poly.h"

namespace ncpit {

// m polynomials scalar_j * L_{j,1} ... L_{j,L}, all of the same length L.
struct ProductAbp {
  PrimeField field;
  std::uint32_t num_vars = 0;
  std::vector<LinearProduct> products;
  std::vector<std::uint64_t> scalars;

  std::size_t size() const { return products.size(); }
  std::size_t length() const {
    return products.empty() ? 0 : products.front().size();
  }
  // Throws UsageError on ragged lengths, arity mismatches or a missing
  // scalar.
  void validate() const;
};

// Degree-q monomials whose coefficient rows span every degree-q coefficient
// row of the m partial products. coeffs(i, j) is the coefficient of
// monomials[i] in the length-q prefix of product j.
struct LayerBasis {
  std::size_t degree = 0;
  std::vector<Word> monomials;
  Matrix coeffs;
};

// Layer 0: the empty monomial with the scalars as its row.
LayerBasis rs_initial(const ProductAbp& abp);

// Extends every basis monomial by every variable, using forms[j] as the next
// factor of product j, and keeps a leftmost row basis of the candidates
// sorted lexicographically by monomial.
LayerBasis rs_advance(const LayerBasis& basis, std::span<const LinForm> forms);

// Runs all layers and returns the leftmost maximal independent subset of the
// m polynomials with exact coefficients for the others.
RowDependencies rs_dependencies(const ProductAbp& abp);

}  // namespace ncpit

#endif  // NCPIT_ABP_H_
