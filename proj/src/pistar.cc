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

#include "ncpit/pistar.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "ncpit/abp.h"
#include "ncpit/errors.h"

namespace ncpit {
namespace {

std::uint64_t saturate(const BigInt& v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

ScalarClasses scalar_classes(std::span<const SigmaProduct> ps,
                             const SlpEqualityOptions& options) {
  ScalarClasses out;
  out.representative.assign(ps.size(), std::nullopt);
  out.ratio.assign(ps.size(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const SigmaProduct& p = ps[j];
    if (p.is_zero()) continue;
    const PrimeField& f = p.scalar.field();
    for (std::size_t r : reps) {
      const SigmaProduct& q = ps[r];
      if (q.degree != p.degree) continue;
      if (p.word) {
        const WordEquality eq = equals(*p.word, *q.word, options);
        if (!eq.equal) continue;
        out.certain &= eq.certain;
      }
      out.representative[j] = r;
      out.ratio[j] = f.mul(p.scalar.value(), f.inv(q.scalar.value()));
      break;
    }
    if (!out.representative[j]) {
      out.representative[j] = j;
      out.ratio[j] = 1;
      reps.push_back(j);
    }
  }
  return out;
}

ExplicitProduct restrict_to_positions(const SigmaProduct& p,
                                      const LinAlphabet& alphabet,
                                      std::span<const BigInt> positions,
                                      std::size_t cap) {
  if (positions.size() > cap) {
    throw ConfigCapExceeded("restriction to " +
                            std::to_string(positions.size()) +
                            " positions exceeds the cap of " +
                            std::to_string(cap));
  }
  ExplicitProduct out{p.scalar.value(), {}};
  if (positions.empty()) return out;
  if (!p.word) throw RangeError("position outside a degree-0 product");
  for (const BigInt& k : positions) {
    out.forms.push_back(alphabet.form(letter_at(*p.word, k)));
  }
  return out;
}

IndepResult max_lin_indep(std::span<const SigmaProduct> ps,
                          const LinAlphabet& alphabet,
                          const PiStarConfig& config) {
  const PrimeField& f = alphabet.field();
  IndepResult out;
  const ScalarClasses classes = scalar_classes(ps, config.equality);
  out.certain = classes.certain;

  std::size_t num_reps = 0;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (classes.representative[j] == j) ++num_reps;
  }
  const BigInt ell = num_reps;
  const std::uint64_t bound = saturate(config.c_const * ell * ell * ell * ell);
  const std::uint64_t cap = saturate(config.c_const * ell * ell * ell * ell * ell);

  // Expressions of dependent representatives, keyed by independent index.
  std::map<std::size_t, std::map<std::size_t, std::uint64_t>> rep_expr;
  std::vector<std::size_t> indep;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (classes.representative[i] != i) continue;
    const SigmaProduct& pi = ps[i];
    std::vector<std::size_t> candidates;
    std::set<BigInt> positions;
    for (std::size_t a : indep) {
      if (ps[a].degree != pi.degree || !pi.word) continue;
      const MismatchScan scan =
          mismatch_positions_up_to(*ps[a].word, *pi.word, bound, config.equality);
      out.certain &= scan.certain;
      if (scan.too_many) continue;
      candidates.push_back(a);
      positions.insert(scan.positions.begin(), scan.positions.end());
    }
    if (candidates.empty()) {
      indep.push_back(i);
      continue;
    }
    if (positions.size() > cap) {
      throw ConfigCapExceeded(
          "mismatch positions exceed c*l^5 = " + std::to_string(cap) +
          "; raise c_const");
    }
    const std::vector<BigInt> t(positions.begin(), positions.end());
    ProductAbp abp{f, static_cast<std::uint32_t>(alphabet.num_vars()), {}, {}};
    auto add_column = [&](std::size_t j) {
      ExplicitProduct e = restrict_to_positions(ps[j], alphabet, t, cap);
      abp.products.push_back(std::move(e.forms));
      abp.scalars.push_back(e.scalar);
    };
    for (std::size_t a : candidates) add_column(a);
    add_column(i);
    const RowDependencies deps = rs_dependencies(abp);
    const std::size_t last = candidates.size();
    if (deps.is_pivot(last)) {
      indep.push_back(i);
      continue;
    }
    std::map<std::size_t, std::uint64_t>& expr = rep_expr[i];
    const std::vector<std::uint64_t>& coeffs = deps.expressions.at(last);
    for (std::size_t k = 0; k < deps.pivots.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const std::size_t col = deps.pivots[k];
      if (col >= candidates.size()) {
        throw Error("internal: restricted candidate set became dependent");
      }
      expr[candidates[col]] = f.add(expr[candidates[col]], coeffs[k]);
    }
  }

  out.independent = indep;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t k = 0; k < indep.size(); ++k) slot[indep[k]] = k;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const std::optional<std::size_t> rep = classes.representative[j];
    if (rep == j && slot.contains(j)) continue;
    std::vector<std::uint64_t> coeffs(indep.size(), 0);
    if (rep) {
      if (slot.contains(*rep)) {
        coeffs[slot[*rep]] = classes.ratio[j];
      } else {
        for (const auto& [a, c] : rep_expr.at(*rep)) {
          coeffs[slot.at(a)] = f.mul(classes.ratio[j], c);
        }
      }
    }
    out.expressions.emplace(j, std::move(coeffs));
  }
  return out;
}

}  // namespace ncpit
