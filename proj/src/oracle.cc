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

#include "ncpit/oracle.h"

#include <algorithm>
#include <optional>
#include <string>

#include "ncpit/errors.h"

namespace ncpit {
namespace {

std::size_t require_homogeneous(const NcPoly& f, const char* op) {
  if (!f.is_homogeneous()) {
    throw UsageError(std::string(op) + " needs a homogeneous polynomial");
  }
  return f.degree().value_or(0);
}

// Calls visit(I) for every k-subset of {1..d} in lexicographic order until it
// returns true.
template <typename Visit>
bool for_each_subset(std::uint32_t d, std::uint32_t k, Visit&& visit) {
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    if (visit(idx)) return true;
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && idx[i] == d - k + i + 1) --i;
    if (i < 0) return false;
    ++idx[i];
    for (std::uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t common_length(std::span<const LinearProduct> products,
                          std::uint32_t num_vars) {
  if (products.empty()) throw UsageError("no products given");
  const std::size_t d = products[0].size();
  for (const LinearProduct& p : products) {
    if (p.size() != d) throw UsageError("products differ in length");
    for (const LinForm& l : p) {
      if (l.num_vars() != num_vars) {
        throw UsageError("linear form has the wrong number of variables");
      }
    }
  }
  return d;
}

}  // namespace

NcPoly expand(const Circuit& c, const ExpandBudget& budget) {
  if (budget.max_terms == 0 || budget.max_degree == 0) {
    throw UsageError("expansion budgets must be positive");
  }
  const PrimeField& f = c.field();
  const std::vector<bool> live = c.reachable();
  std::vector<std::uint32_t> last_use(c.size(), 0);
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (!live[i] || !c.gate(i).is_binary()) continue;
    last_use[c.gate(i).left] = i;
    last_use[c.gate(i).right] = i;
  }
  std::vector<std::optional<NcPoly>> value(c.size());
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (!live[i]) continue;
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kInput:
        value[i] = NcPoly::variable(f, c.num_vars(), g.var);
        break;
      case GateKind::kConst:
        value[i] = NcPoly::constant(f, c.num_vars(), g.value);
        break;
      case GateKind::kAdd:
        value[i] = *value[g.left] + *value[g.right];
        break;
      case GateKind::kMul: {
        const NcPoly& a = *value[g.left];
        const NcPoly& b = *value[g.right];
        if (!a.is_zero() && !b.is_zero() &&
            *a.degree() + *b.degree() > budget.max_degree) {
          throw BudgetExceeded(BudgetKind::kDegree,
                               "expansion exceeds degree " +
                                   std::to_string(budget.max_degree) +
                                   " at gate g" + std::to_string(g.label));
        }
        value[i] = multiply(a, b, budget.max_terms);
        break;
      }
    }
    if (value[i]->size() > budget.max_terms) {
      throw BudgetExceeded(BudgetKind::kTerms,
                           "expansion exceeds " +
                               std::to_string(budget.max_terms) + " terms");
    }
    if (g.is_binary()) {
      if (last_use[g.left] == i && g.left != c.output()) value[g.left].reset();
      if (last_use[g.right] == i && g.right != c.output()) {
        value[g.right].reset();
      }
    }
  }
  return *value[c.output()];
}

NcPoly apply_position_map(const NcPoly& f, std::size_t position,
                          const Matrix& a) {
  const PrimeField& field = f.field();
  const std::uint32_t n = f.num_vars();
  if (!(a.field() == field) || a.rows() != n || a.cols() != n) {
    throw UsageError("position map must be an n x n matrix over the field");
  }
  if (rank(a) != n) throw UsageError("position map is singular");
  if (f.is_zero()) return f;
  const std::size_t d = require_homogeneous(f, "apply_position_map");
  if (position == 0 || position > d) {
    throw UsageError("position " + std::to_string(position) +
                     " outside 1.." + std::to_string(d));
  }
  NcPoly out(field, n);
  for (const auto& [w, c] : f.terms()) {
    Word image = w;
    const std::uint32_t i = w[position - 1];
    for (std::uint32_t k = 1; k <= n; ++k) {
      const std::uint64_t coeff = a(k - 1, i - 1);
      if (coeff == 0) continue;
      image[position - 1] = k;
      out.add_term(image, field.mul(c, coeff));
    }
  }
  return out;
}

NcPoly set_multilinearize(const NcPoly& f) {
  const std::size_t d = require_homogeneous(f, "set_multilinearize");
  NcPoly out(f.field(), static_cast<std::uint32_t>(f.num_vars() * d));
  for (const auto& [w, c] : f.terms()) {
    Word renamed(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      renamed[j] = static_cast<std::uint32_t>((w[j] - 1) * d + j + 1);
    }
    out.add_term(renamed, c);
  }
  return out;
}

void ProjPoly::add_term(const ProjMonomial& m, std::uint64_t c) {
  c = field_.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void ProjPoly::add_scaled(const ProjPoly& other, std::uint64_t c) {
  if (other.positions_ != positions_ || !(other.field_ == field_)) {
    throw UsageError("projections over different position sets");
  }
  for (const auto& [m, v] : other.terms_) add_term(m, field_.mul(v, c));
}

ProjPoly project(const NcPoly& f, std::span<const std::uint32_t> positions) {
  std::vector<std::uint32_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw UsageError("repeated position in projection set");
  }
  ProjPoly out(f.field(), f.num_vars(), sorted);
  if (f.is_zero()) return out;
  const std::size_t d = require_homogeneous(f, "project");
  if (!sorted.empty() && (sorted.front() == 0 || sorted.back() > d)) {
    throw UsageError("projection position outside 1.." + std::to_string(d));
  }
  std::vector<bool> kept(d + 1, false);
  for (std::uint32_t j : sorted) kept[j] = true;
  for (const auto& [w, c] : f.terms()) {
    ProjMonomial m;
    m.exponents.assign(f.num_vars(), 0);
    for (std::uint32_t j = 1; j <= d; ++j) {
      if (kept[j]) {
        m.ordered.emplace_back(j, w[j - 1]);
      } else {
        ++m.exponents[w[j - 1] - 1];
      }
    }
    out.add_term(m, c);
  }
  return out;
}

NcPoly expand_product(const PrimeField& field, std::uint32_t num_vars,
                      const LinearProduct& product, std::size_t max_terms) {
  NcPoly acc = NcPoly::constant(field, num_vars, 1);
  for (const LinForm& l : product) {
    if (l.num_vars() != num_vars) {
      throw UsageError("linear form has the wrong number of variables");
    }
    NcPoly form(field, num_vars);
    for (std::uint32_t i = 0; i < num_vars; ++i) {
      form.add_term({i + 1}, l.coeffs[i]);
    }
    acc = multiply(acc, form, max_terms);
  }
  return acc;
}

std::vector<std::uint32_t> find_isolating_set(
    const PrimeField& field, std::uint32_t num_vars,
    std::span<const LinearProduct> products,
    std::span<const std::uint64_t> beta, std::size_t max_terms) {
  const std::size_t d = common_length(products, num_vars);
  if (beta.size() != products.size()) {
    throw UsageError("need one scalar per product");
  }
  NcPoly f(field, num_vars);
  for (std::size_t i = 0; i < products.size(); ++i) {
    if (field.reduce(beta[i]) == 0) throw UsageError("scalars must be nonzero");
    f = f + expand_product(field, num_vars, products[i], max_terms).scaled(
                beta[i]);
  }
  if (f.is_zero()) return {};
  std::vector<std::uint32_t> found;
  for (std::uint32_t k = 0; k <= d; ++k) {
    const bool hit = for_each_subset(
        static_cast<std::uint32_t>(d), k,
        [&](const std::vector<std::uint32_t>& set) {
          if (project(f, set).is_zero()) return false;
          found = set;
          return true;
        });
    if (hit) return found;
  }
  throw Error("no isolating set found; projection onto all positions failed");
}

std::vector<std::uint32_t> find_uniform_isolating_set(
    const PrimeField& field, std::uint32_t num_vars,
    std::span<const LinearProduct> products, std::size_t max_combinations,
    std::size_t max_terms) {
  const std::size_t d = common_length(products, num_vars);
  const std::size_t s = products.size();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (combos > max_combinations / (field.modulus() - 1) + 1) {
      combos = max_combinations + 1;
      break;
    }
    combos *= field.modulus() - 1;
  }
  if (combos > max_combinations) {
    throw BudgetExceeded(BudgetKind::kTerms,
                         "too many scalar vectors to enumerate");
  }
  std::vector<NcPoly> expanded;
  for (const LinearProduct& p : products) {
    expanded.push_back(expand_product(field, num_vars, p, max_terms));
  }
  std::vector<std::vector<std::uint64_t>> betas;
  std::vector<std::uint64_t> beta(s, 1);
  while (true) {
    betas.push_back(beta);
    std::size_t i = 0;
    while (i < s && beta[i] == field.modulus() - 1) beta[i++] = 1;
    if (i == s) break;
    ++beta[i];
  }
  std::vector<bool> zero(betas.size());
  for (std::size_t b = 0; b < betas.size(); ++b) {
    NcPoly f(field, num_vars);
    for (std::size_t i = 0; i < s; ++i) {
      f = f + expanded[i].scaled(betas[b][i]);
    }
    zero[b] = f.is_zero();
  }
  std::vector<std::uint32_t> found;
  for (std::uint32_t k = 0; k <= d; ++k) {
    const bool hit = for_each_subset(
        static_cast<std::uint32_t>(d), k,
        [&](const std::vector<std::uint32_t>& set) {
          std::vector<ProjPoly> projected;
          for (const NcPoly& p : expanded) projected.push_back(project(p, set));
          for (std::size_t b = 0; b < betas.size(); ++b) {
            if (zero[b]) continue;
            ProjPoly sum(field, num_vars, set);
            for (std::size_t i = 0; i < s; ++i) {
              sum.add_scaled(projected[i], betas[b][i]);
            }
            if (sum.is_zero()) return false;
          }
          found = set;
          return true;
        });
    if (hit) return found;
  }
  throw Error("no isolating set found; projection onto all positions failed");
}

}  // namespace ncpit
