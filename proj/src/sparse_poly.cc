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

#include "ncpit/sparse_poly.h"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "ncpit/errors.h"

namespace ncpit {

std::size_t WordHash::operator()(const Word& w) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (std::uint32_t v : w) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

NcPoly NcPoly::constant(const PrimeField& field, std::uint32_t num_vars,
                        std::uint64_t c) {
  NcPoly p(field, num_vars);
  p.add_term({}, field.reduce(c));
  return p;
}

NcPoly NcPoly::variable(const PrimeField& field, std::uint32_t num_vars,
                        std::uint32_t var) {
  if (var == 0 || var > num_vars) throw UsageError("variable out of range");
  NcPoly p(field, num_vars);
  p.add_term({var}, 1);
  return p;
}

std::uint64_t NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<std::size_t> NcPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.size();
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

void NcPoly::add_term(const Word& w, std::uint64_t c) {
  c = field_.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void NcPoly::require_compatible(const NcPoly& other) const {
  if (!(field_ == other.field_) || num_vars_ != other.num_vars_) {
    throw UsageError("polynomials over different rings");
  }
}

NcPoly NcPoly::scaled(std::uint64_t c) const {
  NcPoly out(field_, num_vars_);
  c = field_.reduce(c);
  if (c == 0) return out;
  for (const auto& [w, v] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), w, field_.mul(v, c));
  }
  return out;
}

NcPoly NcPoly::operator+(const NcPoly& other) const {
  require_compatible(other);
  NcPoly out = *this;
  for (const auto& [w, v] : other.terms_) out.add_term(w, v);
  return out;
}

NcPoly NcPoly::operator-(const NcPoly& other) const {
  require_compatible(other);
  NcPoly out = *this;
  for (const auto& [w, v] : other.terms_) out.add_term(w, field_.neg(v));
  return out;
}

NcPoly NcPoly::operator*(const NcPoly& other) const {
  return multiply(*this, other, static_cast<std::size_t>(-1));
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ &&
         a.terms_ == b.terms_;
}

std::uint64_t NcPoly::evaluate_commutative(
    std::span<const std::uint64_t> point) const {
  if (point.size() != num_vars_) throw UsageError("point has wrong arity");
  std::uint64_t total = 0;
  for (const auto& [w, c] : terms_) {
    std::uint64_t m = c;
    for (std::uint32_t v : w) m = field_.mul(m, field_.reduce(point[v - 1]));
    total = field_.add(total, m);
  }
  return total;
}

std::string NcPoly::dump() const {
  std::ostringstream os;
  for (const auto& [w, c] : terms_) {
    os << c << ':';
    if (w.empty()) os << " 1";
    for (std::uint32_t v : w) os << " x_" << v;
    os << '\n';
  }
  return os.str();
}

NcPoly multiply(const NcPoly& a, const NcPoly& b, std::size_t max_terms) {
  if (!(a.field() == b.field()) || a.num_vars() != b.num_vars()) {
    throw UsageError("polynomials over different rings");
  }
  const PrimeField& f = a.field();
  std::unordered_map<Word, std::uint64_t, WordHash> acc;
  acc.reserve(std::min(a.size() * b.size(), max_terms) + 1);
  Word w;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      w.assign(u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      auto [it, inserted] = acc.try_emplace(w, 0);
      it->second = f.add(it->second, f.mul(cu, cv));
      if (inserted && acc.size() > max_terms) {
        throw BudgetExceeded(BudgetKind::kTerms,
                             "expansion exceeds " + std::to_string(max_terms) +
                                 " terms");
      }
    }
  }
  NcPoly out(f, a.num_vars());
  std::vector<std::pair<Word, std::uint64_t>> sorted;
  sorted.reserve(acc.size());
  for (auto& [word, c] : acc) {
    if (c != 0) sorted.emplace_back(word, c);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return ShortLex()(x.first, y.first); });
  for (auto& [word, c] : sorted) out.add_term(word, c);
  return out;
}

}  // namespace ncpit
