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

#include "ncpit/generators.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ncpit/errors.h"
#include "ncpit/rng.h"

namespace ncpit {
namespace {

std::uint64_t nonzero(SeededRng& rng, const PrimeField& f) {
  return sample_nonzero(rng, f).value();
}

template <typename T>
void shuffle(SeededRng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.uniform(i)]);
  }
}

// ---------------------------------------------------------------------------
// Plus-regular circuits, described layer by layer before emission.

struct Term {
  std::uint64_t coeff;
  // Layer 1: variables (1-based). Higher layers: blocks of the layer below.
  std::vector<std::uint32_t> factors;
};
using Block = std::vector<Term>;

class LayeredGenerator {
 public:
  LayeredGenerator(const GenOptions& opt, SeededRng& rng)
      : opt_(opt), rng_(rng), field_(opt.prime) {}

  Generated run() {
    if (opt_.layers == 0) throw UsageError("need at least one + layer");
    if (opt_.num_vars == 0) throw UsageError("need at least one variable");
    for (int attempt = 0;; ++attempt) {
      const bool shrink = attempt >= 20;
      draw_shape(shrink);
      if (estimate_top() <= opt_.max_terms_estimate || attempt >= 60) break;
    }
    const std::uint32_t top_layer = opt_.layers - 1;
    CircuitBuilder b(field_, opt_.num_vars);
    builder_ = &b;
    memo_.clear();
    inputs_.assign(opt_.num_vars + 1, std::nullopt);

    const int mode = static_cast<int>(rng_.uniform(3));
    const std::uint32_t r =
        opt_.layers >= 2 ? static_cast<std::uint32_t>(rng_.uniform(
                               layers_[top_layer - 1].size()))
                         : 0;
    const bool antisymmetric =
        opt_.force_zero && mode == 0 && opt_.layers >= 2 &&
        2 * layer_degree(top_layer - 1) <= opt_.degree &&
        4 * estimates_[top_layer - 1][r] * estimates_[top_layer - 1][r] <=
            opt_.max_terms_estimate;
    const bool perturb = !opt_.force_zero && mode == 0;
    const bool difference = (opt_.force_zero && !antisymmetric) || perturb;

    std::vector<std::uint32_t> summands;
    if (antisymmetric) {
      target_ = {top_layer - 1, r};
      rewrite_target(false);
      modified_ = {target_};
      const std::uint32_t a = emit_block(top_layer - 1, r, false);
      const std::uint32_t a2 = emit_block(top_layer - 1, r, true);
      const std::uint64_t c = nonzero(rng_, field_);
      const std::uint32_t c1 = b.constant(c);
      summands.push_back(b.mul(c1, b.mul(a, a2)));
      const std::uint32_t c2 = b.constant(field_.neg(c));
      summands.push_back(b.mul(c2, b.mul(a2, a)));
    } else if (difference) {
      pick_target();
      rewrite_target(perturb);
      summands = emit_terms(top_layer, 0, false, false);
      const auto other = emit_terms(top_layer, 0, true, true);
      summands.insert(summands.end(), other.begin(), other.end());
    } else {
      summands = emit_terms(top_layer, 0, false, false);
    }
    shuffle(rng_, summands);
    const std::uint32_t out = b.sum(summands);
    Generated g{b.build(out), std::nullopt};
    if (opt_.force_zero) g.is_zero = true;
    builder_ = nullptr;
    return g;
  }

 private:
  std::uint64_t layer_degree(std::uint32_t layer) const {
    std::uint64_t d = 1;
    for (std::uint32_t l = 0; l <= layer; ++l) d *= arity_[l];
    return d;
  }

  void draw_shape(bool shrink) {
    const std::uint32_t layers = opt_.layers;
    const std::uint64_t budget = std::max<std::uint32_t>(opt_.degree, 1);
    arity_.assign(layers, 1);
    // Bottom products of inputs are rarer; they exercise the extra round.
    if (!shrink && rng_.coin(0.25)) arity_[0] = 2;
    for (std::uint32_t l = 1; l < layers; ++l) {
      arity_[l] = shrink ? 1 : static_cast<std::uint32_t>(rng_.range(1, 3));
    }
    while (layer_degree(layers - 1) > budget) {
      auto it = std::max_element(arity_.begin(), arity_.end());
      *it -= 1;
    }
    const std::uint32_t max_fan = std::max<std::uint32_t>(opt_.fan_in, 2);
    layers_.assign(layers, {});
    for (std::uint32_t l = 0; l < layers; ++l) {
      const std::size_t pool =
          l + 1 == layers ? 1 : static_cast<std::size_t>(rng_.range(2, 3));
      for (std::size_t k = 0; k < pool; ++k) {
        Block block;
        const std::uint32_t terms =
            shrink ? 2 : static_cast<std::uint32_t>(rng_.range(2, max_fan));
        for (std::uint32_t t = 0; t < terms; ++t) {
          Term term{nonzero(rng_, field_), {}};
          const std::uint64_t choices =
              l == 0 ? opt_.num_vars : layers_[l - 1].size();
          for (std::uint32_t f = 0; f < arity_[l]; ++f) {
            term.factors.push_back(static_cast<std::uint32_t>(
                rng_.uniform(choices) + (l == 0 ? 1 : 0)));
          }
          block.push_back(std::move(term));
        }
        layers_[l].push_back(std::move(block));
      }
    }
  }

  double estimate_top() {
    estimates_.clear();
    std::vector<double> prev;
    for (std::uint32_t l = 0; l < layers_.size(); ++l) {
      std::vector<double> cur;
      for (const Block& block : layers_[l]) {
        double total = 0;
        for (const Term& t : block) {
          double prod = 1;
          for (std::uint32_t f : t.factors) prod *= l == 0 ? 1 : prev[f];
          total += prod;
        }
        cur.push_back(total);
      }
      estimates_.push_back(cur);
      prev = std::move(cur);
    }
    // The force-zero variants at most double the top block.
    return 2 * prev.front();
  }

  // Chooses a block reachable from the top.
  void pick_target() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> reachable;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{
        {opt_.layers - 1, 0}};
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      reachable.push_back(cur);
      if (cur.first == 0) continue;
      for (const Term& t : layers_[cur.first][cur.second]) {
        for (std::uint32_t f : t.factors) stack.push_back({cur.first - 1, f});
      }
    }
    std::sort(reachable.begin(), reachable.end());
    target_ = reachable[rng_.uniform(reachable.size())];
    // Every block that uses the target (directly or not) is re-emitted.
    modified_ = {target_};
    for (std::uint32_t l = target_.first + 1; l < layers_.size(); ++l) {
      for (std::uint32_t k = 0; k < layers_[l].size(); ++k) {
        for (const Term& t : layers_[l][k]) {
          for (std::uint32_t f : t.factors) {
            if (modified_.contains({l - 1, f})) modified_.insert({l, k});
          }
        }
      }
    }
  }

  // Builds an equivalent rewrite of the target block (or, with `perturb`, a
  // rewrite that changes one coefficient).
  void rewrite_target(bool perturb) {
    Block terms = layers_[target_.first][target_.second];
    const std::size_t j = rng_.uniform(terms.size());
    const Term picked = terms[j];
    if (field_.modulus() > 2) {
      std::uint64_t a;
      do {
        a = nonzero(rng_, field_);
      } while (a == picked.coeff);
      terms[j].coeff = field_.sub(picked.coeff, a);
      terms.push_back(Term{a, picked.factors});
    } else {
      terms.push_back(picked);
      terms.push_back(picked);
    }
    if (perturb) {
      Term& t = terms.back();
      t.coeff = field_.add(t.coeff, nonzero(rng_, field_));
      if (t.coeff == 0) t.coeff = 1;
    }
    shuffle(rng_, terms);
    rewritten_ = std::move(terms);
  }

  std::uint32_t input(std::uint32_t var) {
    if (!inputs_[var]) inputs_[var] = builder_->input(var);
    return *inputs_[var];
  }

  std::vector<std::uint32_t> emit_terms(std::uint32_t l, std::uint32_t k,
                                        bool variant, bool negate) {
    const bool changed = variant && modified_.contains({l, k});
    const bool is_target = changed && std::make_pair(l, k) == target_;
    const Block& block = is_target ? rewritten_ : layers_[l][k];
    std::vector<std::uint32_t> out;
    for (const Term& t : block) {
      std::vector<std::uint32_t> factors;
      for (std::uint32_t f : t.factors) {
        factors.push_back(l == 0 ? input(f) : emit_block(l - 1, f, changed));
      }
      const std::uint32_t prod = builder_->product(factors);
      const std::uint64_t c = negate ? field_.neg(t.coeff) : t.coeff;
      out.push_back(builder_->mul(builder_->constant(c), prod));
    }
    return out;
  }

  std::uint32_t emit_block(std::uint32_t l, std::uint32_t k, bool variant) {
    const bool changed = variant && modified_.contains({l, k});
    const auto key = std::make_tuple(l, k, changed);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint32_t g = builder_->sum(emit_terms(l, k, changed, false));
    memo_[key] = g;
    return g;
  }

  const GenOptions& opt_;
  SeededRng& rng_;
  PrimeField field_;
  std::vector<std::uint32_t> arity_;
  std::vector<std::vector<Block>> layers_;
  std::vector<std::vector<double>> estimates_;
  std::pair<std::uint32_t, std::uint32_t> target_{0, 0};
  std::set<std::pair<std::uint32_t, std::uint32_t>> modified_;
  Block rewritten_;
  CircuitBuilder* builder_ = nullptr;
  std::map<std::tuple<std::uint32_t, std::uint32_t, bool>, std::uint32_t>
      memo_;
  std::vector<std::optional<std::uint32_t>> inputs_;
};

// ---------------------------------------------------------------------------
// Sums of products of linear forms.

using Form = std::vector<std::uint64_t>;  // coefficient per variable

struct SpsTerm {
  std::uint64_t scalar;
  std::vector<Form> forms;
};

class SpsGenerator {
 public:
  SpsGenerator(const GenOptions& opt, SeededRng& rng)
      : opt_(opt), rng_(rng), field_(opt.prime) {}

  Generated run() {
    if (opt_.num_vars == 0) throw UsageError("need at least one variable");
    const std::uint32_t max_s = std::max<std::uint32_t>(opt_.fan_in, 1);
    const std::uint32_t max_d = std::max<std::uint32_t>(opt_.degree, 1);
    std::vector<SpsTerm> terms;
    const bool near_zero = !opt_.force_zero && max_s >= 2 && rng_.coin(0.5);
    if (opt_.force_zero || near_zero) {
      const std::uint32_t s =
          static_cast<std::uint32_t>(rng_.range(2, std::max<std::uint32_t>(max_s, 2)));
      const std::uint32_t d = static_cast<std::uint32_t>(rng_.range(1, max_d));
      std::vector<std::uint32_t> groups;
      switch (s) {
        case 2: groups = {2}; break;
        case 3: groups = {3}; break;
        case 4: groups = {2, 2}; break;
        default: groups = rng_.coin() ? std::vector<std::uint32_t>{2, 3}
                                      : std::vector<std::uint32_t>{3, 2};
      }
      for (std::uint32_t size : groups) {
        if (size == 2) {
          add_pair(terms, d);
        } else {
          add_split(terms, d);
        }
      }
      if (near_zero) perturb(terms);
    } else {
      const std::uint32_t s = static_cast<std::uint32_t>(rng_.range(1, max_s));
      const bool mixed = rng_.coin(0.2);
      const std::uint32_t d = static_cast<std::uint32_t>(rng_.range(1, max_d));
      for (std::uint32_t i = 0; i < s; ++i) {
        const std::uint32_t di =
            mixed ? static_cast<std::uint32_t>(rng_.range(1, max_d)) : d;
        terms.push_back(SpsTerm{nonzero(rng_, field_), random_product(di)});
      }
    }
    shuffle(rng_, terms);
    return Generated{emit(terms), opt_.force_zero ? std::optional<bool>(true)
                                                  : std::nullopt};
  }

 private:
  Form random_form(bool wide) {
    Form f(opt_.num_vars, 0);
    const std::uint32_t a = static_cast<std::uint32_t>(rng_.uniform(opt_.num_vars));
    f[a] = nonzero(rng_, field_);
    if (wide && opt_.num_vars >= 2) {
      std::uint32_t b;
      do {
        b = static_cast<std::uint32_t>(rng_.uniform(opt_.num_vars));
      } while (b == a);
      f[b] = nonzero(rng_, field_);
    }
    return f;
  }

  // At most 8 positions carry two variables so that explicit expansion stays
  // small.
  std::vector<Form> random_product(std::uint32_t d) {
    std::vector<Form> forms;
    const std::uint64_t wide = rng_.uniform(std::min<std::uint32_t>(d, 8) + 1);
    std::vector<bool> is_wide(d, false);
    for (std::uint64_t i = 0; i < wide; ++i) is_wide[rng_.uniform(d)] = true;
    for (std::uint32_t q = 0; q < d; ++q) forms.push_back(random_form(is_wide[q]));
    return forms;
  }

  // beta P - beta P' with P' a rescaled copy of P.
  void add_pair(std::vector<SpsTerm>& terms, std::uint32_t d) {
    const std::uint64_t beta = nonzero(rng_, field_);
    std::vector<Form> p = random_product(d);
    std::vector<Form> q = p;
    std::uint64_t scalar = field_.neg(beta);
    const std::uint64_t a = nonzero(rng_, field_);
    if (d >= 2) {
      const std::size_t i = rng_.uniform(d);
      std::size_t j;
      do {
        j = rng_.uniform(d);
      } while (j == i);
      for (auto& c : q[i]) c = field_.mul(c, a);
      for (auto& c : q[j]) c = field_.mul(c, field_.inv(a));
    } else {
      for (auto& c : q[0]) c = field_.mul(c, a);
      scalar = field_.mul(scalar, field_.inv(a));
    }
    terms.push_back(SpsTerm{beta, std::move(p)});
    terms.push_back(SpsTerm{scalar, std::move(q)});
  }

  // beta P - beta P[i <- L_a] - beta P[i <- L - L_a].
  void add_split(std::vector<SpsTerm>& terms, std::uint32_t d) {
    const std::uint64_t beta = nonzero(rng_, field_);
    std::vector<Form> p = random_product(d);
    const std::size_t i = rng_.uniform(d);
    if (opt_.num_vars >= 2) p[i] = random_form(true);
    Form la = p[i];
    Form lb(opt_.num_vars);
    // Split the first nonzero coefficient, moving the rest into L_b.
    std::size_t first = 0;
    while (p[i][first] == 0) ++first;
    for (std::size_t v = 0; v < la.size(); ++v) {
      if (v != first) la[v] = 0;
      lb[v] = field_.sub(p[i][v], la[v]);
    }
    if (std::all_of(lb.begin(), lb.end(), [](std::uint64_t c) { return c == 0; })) {
      const std::uint64_t a = field_.modulus() > 2 ? 2 : 1;
      la[first] = field_.mul(p[i][first], field_.inv(a));
      lb[first] = field_.sub(p[i][first], la[first]);
    }
    std::vector<Form> pa = p;
    std::vector<Form> pb = p;
    pa[i] = la;
    pb[i] = lb;
    terms.push_back(SpsTerm{beta, std::move(p)});
    terms.push_back(SpsTerm{field_.neg(beta), std::move(pa)});
    terms.push_back(SpsTerm{field_.neg(beta), std::move(pb)});
  }

  void perturb(std::vector<SpsTerm>& terms) {
    SpsTerm& t = terms[rng_.uniform(terms.size())];
    Form& f = t.forms[rng_.uniform(t.forms.size())];
    const std::size_t v = rng_.uniform(f.size());
    f[v] = field_.add(f[v], nonzero(rng_, field_));
  }

  std::uint32_t emit_form(CircuitBuilder& b, const Form& f) {
    std::vector<std::uint32_t> parts;
    for (std::uint32_t v = 0; v < f.size(); ++v) {
      if (f[v] == 0) continue;
      const std::uint32_t x = input(b, v + 1);
      parts.push_back(f[v] == 1 && rng_.coin() ? x : b.scale(f[v], x));
    }
    if (parts.empty()) {
      const std::uint32_t zero = b.constant(0);
      return b.mul(zero, input(b, 1));
    }
    return b.sum(parts);
  }

  std::uint32_t input(CircuitBuilder& b, std::uint32_t var) {
    if (!inputs_[var]) inputs_[var] = b.input(var);
    return *inputs_[var];
  }

  Circuit emit(const std::vector<SpsTerm>& terms) {
    CircuitBuilder b(field_, opt_.num_vars);
    inputs_.assign(opt_.num_vars + 1, std::nullopt);
    std::map<Form, std::uint32_t> form_gate;
    std::vector<std::uint32_t> summands;
    for (const SpsTerm& t : terms) {
      std::vector<std::uint32_t> factors;
      for (const Form& f : t.forms) {
        auto it = form_gate.find(f);
        if (it == form_gate.end() || rng_.coin(0.3)) {
          const std::uint32_t g = emit_form(b, f);
          form_gate[f] = g;
          factors.push_back(g);
        } else {
          factors.push_back(it->second);
        }
      }
      std::uint32_t prod = rng_.coin() ? b.product(factors) : balanced(b, factors);
      summands.push_back(b.mul(b.constant(t.scalar), prod));
    }
    return b.build(b.sum(summands));
  }

  static std::uint32_t balanced(CircuitBuilder& b,
                                std::span<const std::uint32_t> factors) {
    if (factors.size() == 1) return factors[0];
    const std::size_t mid = factors.size() / 2;
    const std::uint32_t left = balanced(b, factors.first(mid));
    return b.mul(left, balanced(b, factors.subspan(mid)));
  }

  const GenOptions& opt_;
  SeededRng& rng_;
  PrimeField field_;
  std::vector<std::optional<std::uint32_t>> inputs_;
};

// ---------------------------------------------------------------------------
// Small general circuits for the low-degree test.

Generated generate_lowdeg(const GenOptions& opt, SeededRng& rng) {
  if (opt.num_vars == 0) throw UsageError("need at least one variable");
  const PrimeField field(opt.prime);
  const std::uint32_t max_deg = std::max<std::uint32_t>(opt.degree, 1);
  CircuitBuilder b(field, opt.num_vars);
  std::vector<std::uint32_t> pool;
  std::vector<std::uint32_t> deg;
  for (std::uint32_t v = 1; v <= opt.num_vars; ++v) {
    pool.push_back(b.input(v));
    deg.push_back(1);
  }
  pool.push_back(b.constant(nonzero(rng, field)));
  deg.push_back(0);
  const std::size_t steps = rng.range(4, 12);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::uint32_t a = static_cast<std::uint32_t>(rng.uniform(pool.size()));
    const std::uint32_t c = static_cast<std::uint32_t>(rng.uniform(pool.size()));
    if (rng.coin() && deg[a] + deg[c] <= max_deg) {
      pool.push_back(b.mul(pool[a], pool[c]));
      deg.push_back(deg[a] + deg[c]);
    } else {
      const std::uint32_t scaled = b.scale(nonzero(rng, field), pool[c]);
      pool.push_back(b.add(pool[a], scaled));
      deg.push_back(std::max(deg[a], deg[c]));
    }
  }
  std::uint32_t out = static_cast<std::uint32_t>(pool.size() - 1);
  if (deg[out] == 0) {
    pool.push_back(b.mul(pool[out], pool[0]));
    out = static_cast<std::uint32_t>(pool.size() - 1);
  }
  Generated g{b.build(pool[out]), std::nullopt};
  if (opt.force_zero) {
    const Circuit& c = g.circuit;
    CircuitBuilder z(field, opt.num_vars);
    // Two copies of the same gates subtracted from each other.
    std::vector<std::uint32_t> first(c.size());
    std::vector<std::uint32_t> second(c.size());
    for (auto* copy : {&first, &second}) {
      for (std::uint32_t i = 0; i < c.size(); ++i) {
        const Gate& gate = c.gate(i);
        switch (gate.kind) {
          case GateKind::kInput: (*copy)[i] = z.input(gate.var); break;
          case GateKind::kConst: (*copy)[i] = z.constant(gate.value); break;
          case GateKind::kAdd:
            (*copy)[i] = z.add((*copy)[gate.left], (*copy)[gate.right]);
            break;
          case GateKind::kMul:
            (*copy)[i] = z.mul((*copy)[gate.left], (*copy)[gate.right]);
            break;
        }
      }
    }
    g = Generated{z.build(z.sub(first[c.output()], second[c.output()])), true};
  }
  return g;
}

}  // namespace

std::string gen_class_name(GenClass c) {
  switch (c) {
    case GenClass::kPlusRegular: return "plus-regular";
    case GenClass::kSps: return "sps";
    case GenClass::kLowDegree: return "lowdeg";
    case GenClass::kSquaring: return "squaring";
  }
  return "unknown";
}

std::optional<GenClass> parse_gen_class(const std::string& name) {
  for (GenClass c : {GenClass::kPlusRegular, GenClass::kSps,
                     GenClass::kLowDegree, GenClass::kSquaring}) {
    if (gen_class_name(c) == name) return c;
  }
  return std::nullopt;
}

Generated generate(const GenOptions& options) {
  SeededRng rng(options.seed);
  switch (options.kind) {
    case GenClass::kPlusRegular:
      return LayeredGenerator(options, rng).run();
    case GenClass::kSps:
      return SpsGenerator(options, rng).run();
    case GenClass::kLowDegree:
      return generate_lowdeg(options, rng);
    case GenClass::kSquaring: {
      const PrimeField field(options.prime);
      return Generated{squaring_circuit(field, options.layers), false};
    }
  }
  throw UsageError("unknown generator class");
}

Circuit squaring_circuit(const PrimeField& field, std::uint32_t s) {
  CircuitBuilder b(field, 2);
  const std::uint32_t x = b.input(1);
  std::uint32_t g = b.add(x, b.input(2));
  for (std::uint32_t i = 0; i < s; ++i) g = b.mul(g, g);
  return b.build(g);
}

Circuit commutator_circuit(const PrimeField& field) {
  CircuitBuilder b(field, 2);
  const std::uint32_t x1 = b.input(1);
  const std::uint32_t x2 = b.input(2);
  const std::uint32_t x12 = b.mul(x1, x2);
  return b.build(b.sub(x12, b.mul(x2, x1)));
}

}  // namespace ncpit
