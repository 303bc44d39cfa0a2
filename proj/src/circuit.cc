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

#include "ncpit/circuit.h"

#include <algorithm>
#include <string>
#include <utility>

#include "ncpit/errors.h"

namespace ncpit {

Circuit::Circuit(const PrimeField& field, std::uint32_t num_vars,
                 std::vector<Gate> gates, std::uint32_t output)
    : field_(field), num_vars_(num_vars), gates_(std::move(gates)),
      output_(output) {
  if (gates_.empty()) throw UsageError("circuit has no gates");
  if (output_ >= gates_.size()) throw UsageError("output gate out of range");
  for (std::uint32_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (i > 0 && g.label <= gates_[i - 1].label) {
      throw UsageError("gate labels must strictly increase");
    }
    switch (g.kind) {
      case GateKind::kInput:
        if (g.var == 0 || g.var > num_vars_) {
          throw UsageError("gate g" + std::to_string(g.label) +
                           " reads x" + std::to_string(g.var) +
                           " but the circuit has " +
                           std::to_string(num_vars_) + " variables");
        }
        break;
      case GateKind::kConst:
        if (g.value >= field_.modulus()) {
          throw UsageError("constant not reduced modulo p");
        }
        break;
      case GateKind::kAdd:
      case GateKind::kMul:
        if (g.left >= i || g.right >= i) {
          throw UsageError("gate g" + std::to_string(g.label) +
                           " references a later gate");
        }
        break;
    }
  }
}

std::vector<bool> Circuit::reachable() const {
  std::vector<bool> seen(gates_.size(), false);
  seen[output_] = true;
  for (std::size_t i = gates_.size(); i-- > 0;) {
    if (!seen[i] || !gates_[i].is_binary()) continue;
    seen[gates_[i].left] = true;
    seen[gates_[i].right] = true;
  }
  return seen;
}

std::vector<std::vector<std::uint32_t>> Circuit::consumers() const {
  const std::vector<bool> live = reachable();
  std::vector<std::vector<std::uint32_t>> out(gates_.size());
  for (std::uint32_t i = 0; i < gates_.size(); ++i) {
    if (!live[i] || !gates_[i].is_binary()) continue;
    out[gates_[i].left].push_back(i);
    out[gates_[i].right].push_back(i);
  }
  return out;
}

Circuit Circuit::with_field(const PrimeField& field) const {
  std::vector<Gate> gates = gates_;
  for (Gate& g : gates) {
    if (g.kind == GateKind::kConst) {
      g.value = field.reduce_signed(field_.to_signed(g.value));
    }
  }
  return Circuit(field, num_vars_, std::move(gates), output_);
}

std::uint32_t CircuitBuilder::push(Gate g) {
  g.label = gates_.size() + 1;
  gates_.push_back(g);
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

std::uint32_t CircuitBuilder::input(std::uint32_t var) {
  if (var == 0 || var > num_vars_) throw UsageError("variable out of range");
  Gate g;
  g.kind = GateKind::kInput;
  g.var = var;
  return push(g);
}

std::uint32_t CircuitBuilder::constant(std::uint64_t residue) {
  Gate g;
  g.kind = GateKind::kConst;
  g.value = field_.reduce(residue);
  return push(g);
}

std::uint32_t CircuitBuilder::constant_signed(std::int64_t value) {
  return constant(field_.reduce_signed(value));
}

std::uint32_t CircuitBuilder::add(std::uint32_t a, std::uint32_t b) {
  if (a >= gates_.size() || b >= gates_.size()) {
    throw UsageError("operand does not exist yet");
  }
  Gate g;
  g.kind = GateKind::kAdd;
  g.left = a;
  g.right = b;
  return push(g);
}

std::uint32_t CircuitBuilder::mul(std::uint32_t a, std::uint32_t b) {
  if (a >= gates_.size() || b >= gates_.size()) {
    throw UsageError("operand does not exist yet");
  }
  Gate g;
  g.kind = GateKind::kMul;
  g.left = a;
  g.right = b;
  return push(g);
}

std::uint32_t CircuitBuilder::sub(std::uint32_t a, std::uint32_t b) {
  return add(a, scale(field_.modulus() - 1, b));
}

std::uint32_t CircuitBuilder::scale(std::uint64_t c, std::uint32_t a) {
  return mul(constant(c), a);
}

std::uint32_t CircuitBuilder::product(std::span<const std::uint32_t> factors) {
  if (factors.empty()) throw UsageError("empty product");
  std::uint32_t acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
  return acc;
}

std::uint32_t CircuitBuilder::sum(std::span<const std::uint32_t> terms) {
  if (terms.empty()) throw UsageError("empty sum");
  if (terms.size() == 1) return terms[0];
  const std::size_t mid = terms.size() / 2;
  const std::uint32_t l = sum(terms.first(mid));
  const std::uint32_t r = sum(terms.subspan(mid));
  return add(l, r);
}

Circuit CircuitBuilder::build(std::uint32_t output) const {
  return Circuit(field_, num_vars_, gates_, output);
}

std::vector<BigInt> syntactic_degrees(const Circuit& c) {
  std::vector<BigInt> deg(c.size());
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kInput:
        deg[i] = 1;
        break;
      case GateKind::kConst:
        deg[i] = 0;
        break;
      case GateKind::kAdd:
        deg[i] = std::max(deg[g.left], deg[g.right]);
        break;
      case GateKind::kMul:
        deg[i] = deg[g.left] + deg[g.right];
        break;
    }
  }
  return deg;
}

BigInt syntactic_degree(const Circuit& c) {
  return syntactic_degrees(c)[c.output()];
}

Circuit fold_constants(const Circuit& c, bool keep_additive_zeros) {
  const PrimeField& f = c.field();
  std::vector<Gate> gates = c.gates();
  std::vector<std::uint32_t> alias(gates.size());
  auto is_const = [&](std::uint32_t i) {
    return gates[i].kind == GateKind::kConst;
  };
  for (std::uint32_t i = 0; i < gates.size(); ++i) {
    alias[i] = i;
    Gate& g = gates[i];
    if (!g.is_binary()) continue;
    const std::uint32_t l = alias[g.left];
    const std::uint32_t r = alias[g.right];
    g.left = l;
    g.right = r;
    const bool lc = is_const(l);
    const bool rc = is_const(r);
    const bool lz = lc && gates[l].value == 0;
    const bool rz = rc && gates[r].value == 0;
    if (g.kind == GateKind::kAdd) {
      if (lc && rc) {
        g = Gate{GateKind::kConst, g.label, 0, f.add(gates[l].value, gates[r].value), 0, 0};
      } else if (lz && !keep_additive_zeros) {
        alias[i] = r;
      } else if (rz && !keep_additive_zeros) {
        alias[i] = l;
      }
    } else {
      if (lz || rz) {
        g = Gate{GateKind::kConst, g.label, 0, 0, 0, 0};
      } else if (lc && rc) {
        g = Gate{GateKind::kConst, g.label, 0, f.mul(gates[l].value, gates[r].value), 0, 0};
      }
    }
  }
  return Circuit(f, c.num_vars(), std::move(gates), alias[c.output()]);
}

HomogeneityCheck check_homogeneous(const Circuit& c) {
  const Circuit folded = fold_constants(c);
  const std::vector<BigInt> deg = syntactic_degrees(folded);
  const std::vector<bool> live = folded.reachable();
  for (std::uint32_t i = 0; i < folded.size(); ++i) {
    const Gate& g = folded.gate(i);
    if (!live[i] || g.kind != GateKind::kAdd) continue;
    if (deg[g.left] != deg[g.right]) return {false, g.label};
  }
  return {true, std::nullopt};
}

Matrix evaluate_matrix(const Circuit& c, std::size_t dim,
                       std::span<const Matrix> assignment) {
  if (assignment.size() != c.num_vars()) {
    throw UsageError("expected " + std::to_string(c.num_vars()) +
                     " matrices, got " + std::to_string(assignment.size()));
  }
  for (const Matrix& m : assignment) {
    if (m.rows() != dim || m.cols() != dim || !(m.field() == c.field())) {
      throw UsageError("assignment matrices must be " + std::to_string(dim) +
                       "x" + std::to_string(dim) + " over the circuit field");
    }
  }
  const std::vector<bool> live = c.reachable();
  std::vector<std::optional<Matrix>> value(c.size());
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (!live[i]) continue;
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kInput:
        value[i] = assignment[g.var - 1];
        break;
      case GateKind::kConst:
        value[i] = Matrix::scalar(c.field(), dim, g.value);
        break;
      case GateKind::kAdd:
        value[i] = *value[g.left] + *value[g.right];
        break;
      case GateKind::kMul:
        value[i] = *value[g.left] * *value[g.right];
        break;
    }
  }
  return *value[c.output()];
}

}  // namespace ncpit
