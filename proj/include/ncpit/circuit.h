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

#ifndef NCPIT_CIRCUIT_H_
#define NCPIT_CIRCUIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncpit/field.h"
#include "ncpit/matrix.h"

namespace ncpit {

enum class GateKind : std::uint8_t { kInput, kConst, kAdd, kMul };

// One node of a noncommutative arithmetic circuit. Operands are indices into
// Circuit::gates() and always precede the gate itself; Mul multiplies
// left * right in that order.
struct Gate {
  GateKind kind = GateKind::kConst;
  std::uint64_t label = 0;  // the k of `g<k>` in the text format
  std::uint32_t var = 0;    // kInput: 1-based variable index
  std::uint64_t value = 0;  // kConst: residue
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  bool is_binary() const {
    return kind == GateKind::kAdd || kind == GateKind::kMul;
  }
};

// A DAG of binary +/x gates over x_1..x_n and field constants, stored in
// topological order. Immutable once constructed.
class Circuit {
 public:
  // Validates operand order, variable range, label monotonicity and the
  // output index; throws UsageError on violation.
  Circuit(const PrimeField& field, std::uint32_t num_vars,
          std::vector<Gate> gates, std::uint32_t output);

  const PrimeField& field() const { return field_; }
  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::uint32_t index) const { return gates_.at(index); }
  std::uint32_t output() const { return output_; }
  std::uint64_t label(std::uint32_t index) const { return gates_.at(index).label; }

  // Gates with a path to the output (the output included).
  std::vector<bool> reachable() const;
  // Consumers of each gate, restricted to reachable gates; an operand used
  // twice by one gate (mul g g) is listed twice.
  std::vector<std::vector<std::uint32_t>> consumers() const;

  // Same gates over a different prime; constants are reinterpreted through
  // their symmetric representative.
  Circuit with_field(const PrimeField& field) const;

 private:
  PrimeField field_;
  std::uint32_t num_vars_;
  std::vector<Gate> gates_;
  std::uint32_t output_;
};

// Builds circuits programmatically; gates are labelled 1, 2, ... in creation
// order and identified by their index.
class CircuitBuilder {
 public:
  CircuitBuilder(const PrimeField& field, std::uint32_t num_vars)
      : field_(field), num_vars_(num_vars) {}

  std::uint32_t input(std::uint32_t var);
  std::uint32_t constant(std::uint64_t residue);
  std::uint32_t constant_signed(std::int64_t value);
  std::uint32_t add(std::uint32_t a, std::uint32_t b);
  std::uint32_t mul(std::uint32_t a, std::uint32_t b);
  // a - b, as a + (-1) * b.
  std::uint32_t sub(std::uint32_t a, std::uint32_t b);
  // c * a, as mul(const c, a).
  std::uint32_t scale(std::uint64_t c, std::uint32_t a);
  // Left-to-right product / balanced sum over a non-empty list.
  std::uint32_t product(std::span<const std::uint32_t> factors);
  std::uint32_t sum(std::span<const std::uint32_t> terms);

  const PrimeField& field() const { return field_; }
  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t size() const { return gates_.size(); }

  Circuit build(std::uint32_t output) const;

 private:
  std::uint32_t push(Gate g);

  PrimeField field_;
  std::uint32_t num_vars_;
  std::vector<Gate> gates_;
};

// Text format (.ncc):
//   field <p>
//   vars <n>
//   g<k> = x<i> | const <c> | add g<a> g<b> | mul g<a> g<b>
//   output g<k>
// `#` starts a comment; blank lines are ignored; gate ids strictly increase.
Circuit parse_circuit(std::string_view text);
// If `field_override` is set, the header's prime is replaced and constants
// are read as integers modulo the override.
Circuit parse_circuit(std::string_view text,
                      std::optional<std::uint64_t> field_override);
std::string serialize(const Circuit& c);

// Input -> 1, Const -> 0, Mul -> sum, Add -> max.
std::vector<BigInt> syntactic_degrees(const Circuit& c);
BigInt syntactic_degree(const Circuit& c);

// Collapses every degree-0 subcircuit into a Const gate and removes additive
// and multiplicative zeros (add(0, g) -> g, mul(0, g) -> 0). Gate indices and
// labels are preserved; bypassed gates become unreachable. With
// `keep_additive_zeros`, add(0, g) stays an Add gate so that + gates survive
// the substitution of zero.
Circuit fold_constants(const Circuit& c, bool keep_additive_zeros = false);

struct HomogeneityCheck {
  bool homogeneous = true;
  std::optional<std::uint64_t> violating_label;
};

// Runs on the constant-folded circuit and inspects reachable gates only: every
// Add must combine operands of equal syntactic degree.
HomogeneityCheck check_homogeneous(const Circuit& c);

// Evaluates on dim x dim matrices, one per variable. Const(a) acts as a * I.
Matrix evaluate_matrix(const Circuit& c, std::size_t dim,
                       std::span<const Matrix> assignment);

}  // namespace ncpit

#endif  // NCPIT_CIRCUIT_H_
