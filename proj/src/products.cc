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

#include "ncpit/products.h"

#include <string>
#include <utility>

namespace ncpit {
namespace {

std::string gate_name(const Circuit& c, std::uint32_t g) {
  return "g" + std::to_string(c.label(g));
}

LinForm scaled(const PrimeField& f, const LinForm& form, std::uint64_t s) {
  LinForm out = form;
  for (auto& v : out.coeffs) v = f.mul(v, s);
  return out;
}

}  // namespace

LinearEvaluator::LinearEvaluator(const Circuit& circuit)
    : circuit_(circuit), memo_(circuit.size()) {}

const LinearValue& LinearEvaluator::value(std::uint32_t root) {
  const PrimeField& f = circuit_.field();
  std::vector<std::uint32_t> stack{root};
  while (!stack.empty()) {
    const std::uint32_t g = stack.back();
    if (memo_[g]) {
      stack.pop_back();
      continue;
    }
    const Gate& gate = circuit_.gate(g);
    if (gate.is_binary()) {
      if (!memo_[gate.left]) {
        stack.push_back(gate.left);
        continue;
      }
      if (!memo_[gate.right]) {
        stack.push_back(gate.right);
        continue;
      }
    }
    LinearValue v;
    switch (gate.kind) {
      case GateKind::kInput:
        v.is_scalar = false;
        v.form = LinForm::unit(circuit_.num_vars(), gate.var - 1);
        break;
      case GateKind::kConst:
        v.scalar = gate.value;
        break;
      case GateKind::kAdd: {
        const LinearValue& a = *memo_[gate.left];
        const LinearValue& b = *memo_[gate.right];
        if (a.is_scalar && a.scalar == 0) {
          v = b;
          break;
        }
        if (b.is_scalar && b.scalar == 0) {
          v = a;
          break;
        }
        if (a.is_scalar != b.is_scalar) {
          throw ProductShapeError(
              g, "gate " + gate_name(circuit_, g) +
                     " adds a constant to a linear form");
        }
        if (a.is_scalar) {
          v.scalar = f.add(a.scalar, b.scalar);
        } else {
          v.is_scalar = false;
          v.form = a.form;
          for (std::size_t i = 0; i < v.form.coeffs.size(); ++i) {
            v.form.coeffs[i] = f.add(v.form.coeffs[i], b.form.coeffs[i]);
          }
        }
        break;
      }
      case GateKind::kMul: {
        const LinearValue& a = *memo_[gate.left];
        const LinearValue& b = *memo_[gate.right];
        if (!a.is_scalar && !b.is_scalar) {
          throw ProductShapeError(
              g, "gate " + gate_name(circuit_, g) +
                     " multiplies two non-constant factors");
        }
        if (a.is_scalar && b.is_scalar) {
          v.scalar = f.mul(a.scalar, b.scalar);
        } else if (a.is_scalar) {
          v.is_scalar = false;
          v.form = scaled(f, b.form, a.scalar);
        } else {
          v.is_scalar = false;
          v.form = scaled(f, a.form, b.scalar);
        }
        break;
      }
    }
    memo_[g] = std::move(v);
    stack.pop_back();
  }
  return *memo_[root];
}

ProductExtractor::ProductExtractor(const Circuit& circuit,
                                   std::shared_ptr<SlpArena> arena,
                                   LinAlphabet& alphabet,
                                   LetterForm letter_form)
    : circuit_(circuit), arena_(std::move(arena)), alphabet_(alphabet),
      letter_form_(std::move(letter_form)), memo_(circuit.size()) {}

SigmaProduct ProductExtractor::extract(std::uint32_t gate) {
  const Partial& p = partial(gate);
  const PrimeField& f = circuit_.field();
  SigmaProduct out{f.elem(p.scalar), std::nullopt, p.degree};
  if (p.scalar != 0 && p.node) out.word = Slp(arena_, *p.node);
  return out;
}

const ProductExtractor::Partial& ProductExtractor::partial(
    std::uint32_t root) {
  const PrimeField& f = circuit_.field();
  // Letters are decided on first visit; only Mul gates wait for operands.
  std::vector<std::uint32_t> stack{root};
  while (!stack.empty()) {
    const std::uint32_t g = stack.back();
    if (memo_[g]) {
      stack.pop_back();
      continue;
    }
    const Gate& gate = circuit_.gate(g);
    if (gate.kind == GateKind::kConst) {
      memo_[g] = Partial{gate.value, std::nullopt, 0};
      stack.pop_back();
      continue;
    }
    if (std::optional<LinForm> form = letter_form_(g)) {
      const std::optional<LetterRef> ref = alphabet_.intern(*form);
      if (!ref) {
        memo_[g] = Partial{0, std::nullopt, 1};
      } else {
        memo_[g] = Partial{ref->scalar, arena_->letter(ref->letter), 1};
      }
      stack.pop_back();
      continue;
    }
    if (gate.kind != GateKind::kMul) {
      throw ProductShapeError(g, "gate " + gate_name(circuit_, g) +
                                     " is not part of a product of linear "
                                     "forms");
    }
    if (!memo_[gate.left]) {
      stack.push_back(gate.left);
      continue;
    }
    if (!memo_[gate.right]) {
      stack.push_back(gate.right);
      continue;
    }
    const Partial& a = *memo_[gate.left];
    const Partial& b = *memo_[gate.right];
    Partial v{f.mul(a.scalar, b.scalar), std::nullopt, a.degree + b.degree};
    if (v.scalar != 0) {
      if (a.node && b.node) {
        v.node = arena_->concat(*a.node, *b.node);
      } else {
        v.node = a.node ? a.node : b.node;
      }
    }
    memo_[g] = std::move(v);
    stack.pop_back();
  }
  return *memo_[root];
}

}  // namespace ncpit
