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

#include "ncpit/plus_regular.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "ncpit/errors.h"

namespace ncpit {
namespace {

// Copies the part of `c` above `products` (reachable from the output without
// passing through a product) and turns product j into input y_{j+1}.
Circuit residual_circuit(const Circuit& c,
                         const std::vector<std::uint32_t>& products) {
  std::map<std::uint32_t, std::uint32_t> fresh;
  for (std::uint32_t j = 0; j < products.size(); ++j) fresh[products[j]] = j + 1;
  std::vector<bool> above(c.size(), false);
  above[c.output()] = true;
  for (std::uint32_t i = c.size(); i-- > 0;) {
    if (!above[i] || fresh.contains(i) || !c.gate(i).is_binary()) continue;
    above[c.gate(i).left] = true;
    above[c.gate(i).right] = true;
  }
  std::vector<Gate> gates;
  std::vector<std::uint32_t> index(c.size(), 0);
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (!above[i]) continue;
    Gate g = c.gate(i);
    if (auto it = fresh.find(i); it != fresh.end()) {
      g = Gate{GateKind::kInput, g.label, it->second, 0, 0, 0};
    } else if (g.kind == GateKind::kInput) {
      throw StructuralError("input g" + std::to_string(g.label) +
                            " is not below any product");
    } else if (g.is_binary()) {
      g.left = index[g.left];
      g.right = index[g.right];
    }
    index[i] = static_cast<std::uint32_t>(gates.size());
    gates.push_back(g);
  }
  return Circuit(c.field(), static_cast<std::uint32_t>(products.size()),
                 std::move(gates), index[c.output()]);
}

// Replaces y_j by its image: a fresh variable for independent products, a
// combination of them for dependent ones, 0 for zero products.
Circuit substitute(const Circuit& residual, const IndepResult& indep) {
  const PrimeField& f = residual.field();
  CircuitBuilder b(f, static_cast<std::uint32_t>(indep.independent.size()));
  std::vector<std::uint32_t> image_of_var(residual.num_vars() + 1, 0);
  std::vector<std::optional<std::uint32_t>> var_gate(indep.independent.size());
  auto fresh_var = [&](std::size_t k) {
    if (!var_gate[k]) var_gate[k] = b.input(static_cast<std::uint32_t>(k + 1));
    return *var_gate[k];
  };
  for (std::size_t k = 0; k < indep.independent.size(); ++k) {
    image_of_var[indep.independent[k] + 1] = fresh_var(k);
  }
  for (const auto& [j, coeffs] : indep.expressions) {
    std::vector<std::uint32_t> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      terms.push_back(coeffs[k] == 1 ? fresh_var(k)
                                     : b.scale(coeffs[k], fresh_var(k)));
    }
    image_of_var[j + 1] = terms.empty() ? b.constant(0) : b.sum(terms);
  }
  std::vector<std::uint32_t> index(residual.size());
  for (std::uint32_t i = 0; i < residual.size(); ++i) {
    const Gate& g = residual.gate(i);
    switch (g.kind) {
      case GateKind::kInput:
        index[i] = image_of_var[g.var];
        break;
      case GateKind::kConst:
        index[i] = b.constant(g.value);
        break;
      case GateKind::kAdd:
        index[i] = b.add(index[g.left], index[g.right]);
        break;
      case GateKind::kMul:
        index[i] = b.mul(index[g.left], index[g.right]);
        break;
    }
  }
  return b.build(index[residual.output()]);
}

}  // namespace

LayerFrontier extract_frontier(const PlusLayering& layering,
                               std::uint64_t fingerprint_seed) {
  const Circuit& c = layering.circuit;
  const std::uint32_t d = static_cast<std::uint32_t>(layering.num_layers);
  const bool normalization = layering.layer_degrees.at(0) > 1;
  if (!normalization && d < 2) {
    throw UsageError("nothing left to eliminate: one linear layer");
  }
  // Products are the non-+ leaves of the + blocks one level above the
  // region being collapsed.
  const std::uint32_t target = normalization ? d : d - 1;
  const auto consumers = c.consumers();
  std::vector<std::uint32_t> product_gates;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    if (g.kind == GateKind::kAdd || g.kind == GateKind::kConst) continue;
    if (layering.blocks_above[i] != target) continue;
    const bool feeds_sum = std::any_of(
        consumers[i].begin(), consumers[i].end(),
        [&](std::uint32_t u) { return c.gate(u).kind == GateKind::kAdd; });
    if (feeds_sum) product_gates.push_back(i);
  }

  SeededRng rng(fingerprint_seed);
  LayerFrontier out{residual_circuit(c, product_gates),
                    std::make_shared<SlpArena>(FingerprintKey::random(rng)),
                    LinAlphabet(c.field(), c.num_vars()),
                    {},
                    product_gates,
                    normalization,
                    layering.layer_degrees.at(normalization ? 0 : 1)};
  LinearEvaluator linear(c);
  ProductExtractor::LetterForm letter;
  if (normalization) {
    letter = [&](std::uint32_t g) -> std::optional<LinForm> {
      if (c.gate(g).kind != GateKind::kInput) return std::nullopt;
      return LinForm::unit(c.num_vars(), c.gate(g).var - 1);
    };
  } else {
    letter = [&](std::uint32_t g) -> std::optional<LinForm> {
      if (layering.layer_of[g] != 1) return std::nullopt;
      return linear.value(g).form;
    };
  }
  ProductExtractor extractor(c, out.arena, out.alphabet, letter);
  for (std::uint32_t g : product_gates) {
    out.products.push_back(extractor.extract(g));
    if (out.products.back().degree != out.product_degree) {
      throw StructuralError("product g" + std::to_string(c.label(g)) +
                            " has the wrong degree");
    }
  }
  return out;
}

PlusRegularOutcome pit_plus_regular(const Circuit& c,
                                    const PlusRegularConfig& config) {
  PlusRegularOutcome outcome;
  Circuit current = fold_constants(c, /*keep_additive_zeros=*/true);
  for (std::uint64_t round = 0;; ++round) {
    const Gate& top = current.gate(current.output());
    if (top.kind == GateKind::kConst) {
      outcome.is_zero = top.value == 0;
      return outcome;
    }
    auto classified = classify_plus_regular(current);
    if (auto* r = std::get_if<Rejection>(&classified)) {
      throw StructuralError("not +-regular: " + r->describe());
    }
    const PlusLayering& layering = std::get<PlusLayering>(classified);
    if (layering.num_layers == 1 && layering.layer_degrees[0] == 1) {
      LinearEvaluator linear(layering.circuit);
      outcome.is_zero = linear.value(layering.circuit.output()).form.is_zero();
      return outcome;
    }
    LayerFrontier frontier = extract_frontier(
        layering, SeededRng::derive(config.seed, round));
    const BigInt residual_degree = syntactic_degree(frontier.residual);
    if (residual_degree * frontier.product_degree !=
        syntactic_degree(layering.circuit)) {
      throw Error("internal: degree bookkeeping failed in round " +
                  std::to_string(round));
    }
    const IndepResult indep =
        max_lin_indep(frontier.products, frontier.alphabet, config.pistar);
    outcome.certain &= indep.certain;
    outcome.rounds.push_back(PlusRegularRound{
        layering.num_layers, frontier.normalization, frontier.products.size(),
        indep.independent.size()});
    current = fold_constants(substitute(frontier.residual, indep),
                             /*keep_additive_zeros=*/true);
  }
}

}  // namespace ncpit
