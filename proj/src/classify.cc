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

#include "ncpit/classify.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ncpit/errors.h"

namespace ncpit {
namespace {

Rejection reject(std::string reason) { return Rejection{std::move(reason), {}}; }

Rejection reject_at(std::string reason, std::uint64_t label) {
  return Rejection{std::move(reason), label};
}

}  // namespace

std::string Rejection::describe() const {
  if (!gate_label) return reason;
  return reason + " (gate g" + std::to_string(*gate_label) + ")";
}

std::vector<BlockLeaf> block_leaves(const Circuit& c, std::uint32_t root) {
  const PrimeField& f = c.field();
  if (c.gate(root).kind != GateKind::kAdd) return {BlockLeaf{root, 1}};
  // Path counts from the root, pushed downwards in reverse topological order.
  std::map<std::uint32_t, std::uint64_t> paths;
  paths[root] = 1;
  std::vector<BlockLeaf> leaves;
  while (!paths.empty()) {
    auto it = std::prev(paths.end());
    const auto [g, count] = *it;
    paths.erase(it);
    const Gate& gate = c.gate(g);
    if (gate.kind != GateKind::kAdd) {
      leaves.push_back(BlockLeaf{g, count});
      continue;
    }
    for (std::uint32_t operand : {gate.left, gate.right}) {
      std::uint64_t& slot = paths[operand];
      slot = f.add(slot, count);
    }
  }
  std::reverse(leaves.begin(), leaves.end());
  return leaves;
}

std::variant<PlusLayering, Rejection> classify_plus_regular(const Circuit& c) {
  Circuit folded = fold_constants(c, /*keep_additive_zeros=*/true);
  const std::uint32_t out = folded.output();
  if (folded.gate(out).kind != GateKind::kAdd) {
    return reject_at("output gate is not a + gate", folded.label(out));
  }
  std::vector<BigInt> deg = syntactic_degrees(folded);
  const std::vector<bool> live = folded.reachable();
  auto is_zero_const = [&](std::uint32_t i) {
    return folded.gate(i).kind == GateKind::kConst && folded.gate(i).value == 0;
  };
  for (std::uint32_t i = 0; i < folded.size(); ++i) {
    const Gate& g = folded.gate(i);
    if (!live[i] || g.kind != GateKind::kAdd) continue;
    // Zero is homogeneous of every degree.
    if (is_zero_const(g.left) || is_zero_const(g.right)) continue;
    if (deg[g.left] != deg[g.right]) {
      return reject_at("circuit is not homogeneous", g.label);
    }
  }

  const auto consumers = folded.consumers();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> above(folded.size(), kUnset);
  above[out] = 1;
  for (std::uint32_t i = out; i-- > 0;) {
    if (!live[i] || folded.gate(i).kind == GateKind::kConst) continue;
    const bool is_add = folded.gate(i).kind == GateKind::kAdd;
    for (std::uint32_t user : consumers[i]) {
      const bool user_add = folded.gate(user).kind == GateKind::kAdd;
      const std::uint32_t v = above[user] + (is_add && !user_add ? 1 : 0);
      if (above[i] == kUnset) {
        above[i] = v;
      } else if (above[i] != v) {
        return reject_at(
            "gate lies on paths that cross different numbers of + layers",
            folded.label(i));
      }
    }
  }

  std::uint32_t d = 0;
  for (std::uint32_t i = 0; i < folded.size(); ++i) {
    if (!live[i] || folded.gate(i).kind != GateKind::kInput) continue;
    if (d == 0) {
      d = above[i];
    } else if (above[i] != d) {
      return reject_at(
          "input-to-output paths cross different numbers of + layers",
          folded.label(i));
    }
  }
  if (d == 0) return reject("circuit has no reachable input");

  PlusLayering result{folded, d, std::vector<std::uint32_t>(folded.size(), 0),
                      std::vector<std::uint32_t>(folded.size(), 0),
                      std::vector<BigInt>(d, -1), deg};
  for (std::uint32_t i = 0; i < folded.size(); ++i) {
    if (!live[i] || folded.gate(i).kind == GateKind::kConst) continue;
    result.blocks_above[i] = above[i];
    if (folded.gate(i).kind != GateKind::kAdd) continue;
    const std::uint32_t layer = d + 1 - above[i];
    result.layer_of[i] = layer;
    BigInt& slot = result.layer_degrees[layer - 1];
    if (slot < 0) {
      slot = deg[i];
    } else if (slot != deg[i]) {
      return reject_at("+ gates of one layer have different degrees",
                       folded.label(i));
    }
  }
  for (const BigInt& ld : result.layer_degrees) {
    // A layer without + gates cannot occur when every input sits at depth d.
    if (ld < 0) return reject("empty + layer");
  }
  return result;
}

std::variant<SpsView, Rejection> classify_sps(const Circuit& c,
                                              std::uint64_t fingerprint_seed) {
  const Circuit folded = fold_constants(c);
  if (folded.gate(folded.output()).kind == GateKind::kConst) {
    return reject("circuit is constant");
  }
  const std::vector<BigInt> deg = syntactic_degrees(folded);
  SeededRng rng(fingerprint_seed);
  SpsView view{std::make_shared<SlpArena>(FingerprintKey::random(rng)),
               LinAlphabet(folded.field(), folded.num_vars()),
               {},
               {},
               0,
               true};
  LinearEvaluator linear(folded);
  ProductExtractor extractor(
      folded, view.arena, view.alphabet,
      [&](std::uint32_t g) -> std::optional<LinForm> {
        if (deg[g] != 1) return std::nullopt;
        return linear.value(g).form;
      });
  const PrimeField& f = folded.field();
  try {
    for (const BlockLeaf& leaf : block_leaves(folded, folded.output())) {
      SigmaProduct p = extractor.extract(leaf.gate);
      p.scalar = p.scalar * f.elem(leaf.multiplicity);
      if (p.scalar.is_zero()) p.word.reset();
      view.summands.push_back(std::move(p));
      view.summand_gates.push_back(leaf.gate);
    }
  } catch (const ProductShapeError& e) {
    const Gate& g = folded.gate(e.gate());
    if (g.kind == GateKind::kAdd && deg[e.gate()] >= 2) {
      return reject_at("+ gate between x layers", g.label);
    }
    return reject_at(e.what(), g.label);
  }
  for (const SigmaProduct& p : view.summands) {
    view.max_degree = std::max(view.max_degree, p.degree);
    if (p.degree != view.summands.front().degree) view.homogeneous = false;
  }
  return view;
}

}  // namespace ncpit
