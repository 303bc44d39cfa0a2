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

#ifndef NCPIT_CLASSIFY_H_
#define NCPIT_CLASSIFY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncpit/circuit.h"
#include "ncpit/lin_forms.h"
#include "ncpit/products.h"
#include "ncpit/slp.h"

namespace ncpit {

struct Rejection {
  std::string reason;
  std::optional<std::uint64_t> gate_label;

  std::string describe() const;
};

// Layering of a +-regular circuit. Binary + gates that feed each other
// directly form one fan-in-s sum ("block") and share a layer; layers are
// numbered 1 (bottom) .. num_layers (output).
struct PlusLayering {
  Circuit circuit;  // constant-folded circuit the indices below refer to
  std::size_t num_layers = 0;
  // Per gate: layer of a + gate, 0 for everything else.
  std::vector<std::uint32_t> layer_of;
  // Per gate: number of + blocks on every gate-to-output path (0 for
  // constants and unreachable gates). Inputs sit at num_layers.
  std::vector<std::uint32_t> blocks_above;
  std::vector<BigInt> layer_degrees;  // [0] is layer 1
  std::vector<BigInt> degrees;        // per gate syntactic degree
};

std::variant<PlusLayering, Rejection> classify_plus_regular(const Circuit& c);

// A circuit read as a sum of products of homogeneous linear forms.
struct SpsView {
  std::shared_ptr<SlpArena> arena;
  LinAlphabet alphabet;
  std::vector<SigmaProduct> summands;
  std::vector<std::uint32_t> summand_gates;
  BigInt max_degree;
  bool homogeneous = true;

  std::size_t fan_in() const { return summands.size(); }
};

std::variant<SpsView, Rejection> classify_sps(
    const Circuit& c, std::uint64_t fingerprint_seed = 0);

struct BlockLeaf {
  std::uint32_t gate;
  std::uint64_t multiplicity;  // number of paths inside the block, mod p
};

// Leaves of the + block rooted at `root`: the non-+ gates reached from it
// through + gates only, in index order. A non-+ root is its own single leaf.
std::vector<BlockLeaf> block_leaves(const Circuit& c, std::uint32_t root);

}  // namespace ncpit

#endif  // NCPIT_CLASSIFY_H_
