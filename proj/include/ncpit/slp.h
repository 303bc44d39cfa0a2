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

#ifndef NCPIT_SLP_H_
#define NCPIT_SLP_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ncpit/field.h"
#include "ncpit/rng.h"

namespace ncpit {

// Evaluation points for Karp-Rabin style word fingerprints over F_q with
// q = 2^61 - 1. The hash of a word a_1 ... a_L at point x is
// sum_i a_i x^(i-1) mod q.
class FingerprintKey {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;
  static constexpr std::size_t kDefaultPoints = 8;

  explicit FingerprintKey(std::vector<std::uint64_t> points);
  static FingerprintKey random(SeededRng& rng,
                               std::size_t num_points = kDefaultPoints);

  std::span<const std::uint64_t> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  friend bool operator==(const FingerprintKey&,
                         const FingerprintKey&) = default;

 private:
  std::vector<std::uint64_t> points_;
};

// Multiplication modulo 2^61 - 1.
std::uint64_t mul_m61(std::uint64_t a, std::uint64_t b);

// Append-only store of straight-line-program nodes. Node ids are dense and
// every node's length, depth and fingerprints are computed when it is added,
// so queries never mutate the arena. Appending is not thread-safe; reading an
// arena nobody appends to is.
class SlpArena {
 public:
  explicit SlpArena(FingerprintKey key);

  // `a` is a 1-based letter.
  std::uint32_t letter(std::uint32_t a);
  std::uint32_t concat(std::uint32_t left, std::uint32_t right);
  // Balanced concatenation tree for a non-empty explicit word.
  std::uint32_t from_word(std::span<const std::uint32_t> word);
  // `node` repeated `count` >= 1 times, by repeated squaring.
  std::uint32_t repeat(std::uint32_t node, std::uint64_t count);

  std::size_t size() const { return nodes_.size(); }
  const FingerprintKey& key() const { return key_; }

  bool is_letter(std::uint32_t node) const { return node_at(node).letter != 0; }
  std::uint32_t letter_of(std::uint32_t node) const {
    return node_at(node).letter;
  }
  std::uint32_t left(std::uint32_t node) const { return node_at(node).left; }
  std::uint32_t right(std::uint32_t node) const { return node_at(node).right; }
  std::uint32_t depth(std::uint32_t node) const { return node_at(node).depth; }
  const BigInt& length(std::uint32_t node) const {
    return node_at(node).length;
  }
  std::span<const std::uint64_t> hash(std::uint32_t node) const {
    return {hashes_.data() + std::size_t{node} * key_.size(), key_.size()};
  }
  std::span<const std::uint64_t> power(std::uint32_t node) const {
    return {powers_.data() + std::size_t{node} * key_.size(), key_.size()};
  }

 private:
  struct Node {
    std::uint32_t letter;  // 0 for concatenations
    std::uint32_t left;
    std::uint32_t right;
    std::uint32_t depth;
    BigInt length;
  };
  const Node& node_at(std::uint32_t id) const;

  FingerprintKey key_;
  std::vector<Node> nodes_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint32_t> letter_nodes_;
};

// A word given by a root node in a shared arena.
class Slp {
 public:
  Slp(std::shared_ptr<SlpArena> arena, std::uint32_t root);

  const std::shared_ptr<SlpArena>& arena() const { return arena_; }
  std::uint32_t root() const { return root_; }
  const BigInt& length() const { return arena_->length(root_); }

  // Same arena and same root: trivially the same word.
  bool same_node(const Slp& other) const {
    return arena_ == other.arena_ && root_ == other.root_;
  }

 private:
  std::shared_ptr<SlpArena> arena_;
  std::uint32_t root_;
};

struct SlpEqualityOptions {
  // Error budget for "equal" answers produced by fingerprinting.
  double epsilon = 0x1p-40;
  // When both words are at most this long they are expanded and compared
  // letter by letter, which makes every answer exact.
  std::uint64_t expand_threshold = std::uint64_t{1} << 16;
};

BigInt length(const Slp& w);

// k-th letter, 1-based. Throws RangeError outside [1, |w|].
std::uint32_t letter_at(const Slp& w, const BigInt& k);

// Slp for w[k..k2] (1-based, inclusive), built in w's arena with O(depth(w))
// new nodes.
Slp subword_slp(const Slp& w, const BigInt& k, const BigInt& k2);

// Explicit word; throws CapacityError when |w| > max_length.
std::vector<std::uint32_t> expand_word(const Slp& w, std::uint64_t max_length);

struct WordEquality {
  bool equal;
  // False only for "equal" answers that rest on fingerprints.
  bool certain;
};

WordEquality equals(const Slp& u, const Slp& v,
                    const SlpEqualityOptions& options = {});

struct MismatchResult {
  // nullopt when no mismatch was found.
  std::optional<BigInt> position;
  bool certain;
};

// Leftmost differing position of two equal-length words. A returned position
// is always verified letter by letter.
MismatchResult leftmost_mismatch(const Slp& u, const Slp& v,
                                 const SlpEqualityOptions& options = {});

struct MismatchScan {
  bool too_many = false;
  // Sorted, each verified by letter_at. When too_many, holds the first
  // bound + 1 positions found.
  std::vector<BigInt> positions;
  bool certain = true;
};

// All positions where equal-length u and v differ, provided there are at most
// `bound` of them.
MismatchScan mismatch_positions_up_to(const Slp& u, const Slp& v,
                                      std::uint64_t bound,
                                      const SlpEqualityOptions& options = {});

// Number of fingerprint points needed for the error budget at word length
// `length`; throws CapacityError when the length is too close to q.
std::size_t fingerprint_points_needed(const BigInt& length, double epsilon);

}  // namespace ncpit

#endif  // NCPIT_SLP_H_
