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

#include "ncpit/slp.h"

#include <cstdint>
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "ncpit/errors.h"
#include "ncpit/rng.h"

namespace ncpit {
namespace {

std::shared_ptr<SlpArena> make_arena(std::uint64_t seed = 1) {
  SeededRng rng(seed);
  return std::make_shared<SlpArena>(FingerprintKey::random(rng));
}

// Random Slp built by concatenating random earlier nodes; returns the root
// and records the explicit word of every node.
struct RandomSlp {
  std::uint32_t root;
  std::vector<std::vector<std::uint32_t>> words;  // by node id
};

RandomSlp random_slp(SlpArena& arena, SeededRng& rng, std::uint32_t letters,
                     std::size_t max_len) {
  RandomSlp out;
  out.words.resize(arena.size());
  std::vector<std::uint32_t> nodes;
  for (std::uint32_t a = 1; a <= letters; ++a) {
    const std::uint32_t id = arena.letter(a);
    if (out.words.size() <= id) out.words.resize(id + 1);
    out.words[id] = {a};
    nodes.push_back(id);
  }
  for (int step = 0; step < 30; ++step) {
    const std::uint32_t l = nodes[rng.uniform(nodes.size())];
    const std::uint32_t r = nodes[rng.uniform(nodes.size())];
    if (out.words[l].size() + out.words[r].size() > max_len) continue;
    const std::uint32_t id = arena.concat(l, r);
    if (out.words.size() <= id) out.words.resize(id + 1);
    out.words[id] = out.words[l];
    out.words[id].insert(out.words[id].end(), out.words[r].begin(),
                         out.words[r].end());
    nodes.push_back(id);
  }
  out.root = nodes.back();
  return out;
}

TEST(SlpTest, LettersAreDeduplicated) {
  auto arena = make_arena();
  EXPECT_EQ(arena->letter(3), arena->letter(3));
  EXPECT_NE(arena->letter(3), arena->letter(4));
  EXPECT_THROW(arena->letter(0), UsageError);
}

TEST(SlpTest, FromWordAndLetterAt) {
  auto arena = make_arena();
  const std::vector<std::uint32_t> word = {1, 2, 2, 3, 1};
  const Slp w(arena, arena->from_word(word));
  EXPECT_EQ(length(w), 5);
  for (std::size_t k = 0; k < word.size(); ++k) {
    EXPECT_EQ(letter_at(w, k + 1), word[k]);
  }
  EXPECT_THROW(letter_at(w, 0), RangeError);
  EXPECT_THROW(letter_at(w, 6), RangeError);
  EXPECT_EQ(expand_word(w, 100), word);
  EXPECT_THROW(expand_word(w, 4), CapacityError);
}

TEST(SlpTest, RepeatBuildsExponentialLengths) {
  auto arena = make_arena();
  const std::uint32_t ab = arena->from_word(std::vector<std::uint32_t>{1, 2});
  const Slp w(arena, arena->repeat(ab, std::uint64_t{1} << 40));
  EXPECT_EQ(length(w), BigInt(1) << 41);
  EXPECT_EQ(letter_at(w, BigInt(1) << 41), 2u);
  EXPECT_EQ(letter_at(w, (BigInt(1) << 40) + 1), 1u);
  EXPECT_LE(arena->size(), 100u);
}

TEST(SlpTest, SubwordMatchesExplicitWord) {
  auto arena = make_arena();
  SeededRng rng(5);
  const RandomSlp r = random_slp(*arena, rng, 3, 200);
  const Slp w(arena, r.root);
  const auto& word = r.words[r.root];
  for (int t = 0; t < 50; ++t) {
    const std::size_t i = rng.range(1, word.size());
    const std::size_t j = rng.range(i, word.size());
    const Slp sub = subword_slp(w, i, j);
    const std::vector<std::uint32_t> expected(word.begin() + (i - 1),
                                              word.begin() + j);
    ASSERT_EQ(expand_word(sub, 1000), expected);
  }
  EXPECT_THROW(subword_slp(w, 0, 1), RangeError);
  EXPECT_THROW(subword_slp(w, 2, 1), RangeError);
}

TEST(SlpTest, EqualityOfDifferentShapes) {
  auto arena = make_arena();
  const std::uint32_t a = arena->letter(1);
  const std::uint32_t b = arena->letter(2);
  // (ab)(ab) vs a((ba)b)
  const Slp u(arena, arena->concat(arena->concat(a, b), arena->concat(a, b)));
  const Slp v(arena, arena->concat(a, arena->concat(arena->concat(b, a), b)));
  const WordEquality eq = equals(u, v);
  EXPECT_TRUE(eq.equal);
  EXPECT_TRUE(eq.certain);  // short words are compared letter by letter
  const Slp x(arena, arena->concat(arena->concat(b, a), arena->concat(a, b)));
  EXPECT_FALSE(equals(u, x).equal);
}

TEST(SlpTest, EqualityAboveTheExpansionThreshold) {
  auto arena = make_arena();
  const std::uint32_t ab = arena->from_word(std::vector<std::uint32_t>{1, 2});
  const std::uint32_t ba = arena->from_word(std::vector<std::uint32_t>{2, 1});
  // (ab)^(2^30) and a (ba)^(2^30 - 1) b spell the same word.
  const Slp u(arena, arena->repeat(ab, std::uint64_t{1} << 30));
  const Slp v(arena, arena->concat(
                         arena->concat(arena->letter(1),
                                       arena->repeat(ba, (std::uint64_t{1} << 30) - 1)),
                         arena->letter(2)));
  const WordEquality eq = equals(u, v);
  EXPECT_TRUE(eq.equal);
  EXPECT_FALSE(eq.certain);
  const Slp w(arena, arena->concat(arena->repeat(ab, (std::uint64_t{1} << 30) - 1),
                                   ba));
  const WordEquality ne = equals(u, w);
  EXPECT_FALSE(ne.equal);
  EXPECT_TRUE(ne.certain);
}

TEST(SlpTest, LeftmostMismatch) {
  auto arena = make_arena();
  const std::uint32_t ab = arena->from_word(std::vector<std::uint32_t>{1, 2});
  const std::uint32_t ba = arena->from_word(std::vector<std::uint32_t>{2, 1});
  const std::uint64_t half = std::uint64_t{1} << 35;
  const Slp u(arena, arena->repeat(ab, 2 * half));
  const Slp v(arena, arena->concat(arena->repeat(ab, half),
                                   arena->repeat(ba, half)));
  const MismatchResult m = leftmost_mismatch(u, v);
  ASSERT_TRUE(m.position.has_value());
  EXPECT_EQ(*m.position, BigInt(2 * half) + 1);
  EXPECT_FALSE(leftmost_mismatch(u, u).position.has_value());
  const Slp shorter(arena, ab);
  EXPECT_THROW(leftmost_mismatch(u, shorter), UsageError);
}

TEST(SlpTest, MismatchPositionsUpTo) {
  auto arena = make_arena();
  const std::vector<std::uint32_t> x = {1, 2, 3, 1, 2, 3, 1, 2};
  const std::vector<std::uint32_t> y = {1, 3, 3, 1, 2, 1, 1, 3};
  const Slp u(arena, arena->from_word(x));
  const Slp v(arena, arena->from_word(y));
  const MismatchScan all = mismatch_positions_up_to(u, v, 10);
  EXPECT_FALSE(all.too_many);
  EXPECT_EQ(all.positions, (std::vector<BigInt>{2, 6, 8}));
  const MismatchScan capped = mismatch_positions_up_to(u, v, 2);
  EXPECT_TRUE(capped.too_many);
  EXPECT_EQ(capped.positions.size(), 3u);
}

TEST(SlpTest, ArenasWithDifferentKeysAreIncompatible) {
  auto a = make_arena(1);
  auto b = make_arena(2);
  const std::uint64_t n = std::uint64_t{1} << 20;
  const Slp u(a, a->repeat(a->letter(1), n));
  const Slp v(b, b->repeat(b->letter(1), n));
  EXPECT_THROW(equals(u, v), UsageError);
  // Short words are compared letter by letter, which needs no key.
  EXPECT_TRUE(equals(Slp(a, a->letter(1)), Slp(b, b->letter(1))).equal);
}

TEST(SlpTest, FingerprintPointsNeeded) {
  EXPECT_EQ(fingerprint_points_needed(BigInt(1) << 30, 0x1p-40), 3u);
  EXPECT_EQ(fingerprint_points_needed(BigInt(2), 0x1p-40), 1u);
  EXPECT_THROW(fingerprint_points_needed(BigInt(1) << 60, 0x1p-40),
               CapacityError);
}

// Random Slps: every operation agrees with the explicit word.
TEST(SlpTest, RandomAgainstExplicitWords) {
  SeededRng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto arena = make_arena(trial);
    const RandomSlp r1 = random_slp(*arena, rng, 2, 4096);
    const RandomSlp r2 = random_slp(*arena, rng, 2, 4096);
    const auto& w1 = r1.words[r1.root];
    const auto& w2 = r2.words[r2.root];
    const Slp u(arena, r1.root);
    const Slp v(arena, r2.root);
    ASSERT_EQ(length(u), w1.size());
    ASSERT_EQ(equals(u, v).equal, w1 == w2);
    if (w1.size() != w2.size()) continue;
    std::vector<BigInt> diff;
    for (std::size_t i = 0; i < w1.size(); ++i) {
      if (w1[i] != w2[i]) diff.push_back(i + 1);
    }
    const MismatchResult m = leftmost_mismatch(u, v);
    ASSERT_EQ(m.position.has_value(), !diff.empty());
    if (!diff.empty()) ASSERT_EQ(*m.position, diff.front());
    const MismatchScan scan = mismatch_positions_up_to(u, v, 5000);
    ASSERT_EQ(scan.positions, diff);
  }
}

}  // namespace
}  // namespace ncpit
