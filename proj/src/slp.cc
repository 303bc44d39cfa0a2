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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "ncpit/errors.h"

namespace ncpit {
namespace {

constexpr std::uint64_t kQ = FingerprintKey::kModulus;

std::uint64_t add_m61(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kQ ? s - kQ : s;
}

std::uint64_t sub_m61(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kQ - b;
}

using Hashes = std::vector<std::uint64_t>;

// Fingerprints of w[1..k] for the first `points` evaluation points.
Hashes prefix_hash(const SlpArena& arena, std::uint32_t node, BigInt k,
                   std::size_t points) {
  Hashes acc(points, 0);
  Hashes scale(points, 1);
  while (k > 0) {
    if (k == arena.length(node)) {
      auto h = arena.hash(node);
      for (std::size_t i = 0; i < points; ++i) {
        acc[i] = add_m61(acc[i], mul_m61(scale[i], h[i]));
      }
      break;
    }
    const std::uint32_t left = arena.left(node);
    const BigInt& left_len = arena.length(left);
    if (k <= left_len) {
      node = left;
      continue;
    }
    auto h = arena.hash(left);
    auto pw = arena.power(left);
    for (std::size_t i = 0; i < points; ++i) {
      acc[i] = add_m61(acc[i], mul_m61(scale[i], h[i]));
      scale[i] = mul_m61(scale[i], pw[i]);
    }
    k -= left_len;
    node = arena.right(node);
  }
  return acc;
}

void require_compatible(const Slp& u, const Slp& v) {
  if (u.arena() != v.arena() && !(u.arena()->key() == v.arena()->key())) {
    throw UsageError("words fingerprinted under different keys");
  }
}

void require_equal_length(const Slp& u, const Slp& v) {
  if (u.length() != v.length()) {
    throw UsageError("length mismatch: " + u.length().str() + " vs " +
                     v.length().str());
  }
}

bool expandable(const Slp& u, const Slp& v, const SlpEqualityOptions& opt) {
  return u.length() <= opt.expand_threshold &&
         v.length() <= opt.expand_threshold;
}

std::size_t usable_points(const Slp& u, const SlpEqualityOptions& opt) {
  const std::size_t needed = fingerprint_points_needed(u.length(), opt.epsilon);
  if (needed > u.arena()->key().size()) {
    throw CapacityError("error budget needs " + std::to_string(needed) +
                        " fingerprint points, key has " +
                        std::to_string(u.arena()->key().size()));
  }
  return needed;
}

// Compares ranges of two equal-length words by prefix fingerprints, caching
// prefixes across queries of one scan.
class RangeComparer {
 public:
  RangeComparer(const Slp& u, const Slp& v, std::size_t points)
      : u_(u), v_(v), points_(points) {}

  // True iff the fingerprints of u[a..b] and v[a..b] differ (then the ranges
  // certainly differ).
  bool differs(const BigInt& a, const BigInt& b) {
    const Hashes& ub = prefix(u_, u_cache_, b);
    const Hashes& ua = prefix(u_, u_cache_, a - 1);
    const Hashes& vb = prefix(v_, v_cache_, b);
    const Hashes& va = prefix(v_, v_cache_, a - 1);
    for (std::size_t i = 0; i < points_; ++i) {
      if (sub_m61(ub[i], ua[i]) != sub_m61(vb[i], va[i])) return true;
    }
    return false;
  }

  bool prefix_differs(const BigInt& k) {
    return prefix(u_, u_cache_, k) != prefix(v_, v_cache_, k);
  }

 private:
  const Hashes& prefix(const Slp& w, std::map<BigInt, Hashes>& cache,
                       const BigInt& k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return cache.emplace(k, prefix_hash(*w.arena(), w.root(), k, points_))
        .first->second;
  }

  const Slp& u_;
  const Slp& v_;
  std::size_t points_;
  std::map<BigInt, Hashes> u_cache_;
  std::map<BigInt, Hashes> v_cache_;
};

}  // namespace

std::uint64_t mul_m61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t lo = static_cast<std::uint64_t>(z) & kQ;
  const std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  return add_m61(lo, hi);
}

FingerprintKey::FingerprintKey(std::vector<std::uint64_t> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw UsageError("fingerprint key needs a point");
  for (auto& p : points_) p %= kQ;
}

FingerprintKey FingerprintKey::random(SeededRng& rng, std::size_t num_points) {
  std::vector<std::uint64_t> points(num_points);
  for (auto& p : points) p = 1 + rng.uniform(kQ - 1);
  return FingerprintKey(std::move(points));
}

std::size_t fingerprint_points_needed(const BigInt& length, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw UsageError("error budget must lie in (0, 1)");
  }
  const double lg = length <= 1 ? 0.0 : std::log2(static_cast<double>(length));
  if (lg > 59.0) {
    throw CapacityError("word length 2^" + std::to_string(lg) +
                        " is too close to the fingerprint modulus 2^61");
  }
  // Each point misses a difference with probability <= L/q; a budget of
  // log(L/eps)/log(q/L) points leaves room for a union bound over L queries.
  const double k = (lg - std::log2(epsilon)) / (61.0 - lg);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(k)));
}

SlpArena::SlpArena(FingerprintKey key) : key_(std::move(key)) {}

const SlpArena::Node& SlpArena::node_at(std::uint32_t id) const {
  if (id >= nodes_.size()) {
    throw RangeError("slp node " + std::to_string(id) + " does not exist");
  }
  return nodes_[id];
}

std::uint32_t SlpArena::letter(std::uint32_t a) {
  if (a == 0 || a >= kQ) throw UsageError("letters are 1-based");
  if (a < letter_nodes_.size() && letter_nodes_[a] != 0) {
    return letter_nodes_[a] - 1;
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{a, 0, 0, 0, BigInt(1)});
  for (std::uint64_t x : key_.points()) {
    hashes_.push_back(a);
    powers_.push_back(x);
  }
  if (letter_nodes_.size() <= a) letter_nodes_.resize(a + 1, 0);
  letter_nodes_[a] = id + 1;
  return id;
}

std::uint32_t SlpArena::concat(std::uint32_t left, std::uint32_t right) {
  const Node& l = node_at(left);
  const Node& r = node_at(right);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  Node node{0, left, right, std::max(l.depth, r.depth) + 1, l.length + r.length};
  const std::size_t k = key_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t hl = hashes_[left * k + i];
    const std::uint64_t pl = powers_[left * k + i];
    const std::uint64_t hr = hashes_[right * k + i];
    const std::uint64_t pr = powers_[right * k + i];
    hashes_.push_back(add_m61(hl, mul_m61(pl, hr)));
    powers_.push_back(mul_m61(pl, pr));
  }
  nodes_.push_back(std::move(node));
  return id;
}

std::uint32_t SlpArena::from_word(std::span<const std::uint32_t> word) {
  if (word.empty()) throw UsageError("an slp cannot compute the empty word");
  if (word.size() == 1) return letter(word[0]);
  const std::size_t mid = word.size() / 2;
  const std::uint32_t l = from_word(word.first(mid));
  const std::uint32_t r = from_word(word.subspan(mid));
  return concat(l, r);
}

std::uint32_t SlpArena::repeat(std::uint32_t node, std::uint64_t count) {
  if (count == 0) throw UsageError("repeat count must be positive");
  std::optional<std::uint32_t> result;
  std::uint32_t square = node;
  while (true) {
    if (count & 1) result = result ? concat(*result, square) : square;
    count >>= 1;
    if (count == 0) break;
    square = concat(square, square);
  }
  return *result;
}

Slp::Slp(std::shared_ptr<SlpArena> arena, std::uint32_t root)
    : arena_(std::move(arena)), root_(root) {
  if (!arena_ || root_ >= arena_->size()) {
    throw UsageError("slp root outside its arena");
  }
}

BigInt length(const Slp& w) { return w.length(); }

std::uint32_t letter_at(const Slp& w, const BigInt& k) {
  if (k < 1 || k > w.length()) {
    throw RangeError("position " + k.str() + " outside [1, " +
                     w.length().str() + "]");
  }
  const SlpArena& arena = *w.arena();
  std::uint32_t node = w.root();
  BigInt pos = k;
  while (!arena.is_letter(node)) {
    const BigInt& left_len = arena.length(arena.left(node));
    if (pos <= left_len) {
      node = arena.left(node);
    } else {
      pos -= left_len;
      node = arena.right(node);
    }
  }
  return arena.letter_of(node);
}

namespace {

std::uint32_t build_subword(SlpArena& arena, std::uint32_t node,
                            const BigInt& a, const BigInt& b) {
  if (a == 1 && b == arena.length(node)) return node;
  // A letter always satisfies the check above.
  const std::uint32_t left = arena.left(node);
  const std::uint32_t right = arena.right(node);
  const BigInt left_len = arena.length(left);
  if (b <= left_len) return build_subword(arena, left, a, b);
  if (a > left_len) {
    return build_subword(arena, right, a - left_len, b - left_len);
  }
  const std::uint32_t l = build_subword(arena, left, a, left_len);
  const std::uint32_t r = build_subword(arena, right, 1, b - left_len);
  return arena.concat(l, r);
}

}  // namespace

Slp subword_slp(const Slp& w, const BigInt& k, const BigInt& k2) {
  if (k < 1 || k > k2 || k2 > w.length()) {
    throw RangeError("subword range [" + k.str() + ", " + k2.str() +
                     "] invalid for length " + w.length().str());
  }
  return Slp(w.arena(), build_subword(*w.arena(), w.root(), k, k2));
}

std::vector<std::uint32_t> expand_word(const Slp& w, std::uint64_t max_length) {
  if (w.length() > max_length) {
    throw CapacityError("word of length " + w.length().str() +
                        " exceeds expansion limit " +
                        std::to_string(max_length));
  }
  const SlpArena& arena = *w.arena();
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  std::vector<std::uint32_t> stack{w.root()};
  while (!stack.empty()) {
    const std::uint32_t node = stack.back();
    stack.pop_back();
    if (arena.is_letter(node)) {
      out.push_back(arena.letter_of(node));
    } else {
      stack.push_back(arena.right(node));
      stack.push_back(arena.left(node));
    }
  }
  return out;
}

WordEquality equals(const Slp& u, const Slp& v,
                    const SlpEqualityOptions& options) {
  if (u.length() != v.length()) return {false, true};
  if (u.same_node(v)) return {true, true};
  if (expandable(u, v, options)) {
    const std::uint64_t cap = options.expand_threshold;
    return {expand_word(u, cap) == expand_word(v, cap), true};
  }
  require_compatible(u, v);
  const std::size_t points = usable_points(u, options);
  auto hu = u.arena()->hash(u.root()).first(points);
  auto hv = v.arena()->hash(v.root()).first(points);
  const bool same = std::equal(hu.begin(), hu.end(), hv.begin());
  return {same, !same};
}

MismatchResult leftmost_mismatch(const Slp& u, const Slp& v,
                                 const SlpEqualityOptions& options) {
  require_equal_length(u, v);
  if (u.same_node(v)) return {std::nullopt, true};
  if (expandable(u, v, options)) {
    const std::uint64_t cap = options.expand_threshold;
    auto wu = expand_word(u, cap);
    auto wv = expand_word(v, cap);
    auto it = std::mismatch(wu.begin(), wu.end(), wv.begin());
    if (it.first == wu.end()) return {std::nullopt, true};
    return {BigInt(it.first - wu.begin() + 1), true};
  }
  require_compatible(u, v);
  RangeComparer cmp(u, v, usable_points(u, options));
  BigInt hi = u.length();
  if (!cmp.prefix_differs(hi)) return {std::nullopt, false};
  // Invariant: prefix of length hi certainly differs.
  while (true) {
    BigInt lo = 0;
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (cmp.prefix_differs(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (letter_at(u, hi) != letter_at(v, hi)) return {hi, true};
    // A collision hid an earlier difference; prefix hi - 1 must differ.
    hi -= 1;
  }
}

namespace {

void scan_range(RangeComparer& cmp, const Slp& u, const Slp& v, const BigInt& a,
                const BigInt& b, std::uint64_t bound, MismatchScan& out) {
  if (out.too_many || !cmp.differs(a, b)) return;
  if (a == b) {
    if (letter_at(u, a) != letter_at(v, a)) {
      out.positions.push_back(a);
      if (out.positions.size() > bound) out.too_many = true;
    }
    return;
  }
  const BigInt mid = (a + b) / 2;
  scan_range(cmp, u, v, a, mid, bound, out);
  scan_range(cmp, u, v, mid + 1, b, bound, out);
}

}  // namespace

MismatchScan mismatch_positions_up_to(const Slp& u, const Slp& v,
                                      std::uint64_t bound,
                                      const SlpEqualityOptions& options) {
  require_equal_length(u, v);
  MismatchScan out;
  if (u.same_node(v)) return out;
  if (expandable(u, v, options)) {
    const std::uint64_t cap = options.expand_threshold;
    auto wu = expand_word(u, cap);
    auto wv = expand_word(v, cap);
    for (std::size_t i = 0; i < wu.size(); ++i) {
      if (wu[i] == wv[i]) continue;
      out.positions.emplace_back(i + 1);
      if (out.positions.size() > bound) {
        out.too_many = true;
        break;
      }
    }
    return out;
  }
  require_compatible(u, v);
  RangeComparer cmp(u, v, usable_points(u, options));
  scan_range(cmp, u, v, BigInt(1), u.length(), bound, out);
  // Ranges that matched by fingerprint might hide differences.
  out.certain = out.too_many;
  return out;
}

}  // namespace ncpit
