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

// End-to-end acceptance runner. Each check prints one PASS/FAIL line; the exit
// status is nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ncpit/abp.h"
#include "ncpit/blackbox.h"
#include "ncpit/circuit.h"
#include "ncpit/classify.h"
#include "ncpit/errors.h"
#include "ncpit/generators.h"
#include "ncpit/matrix.h"
#include "ncpit/oracle.h"
#include "ncpit/plus_regular.h"
#include "ncpit/rng.h"
#include "ncpit/slp.h"
#include "ncpit/sparse_poly.h"
#include "oracles.h"

namespace ncpit {
namespace {

using ::ncpit::testing::automaton_entry_from_projections;
using ::ncpit::testing::evaluate_terms;
using ::ncpit::testing::full_expansion_dependencies;
using ::ncpit::testing::inverse;
using ::ncpit::testing::random_abp;
using ::ncpit::testing::random_invertible;

struct Result {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

LinForm random_form(SeededRng& rng, const PrimeField& f, std::uint32_t n) {
  LinForm l;
  do {
    l.coeffs.clear();
    for (std::uint32_t i = 0; i < n; ++i) l.coeffs.push_back(rng.uniform(f.modulus()));
  } while (l.is_zero());
  return l;
}

NcPoly combine(const PrimeField& f, std::uint32_t n,
               const std::vector<LinearProduct>& products,
               const std::vector<std::uint64_t>& beta) {
  NcPoly sum(f, n);
  for (std::size_t i = 0; i < products.size(); ++i) {
    sum = sum + expand_product(f, n, products[i]).scaled(beta[i]);
  }
  return sum;
}

// A weighted sum of products of linear forms; about half of the instances
// cancel by splitting one form of the first product into two summands.
struct ProductSum {
  std::uint32_t n;
  std::vector<LinearProduct> products;
  std::vector<std::uint64_t> beta;
};

ProductSum random_product_sum(SeededRng& rng, const PrimeField& f,
                              std::uint32_t max_n, std::size_t max_degree,
                              std::size_t max_s) {
  ProductSum ps;
  ps.n = static_cast<std::uint32_t>(rng.range(1, max_n));
  const std::size_t d = rng.range(1, max_degree);
  const std::size_t s = rng.range(1, max_s);
  for (std::size_t i = 0; i < s; ++i) {
    LinearProduct p;
    for (std::size_t j = 0; j < d; ++j) p.push_back(random_form(rng, f, ps.n));
    ps.products.push_back(std::move(p));
    ps.beta.push_back(sample_nonzero(rng, f).value());
  }
  if (rng.coin()) {
    const std::size_t j = rng.uniform(d);
    LinearProduct a = ps.products[0];
    LinearProduct b = ps.products[0];
    const LinForm part = random_form(rng, f, ps.n);
    a[j] = part;
    for (std::uint32_t i = 0; i < ps.n; ++i) {
      b[j].coeffs[i] = f.sub(ps.products[0][j].coeffs[i], part.coeffs[i]);
    }
    const std::uint64_t c = ps.beta[0];
    ps.products.push_back(std::move(a));
    ps.beta.push_back(f.neg(c));
    ps.products.push_back(std::move(b));
    ps.beta.push_back(f.neg(c));
  }
  return ps;
}

Result plus_regular_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t agree = 0, zeros = 0, uncertain = 0;
  BigInt max_degree = 0;
  std::string first_bad;
  for (std::uint64_t i = 0; i < 500; ++i) {
    GenOptions opt;
    opt.kind = GenClass::kPlusRegular;
    opt.seed = 1000 + i;
    opt.num_vars = static_cast<std::uint32_t>(1 + i % 4);
    opt.layers = static_cast<std::uint32_t>(2 + (i / 4) % 2);
    opt.degree = 16;
    opt.fan_in = 3;
    opt.prime = 101;
    opt.force_zero = (i / 8) % 2 == 1;
    const Circuit c = generate(opt).circuit;
    const bool truth = expand(c).is_zero();
    const PlusRegularOutcome o = pit_plus_regular(c);
    const auto layering = classify_plus_regular(c);
    const auto* lay = std::get_if<PlusLayering>(&layering);
    const bool in_class = lay != nullptr && lay->num_layers >= 2 &&
                          lay->num_layers <= 3 && opt.num_vars <= 4;
    max_degree = std::max(max_degree, syntactic_degree(c));
    zeros += truth;
    uncertain += !o.certain;
    if (o.is_zero == truth && in_class && syntactic_degree(c) <= 16) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = fmt(", first mismatch seed %llu",
                      static_cast<unsigned long long>(opt.seed));
    }
  }
  const double secs = seconds_since(start);
  return {agree == 500 && secs < 120,
          fmt("%zu/500 agree (%zu zero, %zu nonzero, %zu fingerprint-based, "
              "max degree %s), %.1f s%s",
              agree, zeros, 500 - zeros, uncertain, max_degree.str().c_str(),
              secs, first_bad.c_str())};
}

Result sps_blackbox_oracle() {
  std::size_t zero_runs = 0, zero_ok = 0, nonzero_runs = 0, nonzero_ok = 0;
  std::size_t replay_ok = 0;
  for (std::uint64_t seed = 1; zero_runs < 500 || nonzero_runs < 500; ++seed) {
    GenOptions opt;
    opt.kind = GenClass::kSps;
    opt.seed = 5000 + seed;
    opt.num_vars = static_cast<std::uint32_t>(1 + seed % 4);
    opt.fan_in = 5;
    opt.degree = 32;
    opt.prime = 65537;
    opt.force_zero = seed % 2 == 0;
    const Generated g = generate(opt);
    bool truth;
    try {
      truth = expand(g.circuit).is_zero();
    } catch (const BudgetExceeded&) {
      if (!g.is_zero) continue;
      truth = *g.is_zero;
    }
    std::size_t& runs = truth ? zero_runs : nonzero_runs;
    if (runs == 500) continue;
    ++runs;
    const BlackBox bb = BlackBox::from_circuit(g.circuit);
    BlackBoxConfig cfg;
    cfg.trials = 10;
    cfg.seed = seed;
    const BlackBoxOutcome o =
        blackbox_sps_test(bb, 5, syntactic_degree(g.circuit), cfg);
    if (truth) {
      zero_ok += !o.nonzero;
    } else {
      nonzero_ok += o.nonzero;
    }
    if (o.nonzero && replay_witness(bb, *o.witness) != 0) ++replay_ok;
  }
  const std::size_t reported = (500 - zero_ok) + nonzero_ok;
  return {zero_ok == 500 && nonzero_ok >= 499 && replay_ok == reported,
          fmt("zero: %zu/500 probably zero; nonzero: %zu/500 nonzero; "
              "witnesses replayed: %zu/%zu",
              zero_ok, nonzero_ok, replay_ok, reported)};
}

Result isolating_sets() {
  const PrimeField f(5);
  SeededRng rng(303);
  std::size_t ok = 0, uniform_ok = 0, nonempty = 0;
  std::size_t instances = 0;
  while (instances < 100) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng.range(1, 3));
    const std::size_t d = rng.range(1, 5);
    const std::size_t s = rng.range(1, 3);
    // Permutations of one multiset of forms, with occasional edits, so that
    // commutative images tend to cancel.
    LinearProduct base;
    for (std::size_t j = 0; j < d; ++j) base.push_back(random_form(rng, f, n));
    std::vector<LinearProduct> products;
    std::vector<std::uint64_t> beta;
    for (std::size_t i = 0; i < s; ++i) {
      LinearProduct p = base;
      for (std::size_t j = d; j > 1; --j) std::swap(p[j - 1], p[rng.uniform(j)]);
      if (rng.coin(0.3)) p[rng.uniform(d)] = random_form(rng, f, n);
      products.push_back(std::move(p));
      beta.push_back(sample_nonzero(rng, f).value());
    }
    // Weights summing to zero kill the commutative image of permutations.
    std::uint64_t rest = 0;
    for (std::size_t i = 0; i + 1 < s; ++i) rest = f.add(rest, beta[i]);
    if (s > 1 && rest != 0 && rng.coin(0.7)) beta.back() = f.neg(rest);
    const NcPoly sum = combine(f, n, products, beta);
    if (sum.is_zero()) continue;
    ++instances;
    const std::vector<std::uint32_t> set =
        find_isolating_set(f, n, products, beta);
    const bool projected_nonzero = !project(sum, set).is_zero();
    if (set.size() + 1 <= s && projected_nonzero) ++ok;
    nonempty += !set.empty();
    const std::vector<std::uint32_t> uniform =
        find_uniform_isolating_set(f, n, products);
    uniform_ok += uniform.size() + 1 <= s;
  }
  return {ok == 100,
          fmt("%zu/100 with |I| <= s-1 (%zu need a nonempty I); "
              "all-beta variant within s-1: %zu/100",
              ok, nonempty, uniform_ok)};
}

Result abp_dependencies() {
  SeededRng rng(404);
  std::size_t ok = 0;
  for (int t = 0; t < 200; ++t) {
    const PrimeField f(t % 3 == 0 ? 3 : t % 3 == 1 ? 5 : 101);
    const ProductAbp abp = random_abp(rng, f, 5, 6, 3);
    const RowDependencies got = rs_dependencies(abp);
    const RowDependencies want = full_expansion_dependencies(abp);
    ok += got.pivots == want.pivots && got.expressions == want.expressions;
  }
  return {ok == 200, fmt("%zu/200 identical pivots and coefficients", ok)};
}

// Random word built from letters, concatenations, powers and subwords, with
// its explicit expansion alongside.
struct TrackedWord {
  std::uint32_t node;
  std::vector<std::uint32_t> word;
};

TrackedWord random_short_word(SeededRng& rng,
                              const std::shared_ptr<SlpArena>& arena,
                              std::size_t max_len, int depth) {
  const std::uint32_t alphabet = 3;
  const std::uint64_t kind = depth == 0 ? 0 : rng.uniform(4);
  if (kind == 0) {
    std::vector<std::uint32_t> w(rng.range(1, std::min<std::size_t>(8, max_len)));
    for (auto& a : w) a = static_cast<std::uint32_t>(rng.range(1, alphabet));
    return {arena->from_word(w), w};
  }
  if (kind == 1) {
    TrackedWord a = random_short_word(rng, arena, max_len / 2, depth - 1);
    TrackedWord b = random_short_word(rng, arena, max_len / 2, depth - 1);
    a.word.insert(a.word.end(), b.word.begin(), b.word.end());
    return {arena->concat(a.node, b.node), a.word};
  }
  if (kind == 2) {
    TrackedWord a = random_short_word(rng, arena, max_len / 4, depth - 1);
    const std::uint64_t count =
        rng.range(1, std::max<std::size_t>(1, max_len / a.word.size()));
    std::vector<std::uint32_t> w;
    for (std::uint64_t i = 0; i < count; ++i) {
      w.insert(w.end(), a.word.begin(), a.word.end());
    }
    return {arena->repeat(a.node, count), w};
  }
  TrackedWord a = random_short_word(rng, arena, max_len, depth - 1);
  const std::uint64_t len = a.word.size();
  const std::uint64_t k = rng.range(1, len);
  const std::uint64_t k2 = rng.range(k, len);
  const Slp sub = subword_slp(Slp(arena, a.node), BigInt(k), BigInt(k2));
  return {sub.root(),
          std::vector<std::uint32_t>(a.word.begin() + (k - 1),
                                     a.word.begin() + k2)};
}

// Explicit answer of every word query compared against the Slp answer; the
// fingerprint path is forced by a zero expansion threshold.
bool short_pair_exact(SeededRng& rng, const std::shared_ptr<SlpArena>& arena,
                      bool force_fingerprints) {
  constexpr std::size_t kMax = 1 << 12;
  TrackedWord a = random_short_word(rng, arena, kMax, 4);
  TrackedWord b;
  if (rng.coin(0.4)) {
    // Same word, different tree: split at a random point and rejoin.
    b = a;
    if (a.word.size() > 1) {
      const std::size_t cut = rng.range(1, a.word.size() - 1);
      const Slp w(arena, a.node);
      const Slp l = subword_slp(w, 1, BigInt(cut));
      const Slp r = subword_slp(w, BigInt(cut + 1), BigInt(a.word.size()));
      b.node = arena->concat(l.root(), r.root());
    }
    if (rng.coin()) {
      // Then change up to three letters.
      for (std::uint64_t e = rng.uniform(4); e > 0; --e) {
        const std::size_t pos = rng.uniform(b.word.size());
        b.word[pos] = b.word[pos] % 3 + 1;
      }
      b.node = arena->from_word(b.word);
    }
  } else {
    b = random_short_word(rng, arena, kMax, 4);
  }
  if (a.word.size() > kMax || b.word.size() > kMax) return true;
  const Slp u(arena, a.node);
  const Slp v(arena, b.node);
  SlpEqualityOptions opt;
  if (force_fingerprints) opt.expand_threshold = 0;

  if (length(u) != BigInt(a.word.size())) return false;
  if (expand_word(u, kMax) != a.word || expand_word(v, kMax) != b.word) {
    return false;
  }
  for (int probe = 0; probe < 8; ++probe) {
    const std::size_t k = rng.range(1, a.word.size());
    if (letter_at(u, BigInt(k)) != a.word[k - 1]) return false;
  }
  const WordEquality eq = equals(u, v, opt);
  if (eq.equal != (a.word == b.word)) return false;
  if (a.word.size() != b.word.size()) return true;
  std::vector<BigInt> diffs;
  for (std::size_t i = 0; i < a.word.size(); ++i) {
    if (a.word[i] != b.word[i]) diffs.push_back(BigInt(i + 1));
  }
  const MismatchResult mm = leftmost_mismatch(u, v, opt);
  if (diffs.empty() != !mm.position.has_value()) return false;
  if (!diffs.empty() && *mm.position != diffs.front()) return false;
  const MismatchScan scan = mismatch_positions_up_to(u, v, 4, opt);
  if (diffs.size() <= 4) {
    if (scan.too_many || scan.positions != diffs) return false;
  } else {
    if (!scan.too_many || scan.positions.size() != 5 ||
        !std::equal(scan.positions.begin(), scan.positions.end(),
                    diffs.begin())) {
      return false;
    }
  }
  return true;
}

// A long word from powers of short random words; |w| <= 2^30.
Slp random_long_word(SeededRng& rng, const std::shared_ptr<SlpArena>& arena) {
  const std::uint64_t limit = std::uint64_t{1} << 30;
  std::uint32_t node = 0;
  std::uint64_t total = 0;
  const std::uint64_t pieces = rng.range(1, 4);
  for (std::uint64_t i = 0; i < pieces; ++i) {
    std::vector<std::uint32_t> w(rng.range(1, 16));
    for (auto& a : w) a = static_cast<std::uint32_t>(rng.range(1, 2));
    const std::uint64_t room = (limit - total) / (pieces * w.size());
    if (room == 0) break;
    const std::uint64_t count = rng.range(1, room);
    const std::uint32_t piece = arena->repeat(arena->from_word(w), count);
    node = total == 0 ? piece : arena->concat(node, piece);
    total += count * w.size();
  }
  return Slp(arena, node);
}

Result slp_words() {
  SeededRng rng(505);
  std::size_t exact = 0;
  constexpr std::size_t kShort = 2000;
  for (std::size_t t = 0; t < kShort; ++t) {
    SeededRng key_rng(t);
    auto arena = std::make_shared<SlpArena>(FingerprintKey::random(key_rng));
    exact += short_pair_exact(rng, arena, t % 2 == 0);
  }

  std::size_t false_equal = 0, equal_ok = 0;
  std::shared_ptr<SlpArena> arena;
  BigInt longest = 0;
  for (std::size_t t = 0; t < 10000; ++t) {
    if (t % 100 == 0) {
      SeededRng key_rng(90000 + t);
      arena = std::make_shared<SlpArena>(FingerprintKey::random(key_rng));
    }
    const Slp u = random_long_word(rng, arena);
    const BigInt len = u.length();
    longest = std::max(longest, len);
    const BigInt k = BigInt(rng.range(1, len.convert_to<std::uint64_t>()));
    const std::uint32_t old_letter = letter_at(u, k);
    std::uint32_t node = arena->letter(old_letter == 1 ? 2 : 1);
    if (k > 1) node = arena->concat(subword_slp(u, 1, k - 1).root(), node);
    if (k < len) node = arena->concat(node, subword_slp(u, k + 1, len).root());
    const Slp v(arena, node);
    false_equal += equals(u, v).equal;
    // The same word rebuilt around the same cut must still compare equal.
    std::uint32_t same = arena->letter(old_letter);
    if (k > 1) same = arena->concat(subword_slp(u, 1, k - 1).root(), same);
    if (k < len) same = arena->concat(same, subword_slp(u, k + 1, len).root());
    equal_ok += equals(u, Slp(arena, same)).equal;
  }
  return {exact == kShort && false_equal == 0,
          fmt("short words: %zu/%zu exact; long unequal pairs: %zu/10000 "
              "reported equal (longest |w| = %s); rebuilt equal pairs: "
              "%zu/10000 equal",
              exact, kShort, false_equal, longest.str().c_str(), equal_ok)};
}

Result squaring_sparsity() {
  const PrimeField f(101);
  const std::size_t want[] = {2, 4, 16, 256, 65536};
  std::string sizes;
  bool ok = true;
  for (std::uint32_t s = 0; s <= 4; ++s) {
    const NcPoly p = expand(squaring_circuit(f, s), {std::size_t{1} << 20, 64});
    bool unit = true;
    for (const auto& [w, c] : p.terms()) unit = unit && c == 1;
    ok = ok && p.size() == want[s] && unit;
    sizes += fmt("%ss=%u: %zu", s == 0 ? "" : ", ", s, p.size());
  }
  return {ok, sizes + " monomials, all coefficients 1"};
}

Result lowdeg_matrices() {
  const PrimeField f(10007);
  std::size_t runs = 0, false_zero = 0;
  for (std::uint64_t seed = 1; runs < 1000; ++seed) {
    GenOptions opt;
    opt.kind = GenClass::kLowDegree;
    opt.seed = 7000 + seed;
    opt.num_vars = static_cast<std::uint32_t>(1 + seed % 4);
    opt.degree = 3;
    opt.prime = 10007;
    const Circuit c = generate(opt).circuit;
    if (syntactic_degree(c) > 3 || expand(c).is_zero()) continue;
    ++runs;
    BlackBoxConfig cfg;
    cfg.trials = 5;
    cfg.seed = seed;
    false_zero += !lowdeg_bw_test(BlackBox::from_circuit(c), 2, cfg).nonzero;
  }
  const Circuit comm = commutator_circuit(f);
  SeededRng rng(707);
  std::size_t zero_matrix = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::vector<Matrix> point = {Matrix::random(rng, f, 1, 1),
                                       Matrix::random(rng, f, 1, 1)};
    zero_matrix += evaluate_matrix(comm, 1, point) == Matrix(f, 1, 1);
  }
  BlackBoxConfig cfg;
  cfg.trials = 5;
  const bool d1_zero = !lowdeg_bw_test(BlackBox::from_circuit(comm), 1, cfg).nonzero;
  return {false_zero == 0 && zero_matrix == 1000 && d1_zero,
          fmt("%zu/1000 nonzero circuits reported probably zero; commutator "
              "on scalars: %zu/1000 zero matrices",
              false_zero, zero_matrix)};
}

Result structural_properties() {
  SeededRng rng(808);
  const PrimeField f(7);
  std::size_t map_ok = 0, ml_ok = 0, zeros = 0;
  for (int t = 0; t < 200; ++t) {
    const ProductSum ps = random_product_sum(rng, f, 3, 4, 3);
    const NcPoly sum = combine(f, ps.n, ps.products, ps.beta);
    zeros += sum.is_zero();
    const std::size_t d = ps.products[0].size();

    // x_i -> sum_k A(k, i) x_k at one position acts on the form there as
    // c -> A c.
    const Matrix a = random_invertible(rng, f, ps.n);
    const std::size_t pos = rng.range(1, d);
    std::vector<LinearProduct> mapped = ps.products;
    for (LinearProduct& p : mapped) {
      LinForm image;
      for (std::uint32_t k = 0; k < ps.n; ++k) {
        std::uint64_t c = 0;
        for (std::uint32_t i = 0; i < ps.n; ++i) {
          c = f.add(c, f.mul(a(k, i), p[pos - 1].coeffs[i]));
        }
        image.coeffs.push_back(c);
      }
      p[pos - 1] = image;
    }
    const NcPoly via_forms = combine(f, ps.n, mapped, ps.beta);
    const NcPoly g = sum.is_zero() ? sum : apply_position_map(sum, pos, a);
    map_ok += g == via_forms && g.is_zero() == sum.is_zero() &&
              (g.is_zero() || apply_position_map(g, pos, inverse(a)) == sum);

    // Position j of each product reads the variable block of position j.
    const std::uint32_t wide = static_cast<std::uint32_t>(ps.n * d);
    std::vector<LinearProduct> hat = ps.products;
    for (LinearProduct& p : hat) {
      for (std::size_t j = 0; j < d; ++j) {
        LinForm l;
        l.coeffs.assign(wide, 0);
        for (std::uint32_t i = 0; i < ps.n; ++i) {
          l.coeffs[i * d + j] = p[j].coeffs[i];
        }
        p[j] = l;
      }
    }
    const NcPoly hat_sum = combine(f, wide, hat, ps.beta);
    const NcPoly ml = set_multilinearize(sum);
    ml_ok += hat_sum.is_zero() == sum.is_zero() &&
             (sum.is_zero() || ml == hat_sum);
  }

  std::size_t entry_ok = 0;
  const PrimeField g(101);
  for (int t = 0; t < 100; ++t) {
    const ProductSum ps = random_product_sum(rng, g, 3, 6, 3);
    const NcPoly sum = combine(g, ps.n, ps.products, ps.beta);
    const std::size_t d = ps.products[0].size();
    const std::size_t k = rng.range(0, std::min<std::size_t>(3, d));
    const AutomatonPoint pt = AutomatonPoint::random(rng, g, ps.n, k);
    const Matrix m =
        evaluate_terms(sum, k + 1, build_automaton_matrices(g, ps.n, pt));
    entry_ok += m(0, k) == automaton_entry_from_projections(sum, pt);
  }
  return {map_ok == 200 && ml_ok == 200 && entry_ok == 100,
          fmt("position maps %zu/200, multilinearization %zu/200 "
              "(%zu zero instances); automaton entry %zu/100",
              map_ok, ml_ok, zeros, entry_ok)};
}

}  // namespace
}  // namespace ncpit

int main() {
  struct Check {
    const char* name;
    std::function<ncpit::Result()> run;
  };
  const std::vector<Check> checks = {
      {"plus-regular-oracle", ncpit::plus_regular_oracle},
      {"sps-blackbox-oracle", ncpit::sps_blackbox_oracle},
      {"isolating-sets", ncpit::isolating_sets},
      {"abp-dependencies", ncpit::abp_dependencies},
      {"slp-words", ncpit::slp_words},
      {"squaring-sparsity", ncpit::squaring_sparsity},
      {"lowdeg-matrices", ncpit::lowdeg_matrices},
      {"structural-properties", ncpit::structural_properties},
  };
  int failures = 0;
  for (const Check& c : checks) {
    ncpit::Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", c.name,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
