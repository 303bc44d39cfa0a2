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

#include "ncpit/blackbox.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "ncpit/circuit.h"
#include "ncpit/errors.h"
#include "ncpit/generators.h"
#include "ncpit/oracle.h"
#include "ncpit/rng.h"
#include "oracles.h"

namespace ncpit {
namespace {

using ::ncpit::testing::automaton_entry_from_projections;
using ::ncpit::testing::evaluate_terms;
using ::ncpit::testing::random_homogeneous;

const PrimeField kF101(101);

AutomatonPoint fixed_point(std::vector<std::uint64_t> z,
                           std::vector<std::uint64_t> xi,
                           std::vector<std::vector<std::uint64_t>> x) {
  AutomatonPoint p;
  p.k = xi.size() - 1;
  p.z = std::move(z);
  p.xi = std::move(xi);
  p.x = std::move(x);
  return p;
}

TEST(AutomatonTest, MatrixLayout) {
  const auto m = build_automaton_matrices(kF101, 1, fixed_point({2}, {3, 5}, {{7}}));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], Matrix::from_rows(kF101, {{6, 7}, {0, 10}}));
  const auto one =
      build_automaton_matrices(kF101, 2, fixed_point({2, 4}, {3}, {{}, {}}));
  EXPECT_EQ(one[0], Matrix::from_rows(kF101, {{6}}));
  EXPECT_EQ(one[1], Matrix::from_rows(kF101, {{12}}));
  EXPECT_THROW(build_automaton_matrices(kF101, 2, fixed_point({2}, {3}, {{}})),
               UsageError);
}

TEST(AutomatonTest, DegreeTwoEntry) {
  // (0, 1) entry of M_a M_b is z_a xi_1 x_{b,1} + x_{a,1} z_b xi_2.
  const std::uint64_t za = 2, zb = 3, xi1 = 5, xi2 = 7, xa = 11, xb = 13;
  const auto m =
      build_automaton_matrices(kF101, 2, fixed_point({za, zb}, {xi1, xi2}, {{xa}, {xb}}));
  const Matrix prod = m[0] * m[1];
  EXPECT_EQ(prod(0, 1), (za * xi1 * xb + xa * zb * xi2) % 101);
  EXPECT_EQ(prod(1, 0), 0u);
}

TEST(AutomatonTest, RandomPointShape) {
  SeededRng rng(1);
  const AutomatonPoint p = AutomatonPoint::random(rng, kF101, 3, 2);
  EXPECT_EQ(p.k, 2u);
  EXPECT_EQ(p.z.size(), 3u);
  EXPECT_EQ(p.xi.size(), 3u);
  ASSERT_EQ(p.x.size(), 3u);
  EXPECT_EQ(p.x[0].size(), 2u);
}

// The (0, k) entry equals sum_J P_J(point) xi_J(point) over k-subsets J.
TEST(AutomatonTest, EntryMatchesProjectionSum) {
  SeededRng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng.range(1, 3));
    const std::size_t d = rng.range(1, 6);
    const std::size_t k = rng.range(0, std::min<std::size_t>(3, d));
    const NcPoly f = random_homogeneous(rng, kF101, n, d, rng.range(1, 8));
    const AutomatonPoint pt = AutomatonPoint::random(rng, kF101, n, k);
    const Matrix m =
        evaluate_terms(f, k + 1, build_automaton_matrices(kF101, n, pt));
    ASSERT_EQ(m(0, k), automaton_entry_from_projections(f, pt)) << "t=" << t;
  }
}

TEST(BlackBoxTest, FromCircuitAndValidation) {
  const BlackBox bb = BlackBox::from_circuit(commutator_circuit(kF101));
  EXPECT_EQ(bb.num_vars(), 2u);
  EXPECT_EQ(bb.degree_bound(), BigInt(2));
  std::vector<Matrix> one = {Matrix::identity(kF101, 2)};
  EXPECT_THROW(bb.evaluate(2, one), UsageError);
  std::vector<Matrix> other_field = {Matrix::identity(PrimeField(7), 2),
                                     Matrix::identity(PrimeField(7), 2)};
  EXPECT_THROW(bb.evaluate(2, other_field), UsageError);
  const BlackBox bad(kF101, 1,
                     [](std::size_t, std::span<const Matrix>) {
                       return Matrix::identity(PrimeField(101), 3);
                     });
  std::vector<Matrix> ok = {Matrix::identity(kF101, 2)};
  EXPECT_THROW(bad.evaluate(2, ok), UsageError);
}

TEST(SpsBlackBoxTest, CommutatorIsNonzeroAndReplays) {
  const BlackBox bb = BlackBox::from_circuit(commutator_circuit(kF101));
  BlackBoxConfig cfg;
  cfg.trials = 5;
  cfg.seed = 3;
  const BlackBoxOutcome o = blackbox_sps_test(bb, 2, 2, cfg);
  ASSERT_TRUE(o.nonzero);
  ASSERT_TRUE(o.witness.has_value());
  EXPECT_EQ(o.epsilon, 0.0);
  const Witness& w = *o.witness;
  EXPECT_EQ(w.test, TestKind::kSps);
  EXPECT_EQ(w.dim, w.k + 1);
  EXPECT_NE(w.value, 0u);
  EXPECT_EQ(replay_witness(bb, w), w.value);
  // The commutator vanishes on scalars, so k = 0 never succeeds.
  EXPECT_EQ(w.k, 1u);
  EXPECT_EQ(blackbox_sps_test(bb, 2, 2, cfg).witness->seed, w.seed);
}

TEST(SpsBlackBoxTest, ZeroCircuitsAreProbablyZero) {
  CircuitBuilder b(kF101, 2);
  const auto x1 = b.input(1);
  const auto x2 = b.input(2);
  const auto out = b.sub(b.mul(x1, x2), b.mul(x1, x2));
  const BlackBox same = BlackBox::from_circuit(b.build(out));

  CircuitBuilder c(kF101, 2);
  const auto y1 = c.input(1);
  const auto y2 = c.input(2);
  const auto s = c.add(y1, y2);
  std::vector<std::uint32_t> parts = {c.mul(y1, y1), c.mul(y1, y2),
                                      c.mul(y2, y1), c.mul(y2, y2)};
  const auto sq = c.sub(c.mul(s, s), c.sum(parts));
  const BlackBox square = BlackBox::from_circuit(c.build(sq));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BlackBoxConfig cfg;
    cfg.trials = 5;
    cfg.seed = seed;
    const BlackBoxOutcome o1 = blackbox_sps_test(same, 2, 2, cfg);
    EXPECT_FALSE(o1.nonzero);
    EXPECT_EQ(o1.evaluations, 10u);
    EXPECT_NEAR(o1.epsilon, std::pow(4.0 / 101, 5), 1e-15);
    EXPECT_FALSE(blackbox_sps_test(square, 4, 2, cfg).nonzero);
  }
}

TEST(SpsBlackBoxTest, Preconditions) {
  const BlackBox bb = BlackBox::from_circuit(commutator_circuit(kF101));
  EXPECT_NO_THROW(blackbox_sps_test(bb, 2, 25));  // 4 * 25 < 101
  EXPECT_THROW(blackbox_sps_test(bb, 2, 26), UsageError);
  EXPECT_THROW(blackbox_sps_test(bb, 0, 2), UsageError);
  BlackBoxConfig none;
  none.trials = 0;
  EXPECT_THROW(blackbox_sps_test(bb, 2, 2, none), UsageError);
  EXPECT_THROW(blackbox_sps_test(bb, 2, BigInt(1) << 61), CapacityError);
}

TEST(SpsBlackBoxTest, GeneratedCircuitsAgreeWithExpansion) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenOptions opt;
    opt.kind = GenClass::kSps;
    opt.seed = seed;
    opt.num_vars = 1 + seed % 4;
    opt.fan_in = 4;
    opt.degree = 10;
    opt.prime = 65537;
    opt.force_zero = seed % 2 == 0;
    const Circuit c = generate(opt).circuit;
    const bool nonzero = !expand(c).is_zero();
    BlackBoxConfig cfg;
    cfg.seed = seed;
    const BlackBoxOutcome o = blackbox_sps_test(
        BlackBox::from_circuit(c), 4, syntactic_degree(c), cfg);
    ASSERT_EQ(o.nonzero, nonzero) << "seed " << seed;
    if (o.nonzero) {
      ASSERT_NE(replay_witness(BlackBox::from_circuit(c), *o.witness), 0u);
    }
  }
}

TEST(LowDegreeTest, Commutator) {
  const PrimeField f(10007);
  const BlackBox bb = BlackBox::from_circuit(commutator_circuit(f));
  BlackBoxConfig cfg;
  cfg.trials = 5;
  const BlackBoxOutcome o = lowdeg_bw_test(bb, 2, cfg);
  ASSERT_TRUE(o.nonzero);
  EXPECT_EQ(o.witness->test, TestKind::kLowDegree);
  EXPECT_EQ(replay_witness(bb, *o.witness), o.witness->value);
  EXPECT_EQ(witness_point(bb, *o.witness), o.witness->matrices);

  const BlackBoxOutcome scalars = lowdeg_bw_test(bb, 1, cfg);
  EXPECT_FALSE(scalars.nonzero);
  EXPECT_EQ(scalars.evaluations, 5u);
  EXPECT_NEAR(scalars.epsilon, std::pow(1.0 / 10007, 5), 1e-30);
}

TEST(LowDegreeTest, ZeroCircuitAndPreconditions) {
  const PrimeField f(10007);
  CircuitBuilder b(f, 1);
  const auto x = b.input(1);
  const BlackBox zero = BlackBox::from_circuit(b.build(b.sub(x, x)));
  EXPECT_FALSE(lowdeg_bw_test(zero, 3).nonzero);
  const BlackBox small = BlackBox::from_circuit(commutator_circuit(PrimeField(7)));
  EXPECT_THROW(lowdeg_bw_test(small, 2), UsageError);
  EXPECT_THROW(lowdeg_bw_test(zero, 0), UsageError);
}

}  // namespace
}  // namespace ncpit
