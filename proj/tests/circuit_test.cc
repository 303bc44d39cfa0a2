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

#include "ncpit/circuit.h"

#include <cstdint>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ncpit/errors.h"
#include "ncpit/generators.h"
#include "ncpit/oracle.h"
#include "ncpit/rng.h"
#include "oracles.h"

namespace ncpit {
namespace {

using ::ncpit::testing::evaluate_terms;

using ::testing::HasSubstr;

constexpr char kCommutator[] =
    "field 101\n"
    "vars 2\n"
    "g1 = x1\n"
    "g2 = x2\n"
    "g3 = mul g1 g2\n"
    "g4 = mul g2 g1\n"
    "g5 = const -1\n"
    "g6 = mul g5 g4\n"
    "g7 = add g3 g6\n"
    "output g7\n";

std::string parse_error_of(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(CircuitParseTest, ParsesAndRoundTrips) {
  const Circuit c = parse_circuit(kCommutator);
  EXPECT_EQ(c.field().modulus(), 101u);
  EXPECT_EQ(c.num_vars(), 2u);
  EXPECT_EQ(c.size(), 7u);
  EXPECT_EQ(c.label(c.output()), 7u);
  EXPECT_EQ(c.gate(4).value, 100u);
  EXPECT_EQ(serialize(c), kCommutator);
  EXPECT_EQ(serialize(parse_circuit(serialize(c))), serialize(c));
}

TEST(CircuitParseTest, CommentsBlankLinesAndSparseLabels) {
  const Circuit c = parse_circuit(
      "# header\n\nfield 7\nvars 1\ng10 = x1   # input\n\ng20 = mul g10 g10\n"
      "output g20\n");
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gate(1).left, 0u);
  EXPECT_EQ(c.label(1), 20u);
}

TEST(CircuitParseTest, ConstantsReduceModuloP) {
  const Circuit c =
      parse_circuit("field 7\nvars 1\ng1 = const 30\ng2 = const -9\noutput g2\n");
  EXPECT_EQ(c.gate(0).value, 2u);
  EXPECT_EQ(c.gate(1).value, 5u);
}

TEST(CircuitParseTest, FieldOverrideReinterpretsConstants) {
  const Circuit c = parse_circuit(kCommutator, 10007);
  EXPECT_EQ(c.field().modulus(), 10007u);
  EXPECT_EQ(c.gate(4).value, 10006u);
  const Circuit d = parse_circuit(kCommutator).with_field(PrimeField(10007));
  EXPECT_EQ(serialize(c), serialize(d));
}

TEST(CircuitParseTest, Errors) {
  EXPECT_THAT(parse_error_of("field 101\nvars 1\ng1 = x1\ng2 = mul g1 g3\n"
                             "g3 = x1\noutput g3\n"),
              HasSubstr("line 4: forward reference to g3"));
  EXPECT_THAT(parse_error_of("field 101\nvars 1\ng1 = x1\ng3 = mul g1 g2\n"
                             "output g3\n"),
              HasSubstr("unknown gate id g2"));
  EXPECT_THAT(parse_error_of("field 100\nvars 1\ng1 = x1\noutput g1\n"),
              HasSubstr("line 1"));
  EXPECT_THAT(parse_error_of("vars 1\n"), HasSubstr("expected 'field <p>'"));
  EXPECT_THAT(parse_error_of("field 5\nvars 1\ng1 = x2\noutput g1\n"),
              HasSubstr("variable x2 outside 1..1"));
  EXPECT_THAT(parse_error_of("field 5\nvars 1\ng2 = x1\ng1 = x1\noutput g1\n"),
              HasSubstr("strictly increase"));
  EXPECT_THAT(parse_error_of("field 5\nvars 1\ng1 = x1\ng2 = sub g1 g1\n"
                             "output g2\n"),
              HasSubstr("unknown gate 'sub'"));
  EXPECT_THAT(parse_error_of("field 5\nvars 1\ng1 = const 1x\noutput g1\n"),
              HasSubstr("bad constant"));
  EXPECT_THAT(parse_error_of("field 5\nvars 1\ng1 = x1\n"),
              HasSubstr("missing 'output' line"));
  EXPECT_THAT(parse_error_of("field 5\nvars 1\ng1 = x1\noutput g1\ng2 = x1\n"),
              HasSubstr("content after the output line"));
}

TEST(CircuitTest, ConstructorValidates) {
  const PrimeField f(5);
  Gate in{GateKind::kInput, 1, 2, 0, 0, 0};
  EXPECT_THROW(Circuit(f, 1, {in}, 0), UsageError);
  Gate c{GateKind::kConst, 1, 0, 5, 0, 0};
  EXPECT_THROW(Circuit(f, 1, {c}, 0), UsageError);
  EXPECT_THROW(Circuit(f, 1, {}, 0), UsageError);
  Gate x{GateKind::kInput, 1, 1, 0, 0, 0};
  Gate self{GateKind::kMul, 2, 0, 0, 0, 1};
  EXPECT_THROW(Circuit(f, 1, {x, self}, 1), UsageError);
}

TEST(CircuitTest, ReachabilityAndConsumers) {
  CircuitBuilder b(PrimeField(7), 2);
  const auto x1 = b.input(1);
  const auto x2 = b.input(2);
  const auto dead = b.add(x1, x2);
  const auto sq = b.mul(x1, x1);
  const Circuit c = b.build(sq);
  const auto live = c.reachable();
  EXPECT_TRUE(live[x1]);
  EXPECT_FALSE(live[x2]);
  EXPECT_FALSE(live[dead]);
  const auto cons = c.consumers();
  EXPECT_EQ(cons[x1], (std::vector<std::uint32_t>{sq, sq}));
  EXPECT_TRUE(cons[x2].empty());
}

TEST(CircuitTest, SyntacticDegree) {
  CircuitBuilder b(PrimeField(7), 2);
  const auto x1 = b.input(1);
  const auto x2 = b.input(2);
  const auto c3 = b.constant(3);
  const auto p = b.mul(b.mul(x1, x2), c3);
  const auto s = b.add(p, x1);
  const auto sq = b.mul(s, s);
  const Circuit c = b.build(sq);
  EXPECT_EQ(syntactic_degree(c), 4);
  EXPECT_EQ(syntactic_degrees(c)[s], 2);
  EXPECT_EQ(syntactic_degrees(c)[c3], 0);
}

TEST(CircuitTest, RepeatedSquaringDegreeDoesNotOverflow) {
  const Circuit c = squaring_circuit(PrimeField(101), 100);
  EXPECT_EQ(syntactic_degree(c), BigInt(1) << 100);
}

TEST(CircuitTest, FoldConstants) {
  CircuitBuilder b(PrimeField(7), 1);
  const auto x = b.input(1);
  const auto two = b.constant(2);
  const auto five = b.constant(5);
  const auto zero = b.add(two, five);  // 7 = 0
  const auto y = b.add(zero, x);       // 0 + x
  const auto z = b.mul(zero, x);       // 0 * x
  const auto w = b.mul(b.mul(two, five), y);
  const auto out = b.add(w, z);
  const Circuit c = b.build(out);
  const Circuit f = fold_constants(c);
  EXPECT_EQ(f.size(), c.size());
  EXPECT_EQ(f.gate(zero).kind, GateKind::kConst);
  EXPECT_EQ(f.gate(zero).value, 0u);
  EXPECT_EQ(f.gate(z).kind, GateKind::kConst);
  EXPECT_EQ(f.gate(w).right, x);  // y aliased to x
  EXPECT_EQ(f.gate(w - 1).value, 3u);
  EXPECT_EQ(f.output(), w);       // w + 0 aliased to w
  EXPECT_EQ(f.label(f.output()), c.label(w));

  const Circuit k = fold_constants(c, /*keep_additive_zeros=*/true);
  EXPECT_EQ(k.gate(y).kind, GateKind::kAdd);
  EXPECT_EQ(k.gate(w).right, y);
  EXPECT_EQ(k.output(), out);
  EXPECT_EQ(expand(k), expand(c));
  EXPECT_EQ(expand(f), expand(c));
}

TEST(CircuitTest, HomogeneityCheck) {
  EXPECT_TRUE(check_homogeneous(parse_circuit(kCommutator)).homogeneous);
  const Circuit c = parse_circuit(
      "field 5\nvars 1\ng1 = x1\ng2 = mul g1 g1\ng3 = add g2 g1\noutput g3\n");
  const HomogeneityCheck h = check_homogeneous(c);
  EXPECT_FALSE(h.homogeneous);
  EXPECT_EQ(h.violating_label, 3u);
  // x^2 + 0*x folds to x^2.
  const Circuit d = parse_circuit(
      "field 5\nvars 1\ng1 = x1\ng2 = mul g1 g1\ng3 = const 0\n"
      "g4 = mul g3 g1\ng5 = add g2 g4\noutput g5\n");
  EXPECT_TRUE(check_homogeneous(d).homogeneous);
}

TEST(CircuitTest, MatrixEvaluationMatchesExpansion) {
  SeededRng rng(3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenOptions opt;
    opt.kind = seed % 2 ? GenClass::kLowDegree : GenClass::kSps;
    opt.seed = seed;
    opt.num_vars = 3;
    opt.degree = 4;
    opt.prime = 101;
    const Circuit c = generate(opt).circuit;
    const NcPoly f = expand(c);
    for (std::size_t dim : {1, 2, 3}) {
      std::vector<Matrix> a;
      for (std::uint32_t v = 0; v < c.num_vars(); ++v) {
        a.push_back(Matrix::random(rng, c.field(), dim, dim));
      }
      ASSERT_EQ(evaluate_matrix(c, dim, a), evaluate_terms(f, dim, a))
          << "seed " << seed << " dim " << dim;
      if (dim == 1) {
        std::vector<std::uint64_t> point;
        for (const Matrix& m : a) point.push_back(m(0, 0));
        ASSERT_EQ(evaluate_matrix(c, 1, a)(0, 0),
                  f.evaluate_commutative(point));
      }
    }
  }
}

TEST(CircuitTest, CommutatorVanishesOnScalars) {
  const Circuit c = parse_circuit(kCommutator);
  SeededRng rng(9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Matrix> a = {Matrix::random(rng, c.field(), 1, 1),
                             Matrix::random(rng, c.field(), 1, 1)};
    EXPECT_TRUE(evaluate_matrix(c, 1, a).is_zero());
  }
  std::vector<Matrix> a = {Matrix::from_rows(c.field(), {{0, 1}, {0, 0}}),
                           Matrix::from_rows(c.field(), {{0, 0}, {1, 0}})};
  EXPECT_FALSE(evaluate_matrix(c, 2, a).is_zero());
}

TEST(CircuitTest, EvaluateMatrixValidatesShapes) {
  const Circuit c = parse_circuit(kCommutator);
  std::vector<Matrix> one = {Matrix::identity(c.field(), 2)};
  EXPECT_THROW(evaluate_matrix(c, 2, one), UsageError);
  std::vector<Matrix> wrong = {Matrix::identity(c.field(), 2),
                               Matrix::identity(c.field(), 3)};
  EXPECT_THROW(evaluate_matrix(c, 2, wrong), UsageError);
}

}  // namespace
}  // namespace ncpit
