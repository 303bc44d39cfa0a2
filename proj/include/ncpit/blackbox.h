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

#ifndef NCPIT_BLACKBOX_H_
#define NCPIT_BLACKBOX_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncpit/circuit.h"
#include "ncpit/field.h"
#include "ncpit/matrix.h"
#include "ncpit/rng.h"

namespace ncpit {

// A polynomial available only through evaluation on square matrices.
class BlackBox {
 public:
  using Eval =
      std::function<Matrix(std::size_t dim, std::span<const Matrix> point)>;

  BlackBox(const PrimeField& field, std::uint32_t num_vars, Eval eval,
           std::optional<BigInt> degree_bound = std::nullopt,
           std::optional<std::size_t> fan_in_bound = std::nullopt);

  // Evaluates `c` gate by gate; the degree bound is its syntactic degree.
  static BlackBox from_circuit(const Circuit& c);

  const PrimeField& field() const { return field_; }
  std::uint32_t num_vars() const { return num_vars_; }
  const std::optional<BigInt>& degree_bound() const { return degree_bound_; }
  const std::optional<std::size_t>& fan_in_bound() const {
    return fan_in_bound_;
  }

  // Throws UsageError unless `point` holds num_vars dim x dim matrices.
  Matrix evaluate(std::size_t dim, std::span<const Matrix> point) const;

 private:
  PrimeField field_;
  std::uint32_t num_vars_;
  Eval eval_;
  std::optional<BigInt> degree_bound_;
  std::optional<std::size_t> fan_in_bound_;
};

// Point for the automaton substitution with projection size k: z_i and
// x_{i,q} per variable, xi_1..xi_{k+1}.
struct AutomatonPoint {
  std::size_t k = 0;
  std::vector<std::uint64_t> z;               // z[i-1]
  std::vector<std::uint64_t> xi;              // xi[q-1], q = 1..k+1
  std::vector<std::vector<std::uint64_t>> x;  // x[i-1][q-1], q = 1..k

  static AutomatonPoint random(SeededRng& rng, const PrimeField& field,
                               std::uint32_t num_vars, std::size_t k);
};

// (k+1) x (k+1) matrix per variable: (q, q) = z_i * xi_{q+1} and
// (q-1, q) = x_{i,q}; states are numbered 0..k.
std::vector<Matrix> build_automaton_matrices(const PrimeField& field,
                                             std::uint32_t num_vars,
                                             const AutomatonPoint& point);

enum class TestKind { kSps, kLowDegree };

// Enough to reproduce a nonzero evaluation: the point is regenerated from
// `seed`; the remaining fields are for display.
struct Witness {
  TestKind test = TestKind::kSps;
  std::size_t dim = 0;
  std::size_t k = 0;  // kSps only
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::uint64_t value = 0;
  std::optional<AutomatonPoint> point;  // kSps
  std::vector<Matrix> matrices;         // kLowDegree
};

struct BlackBoxConfig {
  std::size_t trials = 10;
  std::uint64_t seed = 0;
};

struct BlackBoxOutcome {
  bool nonzero = false;
  std::optional<Witness> witness;
  // Bound on the probability that a nonzero polynomial is reported as
  // probably zero.
  double epsilon = 1.0;
  std::size_t evaluations = 0;
};

// Automaton-matrix test for sums of at most s products of linear forms of
// degree at most D. Requires p > 4D and s >= 1.
BlackBoxOutcome blackbox_sps_test(const BlackBox& bb, std::size_t s,
                                  const BigInt& degree,
                                  const BlackBoxConfig& config = {});

// Evaluation on uniformly random d x d matrices; meaningful for degree at
// most 2d - 1. Requires p >= 4d.
BlackBoxOutcome lowdeg_bw_test(const BlackBox& bb, std::size_t d,
                               const BlackBoxConfig& config = {});

// Matrices the witness was produced from, regenerated from its seed.
std::vector<Matrix> witness_point(const BlackBox& bb, const Witness& w);

// Re-evaluates and returns the entry at (row, col).
std::uint64_t replay_witness(const BlackBox& bb, const Witness& w);

}  // namespace ncpit

#endif  // NCPIT_BLACKBOX_H_
