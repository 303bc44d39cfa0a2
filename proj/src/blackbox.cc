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
#include <string>
#include <utility>

#include "ncpit/errors.h"

namespace ncpit {
namespace {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t k,
                         std::size_t trial) {
  return SeededRng::derive(SeededRng::derive(seed, k), trial);
}

std::vector<Matrix> random_matrices(const BlackBox& bb, std::size_t d,
                                    std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Matrix> out;
  for (std::uint32_t i = 0; i < bb.num_vars(); ++i) {
    out.push_back(Matrix::random(rng, bb.field(), d, d));
  }
  return out;
}

double error_bound(const BigInt& numerator, std::uint64_t p,
                   std::size_t trials) {
  const double ratio = numerator.convert_to<double>() / static_cast<double>(p);
  return std::pow(std::min(ratio, 1.0), static_cast<double>(trials));
}

}  // namespace

BlackBox::BlackBox(const PrimeField& field, std::uint32_t num_vars, Eval eval,
                   std::optional<BigInt> degree_bound,
                   std::optional<std::size_t> fan_in_bound)
    : field_(field), num_vars_(num_vars), eval_(std::move(eval)),
      degree_bound_(std::move(degree_bound)), fan_in_bound_(fan_in_bound) {}

BlackBox BlackBox::from_circuit(const Circuit& c) {
  return BlackBox(
      c.field(), c.num_vars(),
      [c](std::size_t dim, std::span<const Matrix> point) {
        return evaluate_matrix(c, dim, point);
      },
      syntactic_degree(c));
}

Matrix BlackBox::evaluate(std::size_t dim,
                          std::span<const Matrix> point) const {
  if (point.size() != num_vars_) {
    throw UsageError("black box expects " + std::to_string(num_vars_) +
                     " matrices");
  }
  for (const Matrix& m : point) {
    if (m.rows() != dim || m.cols() != dim || !(m.field() == field_)) {
      throw UsageError("matrix of the wrong shape or field");
    }
  }
  Matrix out = eval_(dim, point);
  if (out.rows() != dim || out.cols() != dim) {
    throw UsageError("black box returned a matrix of the wrong shape");
  }
  return out;
}

AutomatonPoint AutomatonPoint::random(SeededRng& rng, const PrimeField& field,
                                      std::uint32_t num_vars, std::size_t k) {
  AutomatonPoint pt;
  pt.k = k;
  const std::uint64_t p = field.modulus();
  for (std::uint32_t i = 0; i < num_vars; ++i) pt.z.push_back(rng.uniform(p));
  for (std::size_t q = 0; q <= k; ++q) pt.xi.push_back(rng.uniform(p));
  pt.x.assign(num_vars, {});
  for (std::uint32_t i = 0; i < num_vars; ++i) {
    for (std::size_t q = 0; q < k; ++q) pt.x[i].push_back(rng.uniform(p));
  }
  return pt;
}

std::vector<Matrix> build_automaton_matrices(const PrimeField& field,
                                             std::uint32_t num_vars,
                                             const AutomatonPoint& point) {
  const std::size_t k = point.k;
  if (point.z.size() != num_vars || point.xi.size() != k + 1 ||
      point.x.size() != num_vars) {
    throw UsageError("automaton point does not match n and k");
  }
  std::vector<Matrix> out;
  for (std::uint32_t i = 0; i < num_vars; ++i) {
    if (point.x[i].size() != k) {
      throw UsageError("automaton point does not match n and k");
    }
    Matrix m(field, k + 1, k + 1);
    for (std::size_t q = 0; q <= k; ++q) {
      m(q, q) = field.mul(field.reduce(point.z[i]), field.reduce(point.xi[q]));
    }
    for (std::size_t q = 1; q <= k; ++q) {
      m(q - 1, q) = field.reduce(point.x[i][q - 1]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

BlackBoxOutcome blackbox_sps_test(const BlackBox& bb, std::size_t s,
                                  const BigInt& degree,
                                  const BlackBoxConfig& config) {
  if (s == 0) throw UsageError("top fan-in must be at least 1");
  if (config.trials == 0) throw UsageError("need at least one trial");
  if (degree >= (BigInt(1) << 60)) {
    throw CapacityError("degree too large for a field below 2^62");
  }
  const std::uint64_t p = bb.field().modulus();
  if (BigInt(p) <= 4 * degree) {
    throw UsageError("field too small: need p > 4D = " +
                     BigInt(4 * degree).str());
  }
  BlackBoxOutcome out;
  out.epsilon = error_bound(2 * degree, p, config.trials);
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      const std::uint64_t seed = trial_seed(config.seed, k, t);
      SeededRng rng(seed);
      AutomatonPoint pt =
          AutomatonPoint::random(rng, bb.field(), bb.num_vars(), k);
      const Matrix m = bb.evaluate(
          k + 1, build_automaton_matrices(bb.field(), bb.num_vars(), pt));
      ++out.evaluations;
      if (m(0, k) == 0) continue;
      out.nonzero = true;
      out.epsilon = 0;
      out.witness = Witness{TestKind::kSps, k + 1, k, t, seed, 0, k,
                            m(0, k), std::move(pt), {}};
      return out;
    }
  }
  return out;
}

BlackBoxOutcome lowdeg_bw_test(const BlackBox& bb, std::size_t d,
                               const BlackBoxConfig& config) {
  if (d == 0) throw UsageError("matrix dimension must be at least 1");
  if (config.trials == 0) throw UsageError("need at least one trial");
  const std::uint64_t p = bb.field().modulus();
  if (BigInt(p) < 4 * BigInt(d)) {
    throw UsageError("field too small: need p >= 4d = " +
                     std::to_string(4 * d));
  }
  BlackBoxOutcome out;
  out.epsilon = error_bound(BigInt(2 * d - 1), p, config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const std::uint64_t seed = trial_seed(config.seed, 0, t);
    std::vector<Matrix> point = random_matrices(bb, d, seed);
    const Matrix m = bb.evaluate(d, point);
    ++out.evaluations;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (m(r, c) == 0) continue;
        out.nonzero = true;
        out.epsilon = 0;
        out.witness = Witness{TestKind::kLowDegree, d, 0, t, seed, r, c,
                              m(r, c), std::nullopt, std::move(point)};
        return out;
      }
    }
  }
  return out;
}

std::vector<Matrix> witness_point(const BlackBox& bb, const Witness& w) {
  if (w.test == TestKind::kLowDegree) return random_matrices(bb, w.dim, w.seed);
  SeededRng rng(w.seed);
  const AutomatonPoint pt =
      AutomatonPoint::random(rng, bb.field(), bb.num_vars(), w.k);
  return build_automaton_matrices(bb.field(), bb.num_vars(), pt);
}

std::uint64_t replay_witness(const BlackBox& bb, const Witness& w) {
  const Matrix m = bb.evaluate(w.dim, witness_point(bb, w));
  if (w.row >= m.rows() || w.col >= m.cols()) {
    throw UsageError("witness entry outside the matrix");
  }
  return m(w.row, w.col);
}

}  // namespace ncpit
