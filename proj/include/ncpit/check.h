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

#ifndef NCPIT_CHECK_H_
#define NCPIT_CHECK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ncpit/blackbox.h"
#include "ncpit/circuit.h"
#include "ncpit/errors.h"
#include "ncpit/oracle.h"

namespace ncpit {

// No implemented algorithm applies to the circuit within the budgets.
class NoApplicableAlgorithm : public Error {
 public:
  using Error::Error;
};

enum class CheckMode { kAuto, kPlusRegular, kSps, kLowDegree, kOracle };

std::optional<CheckMode> parse_check_mode(const std::string& name);

struct CheckOptions {
  CheckMode mode = CheckMode::kAuto;
  std::uint64_t seed = 0;
  // 0: derive the number of trials from `error`.
  std::size_t trials = 0;
  double error = 1e-12;
  std::uint64_t c_const = 4;
  ExpandBudget budget;
  // Largest matrix dimension the low-degree test may use.
  std::size_t max_lowdeg_dim = 32;
};

enum class CheckResult { kZero, kNonZero, kProbablyZero };

struct Verdict {
  std::string circuit_class;
  std::string algorithm;
  CheckResult result = CheckResult::kZero;
  std::optional<double> epsilon;
  std::optional<Witness> witness;
  bool deterministic = true;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
};

// Dispatches to the requested algorithm; in auto mode tries, in order,
// plus-regular, sum of products, low degree and the expansion oracle. Throws
// NoApplicableAlgorithm when nothing applies.
Verdict run_check(const Circuit& c, const CheckOptions& options);

std::string result_name(CheckResult r);
std::string verdict_json(const Verdict& v);
std::string witness_json(const Witness& w);
// Parses the witness part of a verdict (or a bare witness object).
Witness parse_witness_json(const std::string& text);

struct ClassReport {
  std::string summary;  // e.g. "sps, s=2, D=2; also plus-regular, 2 layers"
  std::string json;
};

ClassReport classify_report(const Circuit& c);

}  // namespace ncpit

#endif  // NCPIT_CHECK_H_
