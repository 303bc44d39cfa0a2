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

#include "ncpit/check.h"

#include <chrono>
#include <cmath>
#include <sstream>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ncpit/classify.h"
#include "ncpit/plus_regular.h"

namespace ncpit {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxTrials = 1000;

std::size_t trials_for(const CheckOptions& opt, double ratio) {
  if (opt.trials > 0) return opt.trials;
  if (!(opt.error > 0) || opt.error >= 1 || ratio <= 0) return 1;
  const double t = std::ceil(std::log(opt.error) / std::log(ratio));
  return static_cast<std::size_t>(std::clamp(t, 1.0, double(kMaxTrials)));
}

// Each attempt fills `v` and returns true, or returns false with `why` set.
bool try_plus_regular(const Circuit& c, const CheckOptions& opt, Verdict& v,
                      std::string& why) {
  auto classified = classify_plus_regular(c);
  if (auto* r = std::get_if<Rejection>(&classified)) {
    why = "not plus-regular: " + r->describe();
    return false;
  }
  PlusRegularConfig cfg;
  cfg.pistar.c_const = opt.c_const;
  cfg.seed = opt.seed;
  try {
    const PlusRegularOutcome out = pit_plus_regular(c, cfg);
    v.circuit_class = "plus-regular";
    v.algorithm = "plus-regular-elimination";
    v.result = out.is_zero ? CheckResult::kZero : CheckResult::kNonZero;
    v.deterministic = out.certain;
    if (!out.certain) v.epsilon = cfg.pistar.equality.epsilon;
    return true;
  } catch (const ConfigCapExceeded& e) {
    why = std::string("plus-regular: ") + e.what();
    return false;
  }
}

bool try_sps(const Circuit& c, const CheckOptions& opt, Verdict& v,
             std::string& why) {
  auto classified = classify_sps(c, opt.seed);
  if (auto* r = std::get_if<Rejection>(&classified)) {
    why = "not a sum of products of linear forms: " + r->describe();
    return false;
  }
  const SpsView& view = std::get<SpsView>(classified);
  const BigInt& d = view.max_degree;
  const std::uint64_t p = c.field().modulus();
  if (d >= (BigInt(1) << 60) || BigInt(p) <= 4 * d) {
    why = "sps: field too small for degree " + d.str() + " (need p > 4D)";
    return false;
  }
  const double ratio = (2 * d).convert_to<double>() / static_cast<double>(p);
  const BlackBoxConfig cfg{trials_for(opt, ratio), opt.seed};
  const BlackBoxOutcome out =
      blackbox_sps_test(BlackBox::from_circuit(c), view.fan_in(), d, cfg);
  v.circuit_class = "sps";
  v.algorithm = "automaton-blackbox";
  v.deterministic = false;
  if (out.nonzero) {
    v.result = CheckResult::kNonZero;
    v.witness = out.witness;
  } else {
    v.result = CheckResult::kProbablyZero;
    v.epsilon = out.epsilon;
  }
  return true;
}

bool try_lowdeg(const Circuit& c, const CheckOptions& opt, Verdict& v,
                std::string& why) {
  const BigInt degree = syntactic_degree(c);
  const BigInt dim = degree / 2 + 1;  // smallest d with 2d - 1 >= degree
  if (dim > opt.max_lowdeg_dim) {
    why = "lowdeg: degree " + degree.str() + " needs " + dim.str() +
          "x" + dim.str() + " matrices (limit " +
          std::to_string(opt.max_lowdeg_dim) + ")";
    return false;
  }
  const std::size_t d = static_cast<std::size_t>(dim);
  const std::uint64_t p = c.field().modulus();
  if (p < 4 * d) {
    why = "lowdeg: field too small (need p >= " + std::to_string(4 * d) + ")";
    return false;
  }
  const double ratio = static_cast<double>(2 * d - 1) / static_cast<double>(p);
  const BlackBoxConfig cfg{trials_for(opt, ratio), opt.seed};
  const BlackBoxOutcome out = lowdeg_bw_test(BlackBox::from_circuit(c), d, cfg);
  v.circuit_class = "general";
  v.algorithm = "random-matrices";
  v.deterministic = false;
  if (out.nonzero) {
    v.result = CheckResult::kNonZero;
    v.witness = out.witness;
  } else {
    v.result = CheckResult::kProbablyZero;
    v.epsilon = out.epsilon;
  }
  return true;
}

bool try_oracle(const Circuit& c, const CheckOptions& opt, Verdict& v,
                std::string& why) {
  try {
    const NcPoly f = expand(c, opt.budget);
    v.circuit_class = "general";
    v.algorithm = "expansion";
    v.result = f.is_zero() ? CheckResult::kZero : CheckResult::kNonZero;
    v.deterministic = true;
    return true;
  } catch (const BudgetExceeded& e) {
    why = std::string("oracle: ") + e.what();
    return false;
  }
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["test"] = w.test == TestKind::kSps ? "sps" : "lowdeg";
  j["dim"] = w.dim;
  if (w.test == TestKind::kSps) j["k"] = w.k;
  j["trial"] = w.trial;
  j["seed"] = w.seed;
  j["entry"] = {w.row, w.col};
  j["value"] = w.value;
  if (w.point) {
    j["point"] = {{"z", w.point->z}, {"xi", w.point->xi}, {"x", w.point->x}};
  }
  if (!w.matrices.empty()) {
    Json mats = Json::array();
    for (const Matrix& m : w.matrices) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t col = 0; col < m.cols(); ++col) row.push_back(m(r, col));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    j["matrices"] = mats;
  }
  return j;
}

}  // namespace

std::optional<CheckMode> parse_check_mode(const std::string& name) {
  if (name == "auto") return CheckMode::kAuto;
  if (name == "plus-regular") return CheckMode::kPlusRegular;
  if (name == "sps") return CheckMode::kSps;
  if (name == "lowdeg") return CheckMode::kLowDegree;
  if (name == "oracle") return CheckMode::kOracle;
  return std::nullopt;
}

Verdict run_check(const Circuit& c, const CheckOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.seed = opt.seed;
  auto finish = [&]() {
    v.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return v;
  };

  const Circuit folded = fold_constants(c);
  const Gate& top = folded.gate(folded.output());
  if (top.kind == GateKind::kConst) {
    v.circuit_class = "constant";
    v.algorithm = "constant-folding";
    v.result = top.value == 0 ? CheckResult::kZero : CheckResult::kNonZero;
    return finish();
  }

  using Attempt = bool (*)(const Circuit&, const CheckOptions&, Verdict&,
                           std::string&);
  std::vector<Attempt> attempts;
  switch (opt.mode) {
    case CheckMode::kAuto:
      attempts = {try_plus_regular, try_sps, try_lowdeg, try_oracle};
      break;
    case CheckMode::kPlusRegular: attempts = {try_plus_regular}; break;
    case CheckMode::kSps: attempts = {try_sps}; break;
    case CheckMode::kLowDegree: attempts = {try_lowdeg}; break;
    case CheckMode::kOracle: attempts = {try_oracle}; break;
  }
  std::string reasons;
  for (Attempt attempt : attempts) {
    std::string why;
    if (attempt(c, opt, v, why)) return finish();
    if (!reasons.empty()) reasons += "; ";
    reasons += why;
  }
  throw NoApplicableAlgorithm("no applicable algorithm: " + reasons);
}

std::string result_name(CheckResult r) {
  switch (r) {
    case CheckResult::kZero: return "zero";
    case CheckResult::kNonZero: return "nonzero";
    case CheckResult::kProbablyZero: return "probably-zero";
  }
  return "unknown";
}

std::string verdict_json(const Verdict& v) {
  Json j;
  j["class"] = v.circuit_class;
  j["algorithm"] = v.algorithm;
  j["result"] = result_name(v.result);
  j["epsilon"] = v.epsilon ? Json(*v.epsilon) : Json(nullptr);
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  j["deterministic"] = v.deterministic;
  j["seed"] = v.seed;
  j["elapsed_ms"] = v.elapsed_ms;
  return j.dump(2);
}

std::string witness_json(const Witness& w) {
  return witness_to_json(w).dump(2);
}

Witness parse_witness_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad witness JSON: ") + e.what());
  }
  if (j.contains("witness")) j = j["witness"];
  if (!j.is_object()) throw UsageError("no witness object");
  try {
    Witness w;
    w.test = j.at("test").get<std::string>() == "sps" ? TestKind::kSps
                                                       : TestKind::kLowDegree;
    w.dim = j.at("dim").get<std::size_t>();
    if (w.test == TestKind::kSps) w.k = j.at("k").get<std::size_t>();
    w.trial = j.value("trial", std::size_t{0});
    w.seed = j.at("seed").get<std::uint64_t>();
    w.row = j.at("entry").at(0).get<std::size_t>();
    w.col = j.at("entry").at(1).get<std::size_t>();
    w.value = j.at("value").get<std::uint64_t>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad witness JSON: ") + e.what());
  }
}

ClassReport classify_report(const Circuit& c) {
  Json j;
  std::ostringstream summary;
  const BigInt degree = syntactic_degree(fold_constants(c));
  j["degree"] = degree.str();
  j["homogeneous"] = check_homogeneous(c).homogeneous;

  auto pr = classify_plus_regular(c);
  auto sps = classify_sps(c);
  const auto* layering = std::get_if<PlusLayering>(&pr);
  const auto* view = std::get_if<SpsView>(&sps);

  Json jp;
  jp["accepted"] = layering != nullptr;
  if (layering) {
    jp["layers"] = layering->num_layers;
    Json degs = Json::array();
    for (const BigInt& d : layering->layer_degrees) degs.push_back(d.str());
    jp["layer_degrees"] = degs;
  } else {
    jp["reason"] = std::get<Rejection>(pr).describe();
  }
  Json js;
  js["accepted"] = view != nullptr;
  if (view) {
    js["s"] = view->fan_in();
    js["D"] = view->max_degree.str();
    js["homogeneous"] = view->homogeneous;
  } else {
    js["reason"] = std::get<Rejection>(sps).describe();
  }
  j["plus_regular"] = jp;
  j["sps"] = js;

  if (view) {
    summary << "sps, s=" << view->fan_in() << ", D=" << view->max_degree;
    if (layering) {
      summary << "; also plus-regular, " << layering->num_layers
              << (layering->num_layers == 1 ? " layer" : " layers");
    }
  } else if (layering) {
    summary << "plus-regular, " << layering->num_layers
            << (layering->num_layers == 1 ? " layer" : " layers");
  } else {
    const HomogeneityCheck h = check_homogeneous(c);
    if (!h.homogeneous) {
      summary << "neither: homogeneity violation at g" << *h.violating_label;
    } else {
      summary << "neither: " << std::get<Rejection>(pr).describe() << "; "
              << std::get<Rejection>(sps).describe();
    }
  }
  j["summary"] = summary.str();
  return ClassReport{summary.str(), j.dump(2)};
}

}  // namespace ncpit
