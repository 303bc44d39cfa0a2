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

// Command-line front end: check, classify, expand, gen, replay.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncpit/blackbox.h"
#include "ncpit/check.h"
#include "ncpit/circuit.h"
#include "ncpit/errors.h"
#include "ncpit/generators.h"
#include "ncpit/oracle.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ncpit::UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ncpit::UsageError("cannot write " + path);
  out << text;
}

ncpit::Circuit load(const std::string& path,
                    std::optional<std::uint64_t> prime) {
  return ncpit::parse_circuit(read_file(path), prime);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identity testing for noncommutative arithmetic circuits"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Decide whether a circuit is zero");
  std::string mode = "auto";
  std::size_t trials = 0;
  double error = 1e-12;
  std::uint64_t c_const = 4;
  std::size_t max_expand = std::size_t{1} << 20;
  check->add_option("file", file, "Circuit in .ncc format")->required();
  check->add_option("--mode", mode, "auto|plus-regular|sps|lowdeg|oracle");
  check->add_option("--prime", prime, "Override the field modulus");
  check->add_option("--seed", seed, "Random seed");
  check->add_option("--trials", trials,
                    "Trials per randomized test (0: derive from --error)");
  check->add_option("--error", error, "Target error probability");
  check->add_option("--c-const", c_const,
                    "Constant c in the c*l^4 mismatch threshold");
  check->add_option("--max-expand", max_expand,
                    "Term budget of the expansion oracle");

  auto* classify = app.add_subcommand("classify", "Report the circuit class");
  bool as_json = false;
  classify->add_option("file", file, "Circuit in .ncc format")->required();
  classify->add_option("--prime", prime, "Override the field modulus");
  classify->add_flag("--json", as_json, "Print a JSON report");

  auto* expand_cmd = app.add_subcommand("expand", "Print the expanded polynomial");
  std::size_t max_terms = std::size_t{1} << 20;
  std::size_t max_degree = 64;
  expand_cmd->add_option("file", file, "Circuit in .ncc format")->required();
  expand_cmd->add_option("--prime", prime, "Override the field modulus");
  expand_cmd->add_option("--max-terms", max_terms, "Term budget");
  expand_cmd->add_option("--max-degree", max_degree, "Degree budget");

  auto* gen = app.add_subcommand("gen", "Generate a random circuit");
  ncpit::GenOptions gen_opt;
  std::string gen_class = "plus-regular";
  std::string out_path;
  std::string truth_path;
  gen->add_option("--class", gen_class, "plus-regular|sps|lowdeg|squaring");
  gen->add_option("--seed", gen_opt.seed, "Random seed");
  gen->add_option("--n", gen_opt.num_vars, "Number of variables");
  gen->add_option("--layers", gen_opt.layers,
                  "+ layers (squaring: number of squarings)");
  gen->add_option("--degree", gen_opt.degree, "Degree bound");
  gen->add_option("--fan-in", gen_opt.fan_in, "Maximum summands per sum");
  gen->add_flag("--force-zero", gen_opt.force_zero,
                "Emit a circuit that is zero by construction");
  gen->add_option("--prime", gen_opt.prime, "Field modulus");
  gen->add_option("--out", out_path, "Output file (default: stdout)");
  gen->add_option("--truth", truth_path, "Write {seed, class, is_zero} here");

  auto* replay = app.add_subcommand("replay", "Re-evaluate a stored witness");
  std::string witness_path;
  replay->add_option("file", file, "Circuit in .ncc format")->required();
  replay->add_option("--witness", witness_path,
                     "Verdict or witness JSON")->required();
  replay->add_option("--prime", prime, "Override the field modulus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*check) {
      ncpit::CheckOptions opt;
      const auto parsed_mode = ncpit::parse_check_mode(mode);
      if (!parsed_mode) throw ncpit::UsageError("unknown mode '" + mode + "'");
      opt.mode = *parsed_mode;
      opt.seed = seed;
      opt.trials = trials;
      opt.error = error;
      opt.c_const = c_const;
      opt.budget.max_terms = max_expand;
      const ncpit::Circuit c = load(file, prime);
      std::cout << ncpit::verdict_json(ncpit::run_check(c, opt)) << "\n";
    } else if (*classify) {
      const ncpit::ClassReport report =
          ncpit::classify_report(load(file, prime));
      std::cout << (as_json ? report.json : report.summary) << "\n";
    } else if (*expand_cmd) {
      const ncpit::Circuit c = load(file, prime);
      const ncpit::NcPoly f = ncpit::expand(c, {max_terms, max_degree});
      std::cout << (f.is_zero() ? "0\n" : f.dump());
    } else if (*gen) {
      const auto kind = ncpit::parse_gen_class(gen_class);
      if (!kind) throw ncpit::UsageError("unknown class '" + gen_class + "'");
      gen_opt.kind = *kind;
      ncpit::Generated g = ncpit::generate(gen_opt);
      if (!g.is_zero) {
        try {
          g.is_zero = ncpit::expand(g.circuit).is_zero();
        } catch (const ncpit::BudgetExceeded&) {
          // Ground truth unknown; recorded as null.
        }
      }
      const std::string text = ncpit::serialize(g.circuit);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      if (!truth_path.empty()) {
        nlohmann::ordered_json truth;
        truth["seed"] = gen_opt.seed;
        truth["class"] = gen_class;
        truth["is_zero"] =
            g.is_zero ? nlohmann::ordered_json(*g.is_zero) : nullptr;
        write_file(truth_path, truth.dump() + "\n");
      }
    } else if (*replay) {
      const ncpit::Circuit c = load(file, prime);
      const ncpit::Witness w =
          ncpit::parse_witness_json(read_file(witness_path));
      const std::uint64_t value =
          ncpit::replay_witness(ncpit::BlackBox::from_circuit(c), w);
      nlohmann::ordered_json j;
      j["value"] = value;
      j["nonzero"] = value != 0;
      j["matches"] = value == w.value;
      std::cout << j.dump(2) << "\n";
      return value != 0 && value == w.value ? kExitOk : kExitFailure;
    }
  } catch (const ncpit::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const ncpit::NoApplicableAlgorithm& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ncpit::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ncpit::ConfigCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
