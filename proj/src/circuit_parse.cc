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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ncpit/circuit.h"
#include "ncpit/errors.h"

namespace ncpit {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::string spaced;
  spaced.reserve(line.size() + 4);
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == '=') {
      spaced += " = ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream is(spaced);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::uint64_t parse_unsigned(std::string_view s, std::size_t line,
                             std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "expected " + std::string(what) + ", got '" +
                               std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_prefixed(std::string_view s, char prefix, std::size_t line,
                             std::string_view what) {
  if (s.size() < 2 || s[0] != prefix) {
    throw ParseError(line, "expected " + std::string(what) + ", got '" +
                               std::string(s) + "'");
  }
  return parse_unsigned(s.substr(1), line, what);
}

std::uint64_t parse_constant(const std::string& s, const PrimeField& field,
                             std::size_t line) {
  const bool negative = !s.empty() && s[0] == '-';
  const std::string digits = negative ? s.substr(1) : s;
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line, "bad constant '" + s + "'");
  }
  const BigInt magnitude(digits);
  const auto residue = static_cast<std::uint64_t>(magnitude % field.modulus());
  return negative ? field.neg(residue) : residue;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  return parse_circuit(text, std::nullopt);
}

Circuit parse_circuit(std::string_view text,
                      std::optional<std::uint64_t> field_override) {
  std::optional<PrimeField> field;
  std::optional<std::uint32_t> num_vars;
  std::vector<Gate> gates;
  std::map<std::uint64_t, std::uint32_t> index_of;
  std::optional<std::uint32_t> output;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;

    if (output) throw ParseError(line_no, "content after the output line");

    if (!field) {
      if (tok.size() != 2 || tok[0] != "field") {
        throw ParseError(line_no, "expected 'field <p>'");
      }
      const std::uint64_t p = parse_unsigned(tok[1], line_no, "a prime");
      try {
        field = PrimeField(field_override.value_or(p));
      } catch (const UsageError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (!num_vars) {
      if (tok.size() != 2 || tok[0] != "vars") {
        throw ParseError(line_no, "expected 'vars <n>'");
      }
      const std::uint64_t n = parse_unsigned(tok[1], line_no, "a count");
      if (n > (std::uint64_t{1} << 31)) {
        throw ParseError(line_no, "too many variables");
      }
      num_vars = static_cast<std::uint32_t>(n);
      continue;
    }

    auto operand = [&](const std::string& s, std::uint64_t current) {
      const std::uint64_t label = parse_prefixed(s, 'g', line_no, "a gate id");
      if (label >= current) {
        throw ParseError(line_no, "forward reference to g" +
                                      std::to_string(label));
      }
      auto it = index_of.find(label);
      if (it == index_of.end()) {
        throw ParseError(line_no, "unknown gate id g" + std::to_string(label));
      }
      return it->second;
    };

    if (tok[0] == "output") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'output g<k>'");
      const std::uint64_t label =
          parse_prefixed(tok[1], 'g', line_no, "a gate id");
      auto it = index_of.find(label);
      if (it == index_of.end()) {
        throw ParseError(line_no, "unknown gate id g" + std::to_string(label));
      }
      output = it->second;
      continue;
    }

    if (tok.size() < 3 || tok[1] != "=") {
      throw ParseError(line_no, "expected 'g<k> = ...'");
    }
    Gate g;
    g.label = parse_prefixed(tok[0], 'g', line_no, "a gate id");
    if (!gates.empty() && g.label <= gates.back().label) {
      throw ParseError(line_no, "gate ids must strictly increase");
    }
    const std::string& op = tok[2];
    if (op == "const") {
      if (tok.size() != 4) throw ParseError(line_no, "expected 'const <c>'");
      g.kind = GateKind::kConst;
      g.value = parse_constant(tok[3], *field, line_no);
    } else if (op == "add" || op == "mul") {
      if (tok.size() != 5) {
        throw ParseError(line_no, "expected '" + op + " g<a> g<b>'");
      }
      g.kind = op == "add" ? GateKind::kAdd : GateKind::kMul;
      // Check in source order so a forward left operand is reported first.
      g.left = operand(tok[3], g.label);
      g.right = operand(tok[4], g.label);
    } else if (op[0] == 'x' && tok.size() == 3) {
      g.kind = GateKind::kInput;
      const std::uint64_t var = parse_prefixed(op, 'x', line_no, "a variable");
      if (var == 0 || var > *num_vars) {
        throw ParseError(line_no, "variable x" + std::to_string(var) +
                                      " outside 1.." +
                                      std::to_string(*num_vars));
      }
      g.var = static_cast<std::uint32_t>(var);
    } else {
      throw ParseError(line_no, "unknown gate '" + op + "'");
    }
    index_of[g.label] = static_cast<std::uint32_t>(gates.size());
    gates.push_back(g);
  }

  if (!field) throw ParseError(line_no, "missing 'field' header");
  if (!num_vars) throw ParseError(line_no, "missing 'vars' header");
  if (!output) throw ParseError(line_no, "missing 'output' line");
  return Circuit(*field, *num_vars, std::move(gates), *output);
}

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "field " << c.field().modulus() << "\n";
  os << "vars " << c.num_vars() << "\n";
  for (const Gate& g : c.gates()) {
    os << 'g' << g.label << " = ";
    switch (g.kind) {
      case GateKind::kInput:
        os << 'x' << g.var;
        break;
      case GateKind::kConst:
        os << "const " << c.field().to_signed(g.value);
        break;
      case GateKind::kAdd:
      case GateKind::kMul:
        os << (g.kind == GateKind::kAdd ? "add" : "mul") << " g"
           << c.gate(g.left).label << " g" << c.gate(g.right).label;
        break;
    }
    os << "\n";
  }
  os << "output g" << c.label(c.output()) << "\n";
  return os.str();
}

}  // namespace ncpit
