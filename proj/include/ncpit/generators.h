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

#ifndef NCPIT_GENERATORS_H_
#define NCPIT_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ncpit/circuit.h"
#include "ncpit/field.h"

namespace ncpit {

enum class GenClass { kPlusRegular, kSps, kLowDegree, kSquaring };

// Name used on the command line and in sidecars.
std::string gen_class_name(GenClass c);
std::optional<GenClass> parse_gen_class(const std::string& name);

struct GenOptions {
  GenClass kind = GenClass::kPlusRegular;
  std::uint64_t seed = 0;
  std::uint32_t num_vars = 3;
  // + layers of a plus-regular circuit; number of squarings for kSquaring.
  std::uint32_t layers = 2;
  // Upper bound on the total degree (kSps: on every product).
  std::uint32_t degree = 8;
  // Maximum summands per + block (kSps: maximum top fan-in).
  std::uint32_t fan_in = 3;
  bool force_zero = false;
  std::uint64_t prime = 101;
  // Plus-regular circuits are redrawn until this many expanded terms is a
  // safe upper bound, so the oracle can check them.
  double max_terms_estimate = 1 << 14;
};

struct Generated {
  Circuit circuit;
  // True when zero by construction; nullopt when the generator does not
  // know (random circuits are usually, but not always, nonzero).
  std::optional<bool> is_zero;
};

// Deterministic in the options.
Generated generate(const GenOptions& options);

// (x1 + x2)^(2^s) by s squarings.
Circuit squaring_circuit(const PrimeField& field, std::uint32_t s);
// x1 x2 - x2 x1.
Circuit commutator_circuit(const PrimeField& field);

}  // namespace ncpit

#endif  // NCPIT_GENERATORS_H_
