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

#ifndef NCPIT_PRODUCTS_H_
#define NCPIT_PRODUCTS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncpit/circuit.h"
#include "ncpit/errors.h"
#include "ncpit/field.h"
#include "ncpit/lin_forms.h"
#include "ncpit/slp.h"

namespace ncpit {

// alpha * L_1 L_2 ... L_D with the L's given as letters of a LinAlphabet and
// the letter sequence compressed as an Slp. A zero scalar marks a product
// that is identically zero (zero scalar or a zero linear form); its word is
// then unspecified. D = 0 products have no word.
struct SigmaProduct {
  FieldElem scalar;
  std::optional<Slp> word;
  BigInt degree;

  bool is_zero() const { return scalar.is_zero(); }
};

// A gate that cannot be part of the structure being extracted.
class ProductShapeError : public StructuralError {
 public:
  ProductShapeError(std::uint32_t gate, const std::string& message)
      : StructuralError(message), gate_(gate) {}
  std::uint32_t gate() const { return gate_; }

 private:
  std::uint32_t gate_;
};

// Value of a gate whose subcircuit is linear: a scalar (degree 0) or a
// homogeneous linear form (degree 1).
struct LinearValue {
  bool is_scalar = true;
  std::uint64_t scalar = 0;
  LinForm form;
};

// Evaluates gates of degree <= 1 symbolically. Throws ProductShapeError when a
// gate is not a homogeneous linear form or scalar (e.g. x1 + 3, or x1 * x2).
class LinearEvaluator {
 public:
  explicit LinearEvaluator(const Circuit& circuit);

  const LinearValue& value(std::uint32_t gate);

 private:
  const Circuit& circuit_;
  std::vector<std::optional<LinearValue>> memo_;
};

// Turns multiplicative subcircuits into SigmaProducts over a shared arena and
// alphabet. Descent goes through Mul gates; Const gates contribute scalars;
// gates for which `letter_form` returns a form become letters. Any other gate
// met during descent raises ProductShapeError.
class ProductExtractor {
 public:
  using LetterForm = std::function<std::optional<LinForm>(std::uint32_t)>;

  ProductExtractor(const Circuit& circuit, std::shared_ptr<SlpArena> arena,
                   LinAlphabet& alphabet, LetterForm letter_form);

  SigmaProduct extract(std::uint32_t gate);

 private:
  struct Partial {
    std::uint64_t scalar;
    std::optional<std::uint32_t> node;
    BigInt degree;
  };
  const Partial& partial(std::uint32_t gate);

  const Circuit& circuit_;
  std::shared_ptr<SlpArena> arena_;
  LinAlphabet& alphabet_;
  LetterForm letter_form_;
  std::vector<std::optional<Partial>> memo_;
};

}  // namespace ncpit

#endif  // NCPIT_PRODUCTS_H_
