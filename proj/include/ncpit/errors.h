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

#ifndef NCPIT_ERRORS_H_
#define NCPIT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncpit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller broke a precondition (mismatched fields, wrong dimensions, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("inverse of zero") {}
};

// A request needs more room than the word-sized machinery provides.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An index or position outside the valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class BudgetKind { kTerms, kDegree };

// Sparse expansion would exceed a term or degree budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(BudgetKind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  BudgetKind kind() const { return kind_; }

 private:
  BudgetKind kind_;
};

// A configured algorithmic cap (mismatch threshold, restriction size) was hit.
class ConfigCapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal structural invariant failed; indicates a bug or a classifier
// accepting something it should not have.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncpit

#endif  // NCPIT_ERRORS_H_
