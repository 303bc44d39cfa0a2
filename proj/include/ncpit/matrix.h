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

#ifndef NCPIT_MATRIX_H_
#define NCPIT_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ncpit/field.h"
#include "ncpit/rng.h"

namespace ncpit {

// Dense row-major matrix over a prime field. Entries are stored as residues.
class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const PrimeField& field, std::size_t dim);
  static Matrix scalar(const PrimeField& field, std::size_t dim,
                       std::uint64_t value);
  static Matrix random(SeededRng& rng, const PrimeField& field,
                       std::size_t rows, std::size_t cols);
  // Rows given as residues; all rows must have the same length.
  static Matrix from_rows(const PrimeField& field,
                          const std::vector<std::vector<std::uint64_t>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::uint64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  FieldElem at(std::size_t r, std::size_t c) const {
    return field_.elem((*this)(r, c));
  }

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }
  Matrix scaled(std::uint64_t c) const;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

// Rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

}  // namespace ncpit

#endif  // NCPIT_MATRIX_H_
