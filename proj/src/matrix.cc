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

#include "ncpit/matrix.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ncpit/errors.h"

namespace ncpit {

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const PrimeField& field, std::size_t dim) {
  return scalar(field, dim, 1);
}

Matrix Matrix::scalar(const PrimeField& field, std::size_t dim,
                      std::uint64_t value) {
  Matrix m(field, dim, dim);
  const std::uint64_t v = field.reduce(value);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = v;
  return m;
}

Matrix Matrix::random(SeededRng& rng, const PrimeField& field,
                      std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (auto& x : m.data_) x = rng.uniform(field.modulus());
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field,
                         const std::vector<std::vector<std::uint64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::scaled(std::uint64_t c) const {
  Matrix m = *this;
  c = field_.reduce(c);
  for (auto& x : m.data_) x = field_.mul(x, c);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw UsageError("matrix sum: shape or field mismatch");
  }
  Matrix m(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) {
    m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw UsageError("matrix difference: shape or field mismatch");
  }
  Matrix m(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) {
    m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.rows_) {
    throw UsageError("matrix product: shape or field mismatch");
  }
  const PrimeField& f = a.field_;
  Matrix m(f, a.rows_, b.cols_);
  // Accumulate in 128 bits and reduce once per entry; each term is < 2^124,
  // so up to 16 terms fit before a reduction is required.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        acc += static_cast<unsigned __int128>(a(i, k)) * b(k, j);
        if ((k & 15) == 15) acc %= f.modulus();
      }
      m(i, j) = static_cast<std::uint64_t>(acc % f.modulus());
    }
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t rank(const Matrix& input) {
  Matrix m = input;
  const PrimeField& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot, k));
    const std::uint64_t inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t factor = f.mul(m(i, c), inv);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace ncpit
