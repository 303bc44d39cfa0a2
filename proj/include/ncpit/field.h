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

#ifndef NCPIT_FIELD_H_
#define NCPIT_FIELD_H_

#include <cstdint>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncpit {

// Degrees and word lengths can be exponential in circuit size.
using BigInt = boost::multiprecision::cpp_int;

class FieldElem;

// The prime field Z_p for a prime p < 2^62. Cheap to copy; two fields compare
// equal iff their moduli do. Residues are plain uint64_t values in [0, p), and
// the raw-residue methods below are the hot path used by matrices, sparse
// polynomials and elimination.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  // Throws UsageError unless `modulus` is a prime below 2^62.
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }

  FieldElem elem(std::uint64_t value) const;
  // Accepts negative integers; -1 maps to p - 1.
  FieldElem elem_signed(std::int64_t value) const;
  FieldElem zero() const;
  FieldElem one() const;

  std::uint64_t reduce(std::uint64_t v) const { return v % p_; }
  std::uint64_t reduce_signed(std::int64_t v) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;  // < 2^63, no overflow
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  // Throws DivisionByZeroError for a == 0.
  std::uint64_t inv(std::uint64_t a) const;

  // Symmetric representative in (-p/2, p/2], used by the text format so that
  // small signed constants survive a change of prime.
  std::int64_t to_signed(std::uint64_t a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  friend class FieldElem;
  struct Unchecked {};
  PrimeField(std::uint64_t modulus, Unchecked) : p_(modulus) {}
  static PrimeField unchecked(std::uint64_t modulus) {
    return PrimeField(modulus, Unchecked{});
  }

  std::uint64_t p_;
};

// An element of a PrimeField. Arithmetic between elements of different fields
// throws UsageError.
class FieldElem {
 public:
  FieldElem(const PrimeField& field, std::uint64_t value);

  std::uint64_t value() const { return value_; }
  PrimeField field() const { return PrimeField::unchecked(p_); }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElem inverse() const;
  FieldElem operator-() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
    return os << a.value_;
  }

 private:
  friend class PrimeField;
  FieldElem(std::uint64_t p, std::uint64_t value, int) : p_(p), value_(value) {}

  std::uint64_t p_;
  std::uint64_t value_;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem inv(const FieldElem& a);

// Deterministic Miller-Rabin, sound for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than `bound`. Throws CapacityError when
// bound >= 2^61; callers should cap degrees instead.
PrimeField find_prime_above(const BigInt& bound);

}  // namespace ncpit

#endif  // NCPIT_FIELD_H_
