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

#include "ncpit/field.h"

#include <array>
#include <string>

#include "ncpit/errors.h"

namespace ncpit {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

void require_same(std::uint64_t p, std::uint64_t q) {
  if (p != q) {
    throw UsageError("field mismatch: F_" + std::to_string(p) + " vs F_" +
                     std::to_string(q));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a proven witness set for all n < 3.3 * 10^24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= kMaxModulus) {
    throw UsageError("modulus " + std::to_string(modulus) +
                     " does not fit below 2^62");
  }
  if (!is_prime(modulus)) {
    throw UsageError("modulus " + std::to_string(modulus) + " is not prime");
  }
}

FieldElem PrimeField::elem(std::uint64_t value) const {
  return FieldElem(p_, value % p_, 0);
}

FieldElem PrimeField::elem_signed(std::int64_t value) const {
  return FieldElem(p_, reduce_signed(value), 0);
}

FieldElem PrimeField::zero() const { return FieldElem(p_, 0, 0); }
FieldElem PrimeField::one() const { return FieldElem(p_, 1 % p_, 0); }

std::uint64_t PrimeField::reduce_signed(std::int64_t v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  // Magnitude of v computed without overflowing on INT64_MIN.
  std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return neg(mag % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  return powmod(base, exp, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw DivisionByZeroError();
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 t0 = 0, t1 = 1;
  __int128 r0 = p_, r1 = a;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<std::uint64_t>(t0);
}

std::int64_t PrimeField::to_signed(std::uint64_t a) const {
  if (a > p_ / 2) return -static_cast<std::int64_t>(p_ - a);
  return static_cast<std::int64_t>(a);
}

FieldElem::FieldElem(const PrimeField& field, std::uint64_t value)
    : p_(field.modulus()), value_(value % field.modulus()) {}

FieldElem FieldElem::inverse() const {
  return FieldElem(p_, field().inv(value_), 0);
}

FieldElem FieldElem::operator-() const {
  return FieldElem(p_, value_ == 0 ? 0 : p_ - value_, 0);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a.p_, b.p_);
  return FieldElem(a.p_, a.field().add(a.value_, b.value_), 0);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a.p_, b.p_);
  return FieldElem(a.p_, a.field().sub(a.value_, b.value_), 0);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a.p_, b.p_);
  return FieldElem(a.p_, mulmod(a.value_, b.value_, a.p_), 0);
}

FieldElem add(const FieldElem& a, const FieldElem& b) { return a + b; }
FieldElem sub(const FieldElem& a, const FieldElem& b) { return a - b; }
FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem neg(const FieldElem& a) { return -a; }
FieldElem inv(const FieldElem& a) { return a.inverse(); }

PrimeField find_prime_above(const BigInt& bound) {
  static const BigInt kLimit = BigInt(1) << 61;
  if (bound >= kLimit) {
    throw CapacityError(
        "no word-sized prime above " + bound.str() +
        "; cap the circuit degree or use a smaller bound");
  }
  std::uint64_t candidate =
      bound < 2 ? 2 : static_cast<std::uint64_t>(bound) + 1;
  while (!is_prime(candidate)) ++candidate;
  return PrimeField(candidate);
}

}  // namespace ncpit
