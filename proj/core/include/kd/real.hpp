// Copyright 2026 The knotdensity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "kd/bigint.hpp"

namespace kd {

// Owning MPFR value with an explicit per-object precision. Binary
// operations round to the larger precision of their operands.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  explicit Real(mpfr_prec_t bits = kDefaultBits);
  Real(double v, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_int(long v, mpfr_prec_t bits);
  static Real from_bigint(const BigInt& v, mpfr_prec_t bits);
  static Real from_rational(const Rational& v, mpfr_prec_t bits);
  // Decimal literal; throws SyntaxError when unparsable.
  static Real from_string(std::string_view text, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  static Real catalan(mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Nearest integer.
  BigInt round() const;
  // Scientific or fixed notation with `digits` significant digits.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real log(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, long k);
// 2^k at the given precision.
Real pow2(long k, mpfr_prec_t bits);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = Real::kDefaultBits) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  // exp(2 pi i * num / den).
  static Complex unit_root(long num, long den, mpfr_prec_t bits);

  mpfr_prec_t bits() const { return re.bits(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  // this += a * b without intermediate allocations.
  void add_product(const Complex& a, const Complex& b);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  Real norm() const;  // |z|^2
  Real abs() const;
};

}  // namespace kd
