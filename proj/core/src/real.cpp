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

#include "kd/real.hpp"

#include <algorithm>
#include <vector>

#include "kd/errors.hpp"

namespace kd {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_int(long v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_si(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::from_bigint(const BigInt& v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_z(r.value_, v.backend().data(), MPFR_RNDN);
  return r;
}

Real Real::from_rational(const Rational& v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_q(r.value_, v.backend().data(), MPFR_RNDN);
  return r;
}

Real Real::from_string(std::string_view text, mpfr_prec_t bits) {
  Real r(bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw SyntaxError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::catalan(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_catalan(r.value_, MPFR_RNDN);
  return r;
}

BigInt Real::round() const {
  if (!mpfr_number_p(value_)) throw DomainError("cannot round a non-finite value");
  BigInt out;
  mpfr_get_z(out.backend().data(), value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data(), static_cast<size_t>(n));
}

void Real::widen_to(mpfr_prec_t bits) {
  if (bits > this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <typename Fn>
Real apply(const Real& x, Fn fn) {
  Real r(x.bits());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real log(const Real& x) { return apply(x, mpfr_log); }
Real exp(const Real& x) { return apply(x, mpfr_exp); }
Real sqrt(const Real& x) { return apply(x, mpfr_sqrt); }
Real sin(const Real& x) { return apply(x, mpfr_sin); }
Real cos(const Real& x) { return apply(x, mpfr_cos); }
Real abs(const Real& x) { return apply(x, mpfr_abs); }

Real pow(const Real& x, long k) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real pow2(long k, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui_2exp(r.get(), 1, k, MPFR_RNDN);
  return r;
}

Complex Complex::unit_root(long num, long den, mpfr_prec_t bits) {
  // Reduce to [0, den) so large numerators keep full accuracy.
  long k = num % den;
  if (k < 0) k += den;
  Real angle = Real::pi(bits + 16);
  angle *= Real::from_int(2 * k, bits + 16);
  angle /= Real::from_int(den, bits + 16);
  Complex z(bits);
  mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
  return z;
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  const mpfr_prec_t p = std::max(bits(), rhs.bits());
  Real r(p);
  Real i(p);
  mpfr_fmms(r.get(), re.get(), rhs.re.get(), im.get(), rhs.im.get(), MPFR_RNDN);
  mpfr_fmma(i.get(), re.get(), rhs.im.get(), im.get(), rhs.re.get(), MPFR_RNDN);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const Real den = rhs.norm();
  Complex conj(rhs.re, -rhs.im);
  *this *= conj;
  re /= den;
  im /= den;
  return *this;
}

void Complex::add_product(const Complex& a, const Complex& b) {
  thread_local Real scratch(Real::kDefaultBits);
  const mpfr_prec_t p = bits();
  if (scratch.bits() != p) mpfr_set_prec(scratch.get(), p);
  mpfr_fmms(scratch.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), re.get(), scratch.get(), MPFR_RNDN);
  mpfr_fmma(scratch.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(im.get(), im.get(), scratch.get(), MPFR_RNDN);
}

Real Complex::norm() const {
  Real r(bits());
  mpfr_fmma(r.get(), re.get(), re.get(), im.get(), im.get(), MPFR_RNDN);
  return r;
}

Real Complex::abs() const {
  Real r(bits());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

}  // namespace kd
