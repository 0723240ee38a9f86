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

#include "kd/laurent.hpp"

#include "kd/errors.hpp"

namespace kd {

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& coeff, int exponent, Variable var) {
  LaurentPolynomial p(var);
  p.add_term(coeff, exponent);
  return p;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(const BigInt& coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::rescaled(int factor, Variable var) const {
  if (factor == 0) throw DomainError("rescale factor must be nonzero");
  LaurentPolynomial out(var);
  for (const auto& [e, c] : terms_) out.add_term(c, e * factor);
  return out;
}

void LaurentPolynomial::check_same_variable(const LaurentPolynomial& rhs) const {
  if (var_ != rhs.var_) throw DomainError("polynomials in different variables");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  check_same_variable(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  check_same_variable(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_same_variable(b);
  LaurentPolynomial out(a.var_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + (var_ == Variable::kT ? "*t^(" + std::to_string(e) + "/2)"
                                           : "*A^(" + std::to_string(e) + ")");
  }
  return out;
}

}  // namespace kd
