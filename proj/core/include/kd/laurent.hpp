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

#include <map>
#include <string>

#include "kd/bigint.hpp"

namespace kd {

// kA: bracket variable. kT: Jones variable, exponents counted in t^(1/2).
enum class Variable { kA, kT };

// Sparse Laurent polynomial with exact integer coefficients. Zero
// coefficients are never stored.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(Variable var = Variable::kA) : var_(var) {}

  static LaurentPolynomial monomial(const BigInt& coeff, int exponent, Variable var);

  Variable variable() const { return var_; }
  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;
  // Throw DomainError on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  void add_term(const BigInt& coeff, int exponent);
  // Multiplies by x^k.
  LaurentPolynomial shifted(int k) const;
  // Exponents scaled by `factor`, moved to another variable.
  LaurentPolynomial rescaled(int factor, Variable var) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  // Ascending `coeff*t^(k/2)` (or `coeff*A^(k)`) terms joined by " + ".
  std::string to_string() const;

 private:
  void check_same_variable(const LaurentPolynomial& rhs) const;

  Variable var_;
  std::map<int, BigInt> terms_;
};

}  // namespace kd
