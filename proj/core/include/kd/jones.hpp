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

#include <optional>

#include "kd/bigint.hpp"
#include "kd/diagram.hpp"
#include "kd/laurent.hpp"
#include "kd/linalg.hpp"

namespace kd {

struct BracketOptions {
  // Dense 128-bit accumulation stays exact up to 62 crossings.
  int max_crossings = 40;
};

// Kauffman bracket in A, normalized so the crossingless unknot gives 1.
// Frontier dynamic programme over a greedy crossing order, memoized on the
// pairing of open arcs. Throws ResourceError above the crossing cap.
LaurentPolynomial kauffman_bracket(const Diagram& d, const BracketOptions& options = {});

struct JonesSummary {
  LaurentPolynomial polynomial{Variable::kT};  // exponents in t^(1/2)
  int span = 0;                                 // in units of t
  BigInt abs_sum;                               // sum of |coefficients|
  Rational mu;                                  // abs_sum / (span + 1)
  BigInt determinant;                           // |V(-1)|
};

// V = (-A^3)^(-writhe) <D> with A = t^(-1/4).
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe);
JonesSummary summarize_jones(const LaurentPolynomial& jones);
JonesSummary jones_polynomial(const Diagram& d, const BracketOptions& options = {});
// |V(-1)| for a polynomial in t^(1/2).
BigInt jones_determinant(const LaurentPolynomial& jones);

// Goeritz matrix on the colour-0 regions (no row deleted).
IntMatrix goeritz_matrix(const Diagram& d);
BigInt goeritz_determinant(const Diagram& d);

struct DeterminantRoutes {
  BigInt goeritz;
  std::optional<BigInt> tait;   // alternating diagrams only
  std::optional<BigInt> jones;  // when requested and within the bracket cap
  bool agree() const;
};

DeterminantRoutes determinant_routes(const Diagram& d, bool with_jones = true,
                                     const BracketOptions& options = {});
// Cheapest route (Goeritz).
BigInt determinant(const Diagram& d);

struct CoefficientBound {
  BigInt abs_sum;  // sum of |Jones coefficients|
  BigInt trees;    // spanning trees of the checkerboard graph
  bool equal = false;
};

CoefficientBound coefficient_bound_check(const Diagram& d, const BracketOptions& options = {});

}  // namespace kd
