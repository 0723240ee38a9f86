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

#include "kd/jones.hpp"

#include <stdexcept>

#include "kd/errors.hpp"
#include "kd/graphs.hpp"

namespace kd {

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe) {
  LaurentPolynomial out(Variable::kT);
  const bool negate = writhe % 2 != 0;
  for (const auto& [e, c] : bracket.terms()) {
    const int k = e - 3 * writhe;
    if (k % 2 != 0) throw std::logic_error("bracket exponent parity mismatch");
    // A^k = t^(-k/4) = (t^(1/2))^(-k/2).
    out.add_term(negate ? BigInt(-c) : c, -k / 2);
  }
  return out;
}

BigInt jones_determinant(const LaurentPolynomial& jones) {
  // t^(1/2) -> i.
  BigInt re = 0;
  BigInt im = 0;
  for (const auto& [h, c] : jones.terms()) {
    const int r = ((h % 4) + 4) % 4;
    switch (r) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      default: im -= c; break;
    }
  }
  if (re != 0 && im != 0) throw std::logic_error("Jones exponents of mixed parity");
  return abs(re) + abs(im);
}

JonesSummary summarize_jones(const LaurentPolynomial& jones) {
  if (jones.variable() != Variable::kT || jones.is_zero()) {
    throw DomainError("expected a nonzero polynomial in t^(1/2)");
  }
  JonesSummary s;
  s.polynomial = jones;
  s.span = (jones.max_exponent() - jones.min_exponent()) / 2;
  s.abs_sum = 0;
  for (const auto& [h, c] : jones.terms()) s.abs_sum += abs(c);
  s.mu = Rational(s.abs_sum, s.span + 1);
  s.determinant = jones_determinant(jones);
  return s;
}

JonesSummary jones_polynomial(const Diagram& d, const BracketOptions& options) {
  return summarize_jones(jones_from_bracket(kauffman_bracket(d, options), d.writhe()));
}

IntMatrix goeritz_matrix(const Diagram& d) {
  const PlanarMultigraph shaded = checkerboard_graph(d, 0);
  IntMatrix g(shaded.num_vertices());
  for (const auto& e : shaded.edges()) {
    if (e.u == e.v) continue;
    g(e.u, e.v) -= e.sign;
    g(e.v, e.u) -= e.sign;
    g(e.u, e.u) += e.sign;
    g(e.v, e.v) += e.sign;
  }
  return g;
}

BigInt goeritz_determinant(const Diagram& d) {
  if (d.crossing_number() == 0) return 1;
  const IntMatrix g = goeritz_matrix(d);
  return abs(bareiss_determinant(g.minor(g.size() - 1)));
}

bool DeterminantRoutes::agree() const {
  return (!tait || *tait == goeritz) && (!jones || *jones == goeritz);
}

DeterminantRoutes determinant_routes(const Diagram& d, bool with_jones,
                                     const BracketOptions& options) {
  DeterminantRoutes r;
  r.goeritz = goeritz_determinant(d);
  if (is_alternating(d)) r.tait = spanning_tree_count(tait_graph(d));
  if (with_jones && d.crossing_number() <= options.max_crossings) {
    r.jones = jones_polynomial(d, options).determinant;
  }
  return r;
}

BigInt determinant(const Diagram& d) { return goeritz_determinant(d); }

CoefficientBound coefficient_bound_check(const Diagram& d, const BracketOptions& options) {
  CoefficientBound b;
  b.abs_sum = jones_polynomial(d, options).abs_sum;
  b.trees = spanning_tree_count(checkerboard_graph(d, 0));
  b.equal = b.abs_sum == b.trees;
  return b;
}

}  // namespace kd
