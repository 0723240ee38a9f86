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

#include <doctest.h>

#include "kd/codec.hpp"
#include "kd/errors.hpp"
#include "kd/families.hpp"
#include "kd/graphs.hpp"
#include "kd/jones.hpp"
#include "kd/laurent.hpp"
#include "oracles.hpp"

using namespace kd;

namespace {

LaurentPolynomial poly_t(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPolynomial p(Variable::kT);
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

// V(t) -> V(1/t): negate every exponent.
LaurentPolynomial inverted(const LaurentPolynomial& p) { return p.rescaled(-1, p.variable()); }

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const auto a = poly_t({{0, 1}, {2, -1}});
  const auto b = poly_t({{-2, 1}, {0, 1}});
  CHECK((a * b) == poly_t({{-2, 1}, {2, -1}}));
  CHECK((a - a).is_zero());
  CHECK(a.shifted(4) == poly_t({{4, 1}, {6, -1}}));
  CHECK(a.to_string() == "1*t^(0/2) + -1*t^(2/2)");
  CHECK_THROWS_AS(LaurentPolynomial(Variable::kT).min_exponent(), DomainError);
  CHECK_THROWS_AS(a + LaurentPolynomial::monomial(1, 0, Variable::kA), DomainError);
}

TEST_CASE("trefoil and figure-eight Jones polynomials") {
  const auto t = jones_polynomial(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
  CHECK(t.polynomial == poly_t({{-8, -1}, {-6, 1}, {-2, 1}}));
  CHECK(t.span == 3);
  CHECK(t.abs_sum == 3);
  CHECK(t.mu == Rational(3, 4));
  CHECK(t.determinant == 3);

  const auto f = jones_polynomial(parse_dt(std::vector<int>{4, 6, 8, 2}));
  CHECK(f.polynomial == poly_t({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
  CHECK(f.mu == 1);
  CHECK(f.determinant == 5);
}

TEST_CASE("kinks and the unknot") {
  for (const char* pd : {"X(1,1,2,2)", "X(2,1,1,2)"}) {
    const auto j = jones_polynomial(parse_pd(pd));
    CHECK(j.polynomial == poly_t({{0, 1}}));
    CHECK(j.mu == 1);
  }
}

TEST_CASE("bracket matches the 2^c state sum") {
  SUBCASE("random braid closures") {
    for (const auto& w : oracle::random_braids(42, 60, 5, 10)) {
      const Diagram d = from_braid(w);
      CAPTURE(format_braid(w));
      CHECK(oracle::terms_of(kauffman_bracket(d)) == oracle::naive_bracket(d));
      CHECK(oracle::terms_of(jones_polynomial(d).polynomial) == oracle::naive_jones(d));
    }
  }
  SUBCASE("families") {
    for (const Diagram& d : {weaving_knot(3, 5), celtic_grid(2, 3), celtic_grid(3, 3)}) {
      CHECK(oracle::terms_of(kauffman_bracket(d)) == oracle::naive_bracket(d));
    }
  }
}

TEST_CASE("property: Jones identities on random closures") {
  for (const auto& w : oracle::random_braids(99, 50, 4, 12)) {
    const Diagram d = from_braid(w);
    CAPTURE(format_braid(w));
    const auto v = jones_polynomial(d).polynomial;
    // V(1) = (-2)^(components - 1).
    BigInt at_one = 0;
    for (const auto& [e, c] : v.terms()) at_one += c;
    BigInt expected = 1;
    for (int i = 1; i < d.num_components(); ++i) expected *= -2;
    CHECK(at_one == expected);
    CHECK(jones_polynomial(mirror(d)).polynomial == inverted(v));
    const auto routes = determinant_routes(d);
    CHECK(routes.agree());
    CHECK(routes.goeritz == oracle::naive_determinant(d));
    CHECK(jones_polynomial(parse_pd(format_pd(d))).polynomial == v);
  }
}

TEST_CASE("mu identity and coefficient bound") {
  SUBCASE("alternating: mu = det/(c+1) and sum |a_i| = tau") {
    for (const Diagram& d : {weaving_knot(3, 4), celtic_grid(3, 3),
                             parse_dt(std::vector<int>{4, 10, 12, 14, 2, 8, 6})}) {
      const auto j = jones_polynomial(d);
      CHECK(j.mu == Rational(j.determinant, BigInt(d.crossing_number() + 1)));
      const auto bound = coefficient_bound_check(d);
      CHECK(bound.equal);
      CHECK(bound.abs_sum == bound.trees);
    }
  }
  SUBCASE("non-alternating: strict inequality") {
    const Diagram d = parse_dt(std::vector<int>{4, 8, -12, 2, -14, -16, -6, -10});
    const auto bound = coefficient_bound_check(d);
    CHECK_FALSE(bound.equal);
    CHECK(bound.abs_sum < bound.trees);
  }
}

TEST_CASE("Goeritz matrix of the trefoil") {
  const Diagram d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  const IntMatrix g = goeritz_matrix(d);
  for (int r = 0; r < g.size(); ++r) {
    BigInt row = 0;
    for (int c = 0; c < g.size(); ++c) row += g(r, c);
    CHECK(row == 0);
  }
  for (int k = 0; k < g.size(); ++k) CHECK(abs(bareiss_determinant(g.minor(k))) == 3);
  CHECK(goeritz_determinant(d) == 3);
}

TEST_CASE("Bareiss determinant") {
  IntMatrix m(3);
  const int entries[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = entries[r][c];
  }
  CHECK(bareiss_determinant(m) == 4);
  m(0, 0) = 0;
  CHECK(bareiss_determinant(m) == -2);
  CHECK(bareiss_determinant(IntMatrix(0)) == 1);
}

TEST_CASE("bracket crossing cap") {
  BracketOptions small;
  small.max_crossings = 5;
  CHECK_THROWS_AS(kauffman_bracket(weaving_knot(3, 4), small), ResourceError);
}
