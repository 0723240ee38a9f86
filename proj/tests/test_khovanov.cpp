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

#include <set>

#include "kd/codec.hpp"
#include "kd/errors.hpp"
#include "kd/families.hpp"
#include "kd/jones.hpp"
#include "kd/khovanov.hpp"
#include "oracles.hpp"

using namespace kd;

namespace {

Diagram dt(const char* code) { return parse_dt(parse_dt_text(code)); }

}  // namespace

TEST_CASE("reduced Khovanov homology of small knots") {
  SUBCASE("right-handed trefoil") {
    const auto kh = reduced_khovanov(dt("4 6 2"));
    CHECK(kh.to_csv() == "homological,quantum,rank\n0,2,1\n2,6,1\n3,8,1\n");
  }
  SUBCASE("figure-eight") {
    CHECK(reduced_kh_rank(dt("4 6 8 2")) == 5);
  }
  SUBCASE("T(3,4) is thick") {
    for (Field f : {Field::kRationals, Field::kTwo}) {
      const auto kh = reduced_khovanov(dt("4 8 -12 2 -14 -16 -6 -10"), {f, 14});
      CHECK(kh.to_csv() == "homological,quantum,rank\n0,6,1\n2,10,1\n3,12,1\n4,12,1\n5,16,1\n");
    }
  }
  SUBCASE("kinks carry rank one at the origin") {
    for (const char* pd : {"X(1,1,2,2)", "X(2,1,1,2)"}) {
      CHECK(reduced_khovanov(parse_pd(pd)).to_csv() == "homological,quantum,rank\n0,0,1\n");
    }
  }
}

TEST_CASE("property: graded Euler characteristic equals the Jones polynomial") {
  for (const auto& w : oracle::random_braids(314, 40, 4, 7)) {
    const Diagram d = from_braid(w);
    if (d.num_components() != 1) continue;
    CAPTURE(format_braid(w));
    const auto jones = jones_polynomial(d).polynomial;
    for (Field f : {Field::kRationals, Field::kTwo}) {
      const auto kh = reduced_khovanov(d, {f, 14});
      CHECK(kh.euler_characteristic() == jones);
      long rank = 0;
      for (const auto& b : kh.table) {
        CHECK(b.homology >= 0);
        CHECK(b.homology <= b.generators);
        rank += b.homology;
      }
      CHECK(rank == kh.total_rank());
      CHECK(kh.total_rank() >= determinant(d));
      CHECK((kh.total_rank() - determinant(d)) % 2 == 0);
    }
  }
}

TEST_CASE("alternating knots are thin with rank = det") {
  for (const Diagram& d : {weaving_knot(3, 4), weaving_knot(3, 5), dt("4 10 12 14 2 8 6"),
                           dt("4 8 10 2 12 6")}) {
    const BigInt det = determinant(d);
    for (Field f : {Field::kRationals, Field::kTwo}) {
      const auto kh = reduced_khovanov(d, {f, 14});
      CHECK(kh.total_rank() == det);
      std::set<int> delta;
      for (const auto& b : kh.table) {
        if (b.homology > 0) delta.insert(b.quantum - 2 * b.homological);
      }
      CHECK(delta.size() == 1);
    }
  }
}

TEST_CASE("Khovanov density and errors") {
  CHECK(kh_density(dt("4 6 8 2")).to_double() ==
        doctest::Approx(2 * 3.14159265358979 * std::log(5.0) / 4).epsilon(1e-12));
  CHECK(parse_field("F2") == Field::kTwo);
  CHECK(parse_field("Q") == Field::kRationals);
  CHECK_THROWS_AS(parse_field("Z"), Error);
  KhovanovOptions small;
  small.max_crossings = 6;
  CHECK_THROWS_AS(reduced_khovanov(weaving_knot(3, 4), small), ResourceError);
}
