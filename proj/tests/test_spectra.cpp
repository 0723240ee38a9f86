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

#include <cmath>
#include <numbers>

#include "kd/census.hpp"
#include "kd/codec.hpp"
#include "kd/errors.hpp"
#include "kd/families.hpp"
#include "kd/jones.hpp"
#include "kd/spectra.hpp"
#include "kd/tangle.hpp"

using namespace kd;

namespace {

constexpr mpfr_prec_t kBits = 128;

bool close(const Real& a, const Real& b, const char* tolerance) {
  return abs(a - b) <= Real::from_string(tolerance, kBits);
}

double two_pi_log_over(double det, int c) { return 2 * std::numbers::pi * std::log(det) / c; }

std::vector<CensusEntry> fixture() {
  return load_census(std::string(KD_TEST_DATA_DIR) + "/small_census.csv");
}

const KnotCheck& row(const VerificationReport& r, const std::string& id) {
  for (const auto& k : r.rows) {
    if (k.id == id) return k;
  }
  FAIL("no row for " << id);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("named constants") {
  CHECK(voct(128).to_string(30) == kVoctDigits);
  CHECK(v_tet().to_string(30) == kVtetDigits);
  CHECK(voct().to_double() == doctest::Approx(3.66386237671).epsilon(1e-12));
}

TEST_CASE("density functionals") {
  CHECK(det_density(3, BigInt(3)).to_double() == doctest::Approx(two_pi_log_over(3, 3)).epsilon(1e-14));
  CHECK(det_density(5, BigInt(1)).is_zero());
  CHECK_THROWS_AS(det_density(4, BigInt(0)), DomainError);
  CHECK_THROWS_AS(det_density(0, BigInt(3)), DomainError);
  CHECK_THROWS_AS(jones_density(4, Rational(0)), DomainError);
  CHECK(jones_density(3, Rational(3, 4)).to_double() ==
        doctest::Approx(two_pi_log_over(0.75, 3)).epsilon(1e-14));
  const Real vol = Real::from_string("2.02988321281930725004240510855", kBits);
  CHECK(close(vol_density(4, vol), v_tet() / Real::from_int(2, kBits), "1e-28"));
  CHECK_THROWS_AS(vol_density(4, Real::from_int(0, kBits)), DomainError);
}

TEST_CASE("property: connect sums keep the determinant density") {
  for (const Diagram& k : {parse_dt(std::vector<int>{4, 6, 2}), parse_dt(std::vector<int>{4, 6, 8, 2}),
                           parse_dt(std::vector<int>{4, 8, 10, 2, 6})}) {
    const Real base = det_density(k.crossing_number(), determinant(k));
    for (int n = 2; n <= 4; ++n) {
      const Diagram s = connect_power(k, n);
      CHECK(close(det_density(s.crossing_number(), determinant(s)), base, "1e-35"));
    }
  }
}

TEST_CASE("density records") {
  const Diagram f = parse_dt(std::vector<int>{4, 6, 8, 2});
  RecordOptions options;
  options.kashaev_n_max = 4;
  const auto r = density_record("4_1", f, Real::from_string("2.02988321", kBits), options);
  CHECK(r.det == 5);
  CHECK(r.mu == 1);
  REQUIRE(r.kh_rank);
  CHECK(*r.kh_rank == 5);
  REQUIRE(r.det_density);
  REQUIRE(r.jones_density);
  // Alternating: jones density = det density - 2 pi ln(c+1)/c.
  CHECK(close(*r.jones_density,
              *r.det_density - det_density(4, BigInt(5)), "1e-35"));
  REQUIRE(r.quantum_densities.size() == 3);
  CHECK(close(r.quantum_densities[0].second, *r.det_density / Real::from_int(2, kBits), "1e-30"));
  CHECK(r.flags.empty());

  const auto bare = density_record("kink", parse_pd("X(1,1,2,2)"));
  REQUIRE(bare.det_density);
  CHECK(bare.det_density->is_zero());
  CHECK(bare.flags == std::vector<std::string>{"volume missing"});
}

TEST_CASE("iterated Aitken") {
  std::vector<Real> geometric;
  for (int i = 0; i < 6; ++i) {
    geometric.push_back(Real::from_int(3, kBits) - pow2(-i, kBits));
  }
  REQUIRE(aitken_limit(geometric));
  CHECK(close(*aitken_limit(geometric), Real::from_int(3, kBits), "1e-30"));
  CHECK_FALSE(aitken_limit(std::span(geometric).first(3)));
  const std::vector<Real> constant(5, Real::from_int(2, kBits));
  CHECK(*aitken_limit(constant) == Real::from_int(2, kBits));
}

TEST_CASE("maximality sweeps") {
  const auto celtic = maximality_sweep(
      "celtic", [](int n) { return celtic_grid(n, n); }, 3, 7, voct());
  CHECK(celtic.strictly_increasing());
  CHECK(celtic.residuals_decreasing());
  CHECK(celtic.determinants[0] == 192);
  REQUIRE(celtic.limit);

  const Diagram base = from_braid(parse_braid("2: s1 s1"));
  const auto twist = maximality_sweep(
      "twist", [&](int k) { return twist_on_two_strands(base, ArcPair{1, 2}, k); }, 1, 40,
      Real::from_int(0, kBits));
  CHECK(twist.residuals_decreasing());
  for (size_t i = 0; i < twist.indices.size(); ++i) {
    CHECK(twist.determinants[i] == twist.indices[i] + 2);
  }
  CHECK(twist.densities.back().to_double() == doctest::Approx(two_pi_log_over(42, 42)));

  const auto short_run = maximality_sweep(
      "weaving", [](int q) { return weaving_knot(3, q); }, 4, 6, voct());
  CHECK_FALSE(short_run.limit);
  CHECK_FALSE(short_run.limit_error());
}

TEST_CASE("cycles of tangles") {
  const Tangle x = Tangle::crossing();
  SUBCASE("single crossing: (2,n) torus links") {
    const auto c = cycle_density_convergence(x, 6);
    CHECK(c.seed_det == 1);
    CHECK(c.power_law_exact);
    for (int n = 1; n <= 6; ++n) CHECK(c.cycles.determinants[n - 1] == n);
    CHECK(c.cycles.target.is_zero());
  }
  SUBCASE("three-twist seed converges to the trefoil density") {
    const auto c = cycle_density_convergence(tangle_product(x, tangle_product(x, x)), 8);
    CHECK(c.seed_det == 3);
    CHECK(c.power_law_exact);
    CHECK(c.cycles.residuals[7] < c.cycles.residuals[1]);
    for (const Real& d : c.connect_sums.densities) CHECK(close(d, c.cycles.target, "1e-35"));
  }
}

TEST_CASE("crossing changes lower the determinant") {
  const auto t = crossing_change_det_drop(parse_dt(std::vector<int>{4, 6, 2}));
  CHECK(t.det == 3);
  CHECK(t.subsets_tested == 6);
  CHECK(t.max_changed == 1);
  CHECK(t.pass());
  const auto f = crossing_change_det_drop(parse_dt(std::vector<int>{4, 6, 8, 2}));
  CHECK(f.subsets_tested == 14);
  CHECK(f.pass());
  CHECK(crossing_change_det_drop(parse_dt(std::vector<int>{4, 6, 8, 2}), 1).subsets_tested == 4);
}

TEST_CASE("verification over a small table") {
  const auto table = fixture();
  SUBCASE("det density") {
    const auto r = verify_det_density_bound(table);
    CHECK(r.pass());
    CHECK(r.rows.size() == 4);
    CHECK(row(r, "3_1").margin.to_double() ==
          doctest::Approx(3.66386237671 - two_pi_log_over(3, 3)).epsilon(1e-12));
  }
  SUBCASE("jones density") {
    const auto r = verify_jones_density_bound(table);
    CHECK(r.pass());
    CHECK(r.rows.size() == 4);
  }
  SUBCASE("vol-det skips and flags") {
    const auto r = verify_vol_det(table);
    CHECK(r.pass());
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].id == "4_1");
    CHECK(r.skipped.size() == 3);
    VerifyOptions strict;
    strict.require_volumes = true;
    CHECK_THROWS_AS(verify_vol_det(table, strict), MissingDataError);
  }
  SUBCASE("kh-vol") {
    const auto r = verify_kh_vol(table);
    CHECK(r.pass());
    CHECK(r.rows.size() == 1);
  }
  SUBCASE("crossing drop") {
    VerifyOptions nine;
    nine.max_crossings = 9;
    const auto r = verify_crossing_drop(table, nine);
    CHECK(r.pass());
    CHECK(r.rows.size() == 3);
  }
  SUBCASE("a volume above 2 pi ln det is a violation") {
    const auto bad = load_census(std::string(KD_TEST_DATA_DIR) + "/volume_violation.csv");
    const auto r = verify_vol_det(bad);
    CHECK_FALSE(r.pass());
    CHECK(r.violations() == 1);
  }
}
