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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kd/bigint.hpp"
#include "kd/census.hpp"
#include "kd/diagram.hpp"
#include "kd/kashaev.hpp"
#include "kd/khovanov.hpp"
#include "kd/real.hpp"
#include "kd/tangle.hpp"

namespace kd {

// Regular ideal octahedron and tetrahedron volumes, 30 digits.
inline constexpr const char* kVoctDigits = "3.66386237670887606021841405973";
inline constexpr const char* kVtetDigits = "1.01494160640965362502120255427";

Real voct(mpfr_prec_t bits = Real::kDefaultBits);  // 4 * Catalan
Real v_tet(mpfr_prec_t bits = Real::kDefaultBits);

// 2 pi ln(det) / c, 2 pi ln(mu) / c and vol / c.
Real det_density(int crossings, const BigInt& det, mpfr_prec_t bits = Real::kDefaultBits);
Real jones_density(int crossings, const Rational& mu, mpfr_prec_t bits = Real::kDefaultBits);
Real vol_density(int crossings, const Real& volume);

struct RecordOptions {
  bool with_khovanov = true;
  KhovanovOptions khovanov;
  int kashaev_n_max = 0;  // 0 skips the Kashaev sweep; otherwise N = 2..n_max
  KashaevOptions kashaev;
  mpfr_prec_t bits = Real::kDefaultBits;
};

struct DensityRecord {
  std::string id;
  int crossings = 0;
  bool alternating = false;
  BigInt det;
  Rational mu;
  std::optional<long> kh_rank;
  std::vector<KashaevValue> kashaev;
  std::optional<Real> volume;

  // Empty when the logarithm is undefined; the reason lands in flags.
  std::optional<Real> det_density;
  std::optional<Real> jones_density;
  std::optional<Real> vol_density;
  std::optional<Real> kh_density;
  std::vector<std::pair<int, Real>> quantum_densities;  // (N, density)
  std::vector<std::string> flags;
};

DensityRecord density_record(std::string id, const Diagram& d,
                             std::optional<Real> volume = std::nullopt,
                             const RecordOptions& options = {});

// Iterated Aitken delta-squared down to the last term; empty for fewer
// than 4 terms. A zero second difference keeps the newest term.
std::optional<Real> aitken_limit(std::span<const Real> terms);

struct SequenceReport {
  std::string family;
  std::vector<int> indices;
  std::vector<int> crossings;
  std::vector<BigInt> determinants;
  std::vector<Real> densities;
  std::optional<Real> limit;  // extrapolated, only with >= 4 terms
  Real target;
  std::vector<Real> residuals;  // |density - target|

  bool strictly_increasing() const;
  bool residuals_decreasing() const;
  // |limit - target| / |target|; absolute when the target is 0.
  std::optional<Real> limit_error() const;
};

SequenceReport make_sequence_report(std::string family, std::vector<int> indices,
                                    std::vector<int> crossings, std::vector<BigInt> determinants,
                                    const Real& target, mpfr_prec_t bits = Real::kDefaultBits);

using FamilyGenerator = std::function<Diagram(int)>;

struct SweepOptions {
  unsigned threads = 0;
  mpfr_prec_t bits = Real::kDefaultBits;
};

// Determinant densities of generator(i) for i in [first, last].
SequenceReport maximality_sweep(std::string family, const FamilyGenerator& generator, int first,
                                int last, const Real& target, const SweepOptions& options = {});

struct CycleConvergence {
  SequenceReport cycles;         // K^n = cycle of n copies of T, n = 1..n_max
  SequenceReport connect_sums;   // L^n = n-fold connect sum of D(T)
  BigInt seed_det;               // det D(T)
  bool power_law_exact = false;  // det(L^n) == det(D(T))^n for every n
};

// Densities of K^n approach the density of the denominator closure D(T).
CycleConvergence cycle_density_convergence(const Tangle& t, int n_max,
                                           const SweepOptions& options = {});

struct KnotCheck {
  std::string id;
  int crossings = 0;
  Real value;   // the quantity being bounded
  Real bound;   // value must stay below (or at) bound
  Real margin;  // bound - value
  bool pass = false;
  std::string note;
};

struct Skipped {
  std::string id;
  std::string reason;
};

struct VerificationReport {
  std::string check;
  std::vector<KnotCheck> rows;
  std::vector<Skipped> skipped;
  // Descriptive statistics without pass/fail meaning.
  std::vector<std::pair<std::string, Real>> statistics;

  std::size_t violations() const;
  bool pass() const { return violations() == 0; }
  const KnotCheck* min_margin() const;
};

struct VerifyOptions {
  int max_crossings = 12;
  unsigned threads = 0;
  mpfr_prec_t bits = Real::kDefaultBits;
  KhovanovOptions khovanov;
  // Throw MissingDataError instead of skipping rows without a volume.
  bool require_volumes = false;
};

using CensusTable = std::span<const CensusEntry>;

VerificationReport verify_det_density_bound(CensusTable table, const VerifyOptions& options = {});
VerificationReport verify_jones_density_bound(CensusTable table, const VerifyOptions& options = {});
VerificationReport verify_vol_det(CensusTable table, const VerifyOptions& options = {});
VerificationReport verify_kh_vol(CensusTable table, const VerifyOptions& options = {});

struct CrossingDrop {
  BigInt det;
  BigInt max_changed;  // largest det over the changed diagrams
  long subsets_tested = 0;
  // Proper nonempty subsets (as crossing-index bitmasks) with det' >= det.
  std::vector<std::pair<unsigned long, BigInt>> failures;
  bool pass() const { return failures.empty(); }
};

// Changes every proper nonempty subset of at most max_subset crossings.
CrossingDrop crossing_change_det_drop(const Diagram& d, int max_subset = 64);

// crossing_change_det_drop over reduced alternating rows up to max_crossings.
VerificationReport verify_crossing_drop(CensusTable table, const VerifyOptions& options = {});

}  // namespace kd
