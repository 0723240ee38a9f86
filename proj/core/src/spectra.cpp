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

#include "kd/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "kd/errors.hpp"
#include "kd/families.hpp"
#include "kd/graphs.hpp"
#include "kd/jones.hpp"
#include "parallel.hpp"

namespace kd {
namespace {

Real two_pi(mpfr_prec_t bits) { return Real::from_int(2, bits) * Real::pi(bits); }

Real two_pi_log(const BigInt& v, mpfr_prec_t bits) {
  return two_pi(bits) * log(Real::from_bigint(v, bits));
}

// Evaluates margin_at(p) = bound - value, widening p while the sign sits
// within rounding distance of zero. The flag reports whether it settled.
template <typename MarginAt>
std::pair<Real, bool> decided_margin(const MarginAt& margin_at, mpfr_prec_t bits) {
  for (mpfr_prec_t p = bits; p <= 8 * bits; p *= 2) {
    Real m = margin_at(p);
    if (abs(m) > pow2(-(p - 16), p)) return {std::move(m), true};
  }
  return {margin_at(bits), false};
}

template <typename ValueAt, typename BoundAt>
KnotCheck bound_check(const CensusEntry& e, const ValueAt& value_at, const BoundAt& bound_at,
                      bool strict, mpfr_prec_t bits) {
  KnotCheck k;
  k.id = e.name;
  k.crossings = e.crossings;
  k.value = value_at(bits);
  k.bound = bound_at(bits);
  auto [margin, decided] =
      decided_margin([&](mpfr_prec_t p) { return bound_at(p) - value_at(p); }, bits);
  k.margin = std::move(margin);
  if (decided) {
    k.pass = strict ? k.margin.sign() > 0 : k.margin.sign() >= 0;
  } else {
    k.note = "margin sign undecided";
  }
  return k;
}

struct RowOutcome {
  std::optional<KnotCheck> check;
  std::optional<Skipped> skip;
  std::optional<Real> statistic;
};

RowOutcome skip_row(const CensusEntry& e, std::string reason) {
  RowOutcome o;
  o.skip = Skipped{e.name, std::move(reason)};
  return o;
}

VerificationReport collect(std::string name, std::vector<RowOutcome>& outcomes) {
  VerificationReport r;
  r.check = std::move(name);
  for (auto& o : outcomes) {
    if (o.check) r.rows.push_back(std::move(*o.check));
    if (o.skip) r.skipped.push_back(std::move(*o.skip));
  }
  return r;
}

std::vector<const CensusEntry*> within_cap(CensusTable table, int max_crossings) {
  std::vector<const CensusEntry*> rows;
  for (const auto& e : table) {
    if (e.crossings <= max_crossings) rows.push_back(&e);
  }
  return rows;
}

BigInt entry_determinant(const CensusEntry& e, const Diagram& d) {
  return e.determinant ? *e.determinant : goeritz_determinant(d);
}

std::optional<Real> min_statistic(const std::vector<RowOutcome>& outcomes) {
  std::optional<Real> best;
  for (const auto& o : outcomes) {
    if (o.statistic && (!best || *o.statistic < *best)) best = *o.statistic;
  }
  return best;
}

bool missing_volume(const CensusEntry& e, const VerifyOptions& options) {
  if (!e.volume_missing()) return false;
  if (options.require_volumes) throw MissingDataError(e.name + ": census row has no volume");
  return true;
}

}  // namespace

Real voct(mpfr_prec_t bits) { return Real::from_int(4, bits) * Real::catalan(bits); }

Real v_tet(mpfr_prec_t bits) { return Real::from_string(kVtetDigits, bits); }

Real det_density(int crossings, const BigInt& det, mpfr_prec_t bits) {
  if (crossings < 1) throw DomainError("density needs at least one crossing");
  if (det < 1) throw DomainError("determinant " + to_string(det) + " has no logarithm");
  return two_pi_log(det, bits) / Real::from_int(crossings, bits);
}

Real jones_density(int crossings, const Rational& mu, mpfr_prec_t bits) {
  if (crossings < 1) throw DomainError("density needs at least one crossing");
  if (mu <= 0) throw DomainError("mu = " + to_string(mu) + " has no logarithm");
  return two_pi(bits) * log(Real::from_rational(mu, bits)) / Real::from_int(crossings, bits);
}

Real vol_density(int crossings, const Real& volume) {
  if (crossings < 1) throw DomainError("density needs at least one crossing");
  if (volume.sign() <= 0) throw DomainError("volume density needs a hyperbolic volume");
  return volume / Real::from_int(crossings, volume.bits());
}

DensityRecord density_record(std::string id, const Diagram& d, std::optional<Real> volume,
                             const RecordOptions& options) {
  DensityRecord r;
  r.id = std::move(id);
  r.crossings = d.crossing_number();
  r.alternating = is_alternating(d);
  r.volume = std::move(volume);
  const JonesSummary jones = jones_polynomial(d);
  r.det = jones.determinant;
  r.mu = jones.mu;

  const int c = r.crossings;
  auto guarded = [&](std::optional<Real>& slot, const char* label, auto&& compute) {
    try {
      slot = compute();
    } catch (const DomainError& err) {
      r.flags.push_back(std::string(label) + ": " + err.what());
    }
  };
  guarded(r.det_density, "det density", [&] { return det_density(c, r.det, options.bits); });
  guarded(r.jones_density, "jones density", [&] { return jones_density(c, r.mu, options.bits); });
  if (!r.volume) {
    r.flags.push_back("volume missing");
  } else {
    guarded(r.vol_density, "volume density", [&] { return vol_density(c, *r.volume); });
  }

  if (options.with_khovanov) {
    try {
      r.kh_rank = reduced_kh_rank(d, options.khovanov);
      guarded(r.kh_density, "kh density",
              [&] { return det_density(c, BigInt(*r.kh_rank), options.bits); });
    } catch (const ResourceError& err) {
      r.flags.push_back(std::string("khovanov skipped: ") + err.what());
    }
  }

  if (options.kashaev_n_max >= 2) {
    if (d.num_components() != 1) {
      r.flags.push_back("kashaev skipped: link with several components");
    } else {
      for (int n = 2; n <= options.kashaev_n_max; ++n) {
        try {
          r.kashaev.push_back(kashaev_invariant(d, n, options.kashaev));
        } catch (const Error& err) {
          r.flags.push_back("kashaev stopped at N = " + std::to_string(n) + ": " + err.what());
          break;
        }
        try {
          r.quantum_densities.emplace_back(n, quantum_density(r.kashaev.back()));
        } catch (const DomainError& err) {
          r.flags.push_back("quantum density N = " + std::to_string(n) + ": " + err.what());
        }
      }
    }
  }
  return r;
}

std::optional<Real> aitken_limit(std::span<const Real> terms) {
  if (terms.size() < 4) return std::nullopt;
  std::vector<Real> x(terms.begin(), terms.end());
  while (x.size() >= 3) {
    std::vector<Real> next;
    next.reserve(x.size() - 2);
    for (size_t i = 0; i + 2 < x.size(); ++i) {
      const Real d1 = x[i + 1] - x[i];
      const Real d2 = x[i + 2] - x[i + 1] - d1;
      next.push_back(d2.is_zero() ? x[i + 2] : x[i] - d1 * d1 / d2);
    }
    x = std::move(next);
  }
  return x.back();
}

bool SequenceReport::strictly_increasing() const {
  for (size_t i = 1; i < densities.size(); ++i) {
    if (!(densities[i - 1] < densities[i])) return false;
  }
  return true;
}

bool SequenceReport::residuals_decreasing() const {
  for (size_t i = 1; i < residuals.size(); ++i) {
    if (!(residuals[i] < residuals[i - 1])) return false;
  }
  return true;
}

std::optional<Real> SequenceReport::limit_error() const {
  if (!limit) return std::nullopt;
  Real err = abs(*limit - target);
  if (!target.is_zero()) err /= abs(target);
  return err;
}

SequenceReport make_sequence_report(std::string family, std::vector<int> indices,
                                    std::vector<int> crossings, std::vector<BigInt> determinants,
                                    const Real& target, mpfr_prec_t bits) {
  if (indices.size() != crossings.size() || indices.size() != determinants.size()) {
    throw std::invalid_argument("sequence columns differ in length");
  }
  SequenceReport r;
  r.family = std::move(family);
  r.indices = std::move(indices);
  r.crossings = std::move(crossings);
  r.determinants = std::move(determinants);
  r.target = target;
  for (size_t i = 0; i < r.indices.size(); ++i) {
    r.densities.push_back(det_density(r.crossings[i], r.determinants[i], bits));
    r.residuals.push_back(abs(r.densities.back() - target));
  }
  r.limit = aitken_limit(r.densities);
  return r;
}

SequenceReport maximality_sweep(std::string family, const FamilyGenerator& generator, int first,
                                int last, const Real& target, const SweepOptions& options) {
  if (last < first) throw DomainError("empty family range");
  struct Member {
    int crossings;
    BigInt det;
  };
  const auto members = detail::parallel_map<Member>(
      static_cast<size_t>(last - first + 1), options.threads, [&](size_t i) {
        const Diagram d = generator(first + static_cast<int>(i));
        return Member{d.crossing_number(), goeritz_determinant(d)};
      });
  std::vector<int> indices, crossings;
  std::vector<BigInt> dets;
  for (int i = first; i <= last; ++i) {
    indices.push_back(i);
    crossings.push_back(members[i - first].crossings);
    dets.push_back(members[i - first].det);
  }
  return make_sequence_report(std::move(family), std::move(indices), std::move(crossings),
                              std::move(dets), target, options.bits);
}

CycleConvergence cycle_density_convergence(const Tangle& t, int n_max, const SweepOptions& options) {
  if (n_max < 1) throw DomainError("cycle sweep needs n_max >= 1");
  const Diagram seed = denominator_closure(t);
  CycleConvergence out;
  out.seed_det = goeritz_determinant(seed);
  const Real target = det_density(seed.crossing_number(), out.seed_det, options.bits);

  struct Member {
    int cycle_crossings;
    BigInt cycle_det;
    int sum_crossings;
    BigInt sum_det;
  };
  const auto members = detail::parallel_map<Member>(
      static_cast<size_t>(n_max), options.threads, [&](size_t i) {
        const int n = static_cast<int>(i) + 1;
        const Diagram cycle = cycle_of_tangles(t, n);
        const Diagram sum = connect_power(seed, n);
        return Member{cycle.crossing_number(), goeritz_determinant(cycle), sum.crossing_number(),
                      goeritz_determinant(sum)};
      });
  std::vector<int> indices, cycle_c, sum_c;
  std::vector<BigInt> cycle_det, sum_det;
  out.power_law_exact = true;
  BigInt power = 1;
  for (int n = 1; n <= n_max; ++n) {
    const Member& m = members[n - 1];
    power *= out.seed_det;
    indices.push_back(n);
    cycle_c.push_back(m.cycle_crossings);
    cycle_det.push_back(m.cycle_det);
    sum_c.push_back(m.sum_crossings);
    sum_det.push_back(m.sum_det);
    if (m.sum_det != power) out.power_law_exact = false;
  }
  out.cycles = make_sequence_report("cycle", indices, std::move(cycle_c), std::move(cycle_det),
                                    target, options.bits);
  out.connect_sums = make_sequence_report("connect-sum", std::move(indices), std::move(sum_c),
                                          std::move(sum_det), target, options.bits);
  return out;
}

std::size_t VerificationReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const KnotCheck& k) { return !k.pass; }));
}

const KnotCheck* VerificationReport::min_margin() const {
  const KnotCheck* best = nullptr;
  for (const auto& k : rows) {
    if (!best || k.margin < best->margin) best = &k;
  }
  return best;
}

VerificationReport verify_det_density_bound(CensusTable table, const VerifyOptions& options) {
  const auto rows = within_cap(table, options.max_crossings);
  auto outcomes = detail::parallel_map<RowOutcome>(rows.size(), options.threads, [&](size_t i) {
    const CensusEntry& e = *rows[i];
    if (e.crossings < 1) return skip_row(e, "no crossings");
    const BigInt det = entry_determinant(e, e.diagram());
    if (det < 1) return skip_row(e, "determinant 0");
    RowOutcome o;
    o.check = bound_check(
        e, [&](mpfr_prec_t p) { return det_density(e.crossings, det, p); },
        [](mpfr_prec_t p) { return voct(p); }, false, options.bits);
    return o;
  });
  return collect("det-density", outcomes);
}

VerificationReport verify_jones_density_bound(CensusTable table, const VerifyOptions& options) {
  const auto rows = within_cap(table, options.max_crossings);
  auto outcomes = detail::parallel_map<RowOutcome>(rows.size(), options.threads, [&](size_t i) {
    const CensusEntry& e = *rows[i];
    if (e.crossings < 1) return skip_row(e, "no crossings");
    const Diagram d = e.diagram();
    const JonesSummary jones = jones_polynomial(d);
    const BigInt det = entry_determinant(e, d);
    if (det < 1) return skip_row(e, "determinant 0");
    RowOutcome o;
    o.check = bound_check(
        e, [&](mpfr_prec_t p) { return jones_density(e.crossings, jones.mu, p); },
        [](mpfr_prec_t p) { return voct(p); }, false, options.bits);
    KnotCheck& k = *o.check;
    std::vector<std::string> problems;
    if (is_alternating(d)) {
      // mu = det/(c+1) <= det, so the jones density sits below the det density.
      if (jones.mu != Rational(det, BigInt(e.crossings + 1))) {
        problems.push_back("mu != det/(c+1)");
      }
    } else {
      // Only sum |a_i| <= tau holds here; mu may exceed det (det 1 knots).
      if (jones.mu > Rational(det)) o.statistic = Real::from_int(1, options.bits);
      const BigInt trees = spanning_tree_count(checkerboard_graph(d));
      if (!(jones.abs_sum < trees)) problems.push_back("sum |a_i| not below tree count");
    }
    if (!problems.empty()) {
      k.pass = false;
      for (const auto& p : problems) k.note += (k.note.empty() ? "" : "; ") + p;
    }
    return o;
  });
  auto report = collect("jones-density", outcomes);
  long above = 0;
  for (const auto& o : outcomes) above += o.statistic ? 1 : 0;
  report.statistics.emplace_back("non-alternating rows with mu > det",
                                 Real::from_int(above, options.bits));
  return report;
}

VerificationReport verify_vol_det(CensusTable table, const VerifyOptions& options) {
  const auto rows = within_cap(table, options.max_crossings);
  auto outcomes = detail::parallel_map<RowOutcome>(rows.size(), options.threads, [&](size_t i) {
    const CensusEntry& e = *rows[i];
    if (!e.alternating) return skip_row(e, "not alternating");
    if (missing_volume(e, options)) return skip_row(e, "volume missing");
    if (!e.hyperbolic()) return skip_row(e, "not hyperbolic");
    const BigInt det = entry_determinant(e, e.diagram());
    if (det < 2) return skip_row(e, "determinant below 2");
    const Real& vol = *e.volume;
    RowOutcome o;
    o.check = bound_check(
        e, [&](mpfr_prec_t) { return vol; },
        [&](mpfr_prec_t p) { return two_pi_log(det, p); }, true, options.bits);
    o.statistic = vol / log(Real::from_bigint(det, options.bits));
    return o;
  });
  auto report = collect("vol-det", outcomes);
  if (auto m = min_statistic(outcomes)) report.statistics.emplace_back("min vol/ln det", *m);
  report.statistics.emplace_back("2 pi", two_pi(options.bits));
  return report;
}

VerificationReport verify_kh_vol(CensusTable table, const VerifyOptions& options) {
  const auto rows = within_cap(table, options.max_crossings);
  auto outcomes = detail::parallel_map<RowOutcome>(rows.size(), options.threads, [&](size_t i) {
    const CensusEntry& e = *rows[i];
    if (missing_volume(e, options)) return skip_row(e, "volume missing");
    if (!e.hyperbolic()) return skip_row(e, "not hyperbolic");
    const Diagram d = e.diagram();
    BigInt rank;
    std::string note;
    if (e.alternating) {
      // Reduced Khovanov homology of an alternating knot is thin: rank = det.
      rank = entry_determinant(e, d);
      note = "alternating, rank = det";
    } else {
      try {
        rank = reduced_kh_rank(d, options.khovanov);
      } catch (const ResourceError& err) {
        return skip_row(e, err.what());
      }
    }
    const Real& vol = *e.volume;
    RowOutcome o;
    o.check = bound_check(
        e, [&](mpfr_prec_t) { return vol; },
        [&](mpfr_prec_t p) { return two_pi_log(rank, p); }, true, options.bits);
    if (o.check->note.empty()) o.check->note = note;
    return o;
  });
  return collect("kh-vol", outcomes);
}

CrossingDrop crossing_change_det_drop(const Diagram& d, int max_subset) {
  const int c = d.crossing_number();
  if (c > 63) throw ResourceError("crossing-change sweep supports at most 63 crossings");
  CrossingDrop out;
  out.det = goeritz_determinant(d);
  const int top = std::min(max_subset, c - 1);
  constexpr long kMaxSubsets = 1L << 22;
  std::vector<int> subset;
  for (int size = 1; size <= top; ++size) {
    // Gosper's hack over all c-bit masks with `size` bits set.
    unsigned long mask = (1UL << size) - 1;
    while (mask < (1UL << c)) {
      if (++out.subsets_tested > kMaxSubsets) {
        throw ResourceError("crossing-change sweep exceeds " + std::to_string(kMaxSubsets) +
                            " subsets");
      }
      subset.clear();
      for (int i = 0; i < c; ++i) {
        if (mask >> i & 1UL) subset.push_back(i);
      }
      BigInt changed = goeritz_determinant(change_crossings(d, subset));
      if (changed > out.max_changed) out.max_changed = changed;
      if (!(changed < out.det)) out.failures.emplace_back(mask, std::move(changed));
      const unsigned long low = mask & (~mask + 1);
      const unsigned long ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
  return out;
}

VerificationReport verify_crossing_drop(CensusTable table, const VerifyOptions& options) {
  const auto rows = within_cap(table, options.max_crossings);
  auto outcomes = detail::parallel_map<RowOutcome>(rows.size(), options.threads, [&](size_t i) {
    const CensusEntry& e = *rows[i];
    if (!e.alternating) return skip_row(e, "not alternating");
    const Diagram d = e.diagram();
    if (!is_alternating(d) || !is_reduced(d)) return skip_row(e, "diagram not reduced alternating");
    if (e.crossings < 2) return skip_row(e, "no proper nonempty subset");
    const CrossingDrop drop = crossing_change_det_drop(d);
    RowOutcome o;
    KnotCheck k;
    k.id = e.name;
    k.crossings = e.crossings;
    k.bound = Real::from_bigint(drop.det, options.bits);
    k.value = Real::from_bigint(drop.max_changed, options.bits);
    k.pass = drop.pass();
    k.note = std::to_string(drop.subsets_tested) + " subsets";
    if (!drop.pass()) k.note += ", " + std::to_string(drop.failures.size()) + " without a drop";
    k.margin = k.bound - k.value;
    o.check = std::move(k);
    return o;
  });
  return collect("crossing-drop", outcomes);
}

}  // namespace kd
