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

#include "kd/kashaev.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kd/errors.hpp"

namespace kd {
namespace {

// exp(2 pi i m / (4N)) for every residue m.
class RootTable {
 public:
  RootTable(int n, mpfr_prec_t bits) : period_(4 * n) {
    roots_.reserve(period_);
    for (long m = 0; m < period_; ++m) roots_.push_back(Complex::unit_root(m, period_, bits));
  }
  // q^(m/4) with q = exp(2 pi i / N).
  const Complex& quarter_power(long m) const {
    m %= period_;
    if (m < 0) m += period_;
    return roots_[m];
  }

 private:
  long period_;
  std::vector<Complex> roots_;
};

struct TensorEntry {
  int top_left;
  int top_right;
  Complex value;
};

// Braiding tensor: inputs (bottom-left a, bottom-right b), outputs
// top-left b+k and top-right a-k. Entries indexed by a*N + b.
struct Braiding {
  int n = 0;
  std::vector<std::vector<TensorEntry>> by_input;
};

Braiding positive_braiding(int n, const RootTable& roots, mpfr_prec_t bits) {
  const Real pi = Real::pi(bits);
  const Real base = sin(pi / Real::from_int(n, bits));
  std::vector<Real> qint(n + 1, Real(bits));  // [k], real at a root of unity
  for (int k = 0; k <= n; ++k) qint[k] = sin(pi * Real::from_int(k, bits) / Real::from_int(n, bits)) / base;
  std::vector<Real> qfact(n, Real::from_int(1, bits));
  for (int k = 1; k < n; ++k) qfact[k] = qfact[k - 1] * qint[k];
  // (q^(1/2) - q^(-1/2))^k = (2 i sin(pi/N))^k.
  std::vector<Complex> step(n, Complex(bits));
  step[0].re = Real::from_int(1, bits);
  const Complex unit(Real(bits), Real::from_int(2, bits) * base);
  for (int k = 1; k < n; ++k) step[k] = step[k - 1] * unit;

  Braiding r;
  r.n = n;
  r.by_input.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int k = 0; a - k >= 0 && b + k <= n - 1; ++k) {
        Real lower = Real::from_int(1, bits);  // E^k v_a
        for (int j = a; j > a - k; --j) lower *= qint[n - j];
        Real raise = Real::from_int(1, bits);  // F^k v_b
        for (int j = b; j < b + k; ++j) raise *= qint[j + 1];
        const long ha = n - 1 - 2 * (a - k);
        const long hb = n - 1 - 2 * (b + k);
        Complex v = roots.quarter_power(ha * hb) * roots.quarter_power(long(k) * (k - 1)) * step[k];
        const Real scale = lower * raise / qfact[k];
        v.re *= scale;
        v.im *= scale;
        r.by_input[a * n + b].push_back(TensorEntry{b + k, a - k, std::move(v)});
      }
    }
  }
  return r;
}

// Inverse braiding, block by block in total weight a + b.
Braiding inverse_braiding(const Braiding& r, mpfr_prec_t bits) {
  const int n = r.n;
  Braiding inv;
  inv.n = n;
  inv.by_input.resize(static_cast<size_t>(n) * n);
  for (int s = 0; s <= 2 * n - 2; ++s) {
    std::vector<int> lefts;  // pairs (a, s - a)
    for (int a = std::max(0, s - n + 1); a <= std::min(n - 1, s); ++a) lefts.push_back(a);
    const int m = static_cast<int>(lefts.size());
    auto slot = [&](int a) { return a - lefts.front(); };
    // Augmented [M | I]; rows are inputs (a, s-a), columns outputs (c, s-c).
    std::vector<std::vector<Complex>> aug(m, std::vector<Complex>(2 * m, Complex(bits)));
    for (int i = 0; i < m; ++i) {
      const int a = lefts[i];
      for (const auto& e : r.by_input[a * n + (s - a)]) aug[i][slot(e.top_left)] = e.value;
      aug[i][m + i].re = Real::from_int(1, bits);
    }
    for (int col = 0; col < m; ++col) {
      int best = col;
      for (int i = col + 1; i < m; ++i) {
        if (aug[i][col].norm() > aug[best][col].norm()) best = i;
      }
      if (aug[best][col].is_zero()) throw std::logic_error("braiding block is singular");
      std::swap(aug[col], aug[best]);
      const Complex pivot = aug[col][col];
      for (auto& z : aug[col]) z /= pivot;
      for (int i = 0; i < m; ++i) {
        if (i == col || aug[i][col].is_zero()) continue;
        const Complex f = aug[i][col];
        for (int j = 0; j < 2 * m; ++j) aug[i][j] -= f * aug[col][j];
      }
    }
    for (int i = 0; i < m; ++i) {
      const int a = lefts[i];
      for (int j = 0; j < m; ++j) {
        if (aug[i][m + j].is_zero()) continue;
        const int c = lefts[j];
        inv.by_input[a * n + (s - a)].push_back(TensorEntry{c, s - c, aug[i][m + j]});
      }
    }
  }
  return inv;
}

// Rotation number of every arc (index arc-1) from the face-flow equations
// sum_{left(e)=F} r_e - sum_{right(e)=F} r_e = eps_F - h_F / 2, where h_F
// counts half-turn corners and eps_F is -1 on the outer face.
std::vector<long> rotation_numbers(const Diagram& d) {
  const int faces = d.num_faces();
  const int arcs = d.num_arcs();
  std::vector<long> half_turns(faces, 0);
  for (int c = 0; c < d.crossing_number(); ++c) {
    const int bottom_left = d.crossing(c).over_in == 1 ? 0 : 3;
    ++half_turns[d.face_at(c, bottom_left)];
    ++half_turns[d.face_at(c, (bottom_left + 2) % 4)];
  }
  const int outer = d.right_face(1);
  std::vector<long> demand(faces);
  for (int f = 0; f < faces; ++f) {
    const long twice = 2 * (f == outer ? -1 : 1) - half_turns[f];
    if (twice % 2 != 0) throw std::logic_error("odd half-turn count on a face");
    demand[f] = twice / 2;
  }
  // Spanning tree of the dual graph by breadth-first search from the outer face.
  std::vector<std::vector<int>> incident(faces);
  for (int a = 1; a <= arcs; ++a) {
    if (d.left_face(a) == d.right_face(a)) continue;
    incident[d.left_face(a)].push_back(a);
    incident[d.right_face(a)].push_back(a);
  }
  std::vector<int> parent_arc(faces, 0);
  std::vector<int> order{outer};
  std::vector<bool> seen(faces, false);
  seen[outer] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    const int f = order[i];
    for (int a : incident[f]) {
      const int g = d.left_face(a) == f ? d.right_face(a) : d.left_face(a);
      if (!seen[g]) {
        seen[g] = true;
        parent_arc[g] = a;
        order.push_back(g);
      }
    }
  }
  std::vector<long> rotation(arcs, 0);
  std::vector<long> rest = demand;
  for (size_t i = order.size(); i-- > 1;) {
    const int f = order[i];
    const int a = parent_arc[f];
    const long side = d.left_face(a) == f ? 1 : -1;
    rotation[a - 1] = side * rest[f];
    const int g = side == 1 ? d.right_face(a) : d.left_face(a);
    rest[g] -= (side == 1 ? -1 : 1) * rotation[a - 1];
    rest[f] = 0;
  }
  if (rest[outer] != 0) throw std::logic_error("face-flow equations are inconsistent");
  return rotation;
}

// Crossing order that keeps few arcs open; also returns the widest frontier.
std::vector<int> contraction_order(const Diagram& d, int& width) {
  const int n = d.crossing_number();
  std::vector<int> seen(d.num_arcs() + 1, 0);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  int open = 0;
  width = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_score = -100;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int a : d.crossing(c).arcs) score += seen[a] == 1 ? 1 : -1;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (int a : d.crossing(best).arcs) {
      ++seen[a];
      if (a == 1) continue;
      open += seen[a] == 1 ? 1 : -1;
    }
    width = std::max(width, open);
  }
  return order;
}

Complex evaluate(const Diagram& d, int n, mpfr_prec_t bits, const std::vector<int>& order,
                 const std::vector<long>& rotation) {
  const RootTable roots(n, bits);
  const Braiding positive = positive_braiding(n, roots, bits);
  const Braiding negative = inverse_braiding(positive, bits);
  // w_j^r = q^(-r (N-1-2j) / 2).
  auto pivot = [&](int label, long r) -> const Complex& {
    return roots.quarter_power(-2 * r * (n - 1 - 2 * label));
  };

  std::vector<int> frontier;  // open arcs, ascending
  std::map<std::string, Complex> states;
  {
    Complex one(bits);
    one.re = Real::from_int(1, bits);
    states.emplace(std::string(), std::move(one));
  }
  std::vector<int> seen(d.num_arcs() + 1, 0);

  for (int c : order) {
    const Crossing& x = d.crossing(c);
    const int bl = x.over_in == 1 ? 0 : 3;
    const std::array<int, 4> arc = {x.arcs[bl], x.arcs[(bl + 1) % 4], x.arcs[(bl + 3) % 4],
                                    x.arcs[(bl + 2) % 4]};  // BL, BR, TL, TR
    const Braiding& tensor = x.sign() > 0 ? positive : negative;
    for (int a : x.arcs) ++seen[a];

    std::vector<int> next;
    for (int a : frontier) {
      if (seen[a] == 1) next.push_back(a);
    }
    for (int a : x.arcs) {
      if (seen[a] == 1 && std::find(next.begin(), next.end(), a) == next.end()) next.push_back(a);
    }
    std::sort(next.begin(), next.end());
    // Arcs whose factor is applied here: opened now or closed in a kink.
    std::vector<int> fresh;
    for (int a : x.arcs) {
      if (a != 1 && std::find(frontier.begin(), frontier.end(), a) == frontier.end() &&
          std::find(fresh.begin(), fresh.end(), a) == fresh.end()) {
        fresh.push_back(a);
      }
    }

    std::map<std::string, Complex> next_states;
    std::vector<int> label(d.num_arcs() + 1, -1);
    for (const auto& [key, value] : states) {
      std::fill(label.begin(), label.end(), -1);
      for (size_t i = 0; i < frontier.size(); ++i) label[frontier[i]] = key[i];
      label[1] = 0;
      const int a_lo = label[arc[0]] >= 0 ? label[arc[0]] : 0;
      const int a_hi = label[arc[0]] >= 0 ? label[arc[0]] : n - 1;
      for (int av = a_lo; av <= a_hi; ++av) {
        const bool same_ab = arc[1] == arc[0];
        const int b_lo = same_ab ? av : (label[arc[1]] >= 0 ? label[arc[1]] : 0);
        const int b_hi = same_ab ? av : (label[arc[1]] >= 0 ? label[arc[1]] : n - 1);
        for (int bv = b_lo; bv <= b_hi; ++bv) {
          for (const TensorEntry& e : tensor.by_input[av * n + bv]) {
            std::array<int, 4> v = {av, bv, e.top_left, e.top_right};
            bool ok = true;
            for (int p = 0; ok && p < 4; ++p) {
              if (label[arc[p]] >= 0 && label[arc[p]] != v[p]) ok = false;
              for (int q = 0; ok && q < p; ++q) {
                if (arc[q] == arc[p] && v[q] != v[p]) ok = false;
              }
            }
            if (!ok) continue;
            std::vector<int> local(label);
            for (int p = 0; p < 4; ++p) local[arc[p]] = v[p];
            Complex term = value * e.value;
            for (int a : fresh) term *= pivot(local[a], rotation[a - 1]);
            std::string out(next.size(), '\0');
            for (size_t i = 0; i < next.size(); ++i) out[i] = static_cast<char>(local[next[i]]);
            auto it = next_states.find(out);
            if (it == next_states.end()) {
              next_states.emplace(std::move(out), std::move(term));
            } else {
              it->second += term;
            }
          }
        }
      }
    }
    states = std::move(next_states);
    frontier = std::move(next);
  }
  Complex total = states.count(std::string()) ? states.at(std::string()) : Complex(bits);
  // Cut arc: w_0^(r - 1); framing: theta^(-writhe) with theta = q^((N^2-1)/4).
  total *= roots.quarter_power(-2L * (rotation[0] - 1) * (n - 1));
  total *= roots.quarter_power(-static_cast<long>(d.writhe()) * (long(n) * n - 1));
  return total;
}

}  // namespace

KashaevValue kashaev_invariant(const Diagram& d, int n, const KashaevOptions& options) {
  if (n < 2) throw DomainError("Kashaev invariant needs N >= 2");
  if (n > options.max_n) {
    throw ResourceError("N = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(options.max_n));
  }
  if (d.num_components() != 1) throw DomainError("Kashaev invariant is computed for knots only");

  KashaevValue out;
  out.n = n;
  out.crossings = d.crossing_number();
  if (d.crossing_number() == 0) {
    out.value = Complex(options.precision_bits);
    out.value.re = Real::from_int(1, options.precision_bits);
    out.abs = out.value.abs();
    out.error_bound = Real(options.precision_bits);
    out.bits = options.precision_bits;
    return out;
  }
  int width = 0;
  const auto order = contraction_order(d, width);
  if (std::pow(static_cast<double>(n), width) > options.max_states) {
    throw ResourceError("state space N^" + std::to_string(width) + " exceeds the cap");
  }
  const auto rotation = rotation_numbers(d);

  for (mpfr_prec_t bits = options.precision_bits; bits <= options.max_precision_bits; bits *= 2) {
    const Complex coarse = evaluate(d, n, bits, order, rotation);
    Complex fine = evaluate(d, n, bits + 64, order, rotation);
    Real error = (fine - coarse).abs();
    const Real magnitude = fine.abs();
    Real scale = magnitude > Real::from_int(1, bits) ? magnitude : Real::from_int(1, bits);
    if (error <= pow2(-bits / 2, bits + 64) * scale) {
      out.value = std::move(fine);
      out.abs = magnitude;
      out.error_bound = std::move(error);
      out.bits = bits;
      return out;
    }
  }
  throw PrecisionError("Kashaev value did not stabilize below " +
                       std::to_string(options.max_precision_bits) + " bits");
}

Real figure_eight_kashaev(int n, mpfr_prec_t bits) {
  if (n < 2) throw DomainError("figure-eight oracle needs N >= 2");
  const mpfr_prec_t work = bits + 32;
  const Real pi = Real::pi(work);
  Real sum = Real::from_int(0, work);
  Real term = Real::from_int(1, work);
  for (int j = 0; j < n; ++j) {
    sum += term;
    const Real s = sin(pi * Real::from_int(j + 1, work) / Real::from_int(n, work));
    term *= Real::from_int(4, work) * s * s;
  }
  Real out(bits);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

Real quantum_density(const Real& abs_value, int n, int crossings) {
  if (crossings < 1) throw DomainError("density needs at least one crossing");
  if (n < 2) throw DomainError("density needs N >= 2");
  if (abs_value.sign() <= 0) throw DomainError("Kashaev value is zero; density undefined");
  const mpfr_prec_t bits = abs_value.bits();
  return Real::from_int(2, bits) * Real::pi(bits) * log(abs_value) /
         Real::from_int(static_cast<long>(n) * crossings, bits);
}

Real quantum_density(const KashaevValue& v) {
  if (v.abs <= v.error_bound) throw DomainError("Kashaev value is zero within its error bound");
  return quantum_density(v.abs, v.n, v.crossings);
}

}  // namespace kd
