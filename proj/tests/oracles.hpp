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

// Independent reference implementations used by the unit and acceptance
// tests. None of them share code with the library routines they check.

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "kd/bigint.hpp"
#include "kd/codec.hpp"
#include "kd/diagram.hpp"
#include "kd/graphs.hpp"
#include "kd/laurent.hpp"

namespace kd::oracle {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Kauffman bracket by summing all 2^c states. A-smoothing joins positions
// (0,1) and (2,3), B-smoothing joins (0,3) and (1,2). Exponents in A.
inline std::map<int, BigInt> naive_bracket(const Diagram& d) {
  const int c = d.crossing_number();
  std::map<int, BigInt> total;
  if (c == 0) {
    // Unknot components: d^(k-1) with d = -A^2 - A^-2.
    std::map<int, BigInt> p{{0, 1}};
    for (int i = 1; i < d.num_components(); ++i) {
      std::map<int, BigInt> next;
      for (const auto& [e, v] : p) {
        next[e + 2] -= v;
        next[e - 2] -= v;
      }
      p = next;
    }
    return p;
  }
  const int arcs = d.num_arcs();
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    DisjointSets loops(arcs + 1);
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto& x = d.crossing(i).arcs;
      if (state >> i & 1U) {
        loops.unite(x[0], x[3]);
        loops.unite(x[1], x[2]);
      } else {
        ++a_count;
        loops.unite(x[0], x[1]);
        loops.unite(x[2], x[3]);
      }
    }
    int circles = 0;
    for (int a = 1; a <= arcs; ++a) circles += loops.find(a) == a;
    // A^(a-b) * d^(circles-1)
    std::map<int, BigInt> p{{a_count - (c - a_count), 1}};
    for (int i = 1; i < circles; ++i) {
      std::map<int, BigInt> next;
      for (const auto& [e, v] : p) {
        next[e + 2] -= v;
        next[e - 2] -= v;
      }
      p = next;
    }
    for (const auto& [e, v] : p) total[e] += v;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

// Jones polynomial from the naive bracket, exponents in t^(1/2):
// V = (-A^3)^(-w) <D> with A = t^(-1/4).
inline std::map<int, BigInt> naive_jones(const Diagram& d) {
  const int w = d.writhe();
  std::map<int, BigInt> out;
  for (const auto& [e, v] : naive_bracket(d)) {
    const int a_exp = e - 3 * w;
    BigInt coeff = (w % 2 == 0) ? v : BigInt(-v);
    out[-a_exp / 2] += coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<int, BigInt> terms_of(const LaurentPolynomial& p) {
  return {p.terms().begin(), p.terms().end()};
}

// |V(-1)| from coefficients in t^(1/2): t^(1/2) -> i.
inline BigInt naive_determinant(const Diagram& d) {
  BigInt re = 0, im = 0;
  for (const auto& [e, v] : naive_jones(d)) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += v; break;
      case 1: im += v; break;
      case 2: re -= v; break;
      default: im -= v; break;
    }
  }
  BigInt sq = re * re + im * im;
  return boost::multiprecision::sqrt(sq);
}

// Spanning trees by testing every (V-1)-subset of edges.
inline long brute_spanning_trees(const PlanarMultigraph& g) {
  const int v = g.num_vertices();
  const int e = g.num_edges();
  if (v <= 1) return 1;
  const auto edges = g.edges();
  long count = 0;
  std::vector<int> pick(v - 1);
  std::iota(pick.begin(), pick.end(), 0);
  if (e < v - 1) return 0;
  while (true) {
    DisjointSets forest(v);
    bool acyclic = true;
    for (int i : pick) {
      if (!forest.unite(edges[i].u, edges[i].v)) {
        acyclic = false;
        break;
      }
    }
    count += acyclic;
    int k = v - 2;
    while (k >= 0 && pick[k] == e - (v - 1) + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < v - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

inline BigInt lucas(int n) {
  BigInt a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// sum_{j<N} prod_{k<=j} |1 - q^k|^2 at q = exp(2 pi i/N), in raw MPFR.
inline double figure_eight_sum(int n, mpfr_prec_t bits, mpfr_t out) {
  mpfr_t sum, term, angle, c, s, re, tmp;
  for (mpfr_ptr x : {sum, term, angle, c, s, re, tmp}) mpfr_init2(x, bits);
  mpfr_set_ui(sum, 0, MPFR_RNDN);
  mpfr_set_ui(term, 1, MPFR_RNDN);
  for (int j = 0; j < n; ++j) {
    mpfr_add(sum, sum, term, MPFR_RNDN);
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_ui(angle, angle, 2UL * (j + 1), MPFR_RNDN);
    mpfr_div_ui(angle, angle, n, MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpfr_ui_sub(re, 1, c, MPFR_RNDN);  // |1 - e^{i x}|^2 = (1 - cos x)^2 + sin^2 x
    mpfr_sqr(re, re, MPFR_RNDN);
    mpfr_sqr(tmp, s, MPFR_RNDN);
    mpfr_add(re, re, tmp, MPFR_RNDN);
    mpfr_mul(term, term, re, MPFR_RNDN);
  }
  mpfr_set(out, sum, MPFR_RNDN);
  const double approx = mpfr_get_d(sum, MPFR_RNDN);
  for (mpfr_ptr x : {sum, term, angle, c, s, re, tmp}) mpfr_clear(x);
  return approx;
}

// Seeded random braid words: strands in [2, max_strands], every generator
// used at least once, then up to max_length extra letters.
inline std::vector<BraidWord> random_braids(std::uint32_t seed, int count, int max_strands,
                                            int max_length) {
  std::mt19937 rng(seed);
  std::vector<BraidWord> out;
  for (int i = 0; i < count; ++i) {
    BraidWord w;
    w.strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
    const int len = std::uniform_int_distribution<int>(0, max_length)(rng);
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    std::bernoulli_distribution flip(0.5);
    for (int g = 1; g < w.strands; ++g) w.letters.push_back(flip(rng) ? g : -g);
    std::shuffle(w.letters.begin(), w.letters.end(), rng);
    for (int j = 0; j < len; ++j) w.letters.push_back(flip(rng) ? gen(rng) : -gen(rng));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace kd::oracle
