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

#include "kd/diagram.hpp"
#include "kd/real.hpp"

namespace kd {

struct KashaevOptions {
  mpfr_prec_t precision_bits = 128;
  mpfr_prec_t max_precision_bits = 1024;
  int max_n = 16;
  // Cap on N^(widest frontier) in the state sum.
  double max_states = 4194304.0;
};

struct KashaevValue {
  int n = 2;
  int crossings = 0;
  Complex value;
  Real abs;
  // Bound on |value - exact|, from a second evaluation 64 bits wider.
  Real error_bound;
  mpfr_prec_t bits = 128;
};

// <K>_N = J_N(K; e^(2 pi i/N)) / J_N(unknot; e^(2 pi i/N)) by a Yang-Baxter
// state sum over the diagram cut open at arc 1. Throws DomainError for links
// or N < 2, ResourceError past the caps, PrecisionError when fewer than half
// the working bits agree even at the maximum precision.
KashaevValue kashaev_invariant(const Diagram& d, int n, const KashaevOptions& options = {});

// Sum over j < N of prod over k <= j of 4 sin^2(pi k / N).
Real figure_eight_kashaev(int n, mpfr_prec_t bits = Real::kDefaultBits);

// 2 pi ln|value| / (N c). Throws DomainError when the value is not
// distinguishable from zero or the diagram has no crossings.
Real quantum_density(const KashaevValue& v);
Real quantum_density(const Real& abs_value, int n, int crossings);

}  // namespace kd
