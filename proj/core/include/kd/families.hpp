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

#include "kd/codec.hpp"
#include "kd/diagram.hpp"

namespace kd {

// (s1 s2^-1 s3 ...)^q on p strands.
BraidWord weaving_braid(int p, int q);
// Alternating closure of weaving_braid(p, q); q(p-1) crossings.
Diagram weaving_knot(int p, int q);

// Alternating diagram whose Tait graph is the m x n grid graph, with one
// crossing per grid edge (2mn - m - n crossings).
Diagram celtic_grid(int m, int n);

// Joins the lowest-labelled arcs of the two diagrams.
Diagram connect_sum(const Diagram& a, const Diagram& b);
// d # d # ... # d, n copies.
Diagram connect_power(const Diagram& d, int n);

struct ArcPair {
  int first = 1;
  int second = 2;
};

// Inserts a row of k crossings between two arcs that bound a common region,
// twisting in the same sense as the neighbouring crossings so an alternating
// input stays alternating. Throws DomainError when the arcs share no region.
Diagram twist_on_two_strands(const Diagram& d, ArcPair site, int k);

}  // namespace kd
