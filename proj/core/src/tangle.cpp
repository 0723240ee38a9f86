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

#include "kd/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "kd/errors.hpp"

namespace kd {
namespace {

int max_label(const Tangle& t) {
  int m = 0;
  for (const auto& x : t.tuples()) {
    for (int a : x) m = std::max(m, a);
  }
  return m;
}

// Relabels `b` above every label of `a` and concatenates the tuples.
std::vector<std::array<int, 4>> disjoint_union(const Tangle& a, const Tangle& b, int& shift) {
  shift = max_label(a);
  std::vector<std::array<int, 4>> out = a.tuples();
  for (auto x : b.tuples()) {
    for (int& l : x) l += shift;
    out.push_back(x);
  }
  return out;
}

// Replaces every occurrence of `from` by `to`.
void merge(std::vector<std::array<int, 4>>& tuples, int from, int to) {
  for (auto& x : tuples) {
    for (int& l : x) {
      if (l == from) l = to;
    }
  }
}

}  // namespace

Tangle::Tangle(std::vector<std::array<int, 4>> tuples, std::array<int, 4> boundary)
    : tuples_(std::move(tuples)), boundary_(boundary) {
  if (tuples_.empty()) throw ValidationError("tangle needs at least one crossing");
  std::map<int, int> count;
  for (const auto& x : tuples_) {
    for (int a : x) {
      if (a <= 0) throw ValidationError("tangle labels must be positive");
      ++count[a];
    }
  }
  for (int b : boundary_) {
    if (count[b] != 1) {
      throw ValidationError("boundary arc " + std::to_string(b) + " must occur exactly once");
    }
    count[b] = 2;
  }
  for (const auto& [label, n] : count) {
    if (n != 2) {
      throw ValidationError("interior arc " + std::to_string(label) + " must occur exactly twice");
    }
  }
}

Tangle Tangle::crossing() {
  // Counterclockwise from the SW end of the under strand: SW, SE, NE, NW.
  return Tangle({{3, 4, 2, 1}}, {1, 2, 3, 4});
}

Tangle tangle_sum(const Tangle& left, const Tangle& right) {
  int shift = 0;
  auto tuples = disjoint_union(left, right, shift);
  merge(tuples, right.boundary(Tangle::kNW) + shift, left.boundary(Tangle::kNE));
  merge(tuples, right.boundary(Tangle::kSW) + shift, left.boundary(Tangle::kSE));
  return Tangle(std::move(tuples),
                {left.boundary(Tangle::kNW), right.boundary(Tangle::kNE) + shift,
                 left.boundary(Tangle::kSW), right.boundary(Tangle::kSE) + shift});
}

Tangle tangle_product(const Tangle& top, const Tangle& bottom) {
  int shift = 0;
  auto tuples = disjoint_union(top, bottom, shift);
  merge(tuples, bottom.boundary(Tangle::kNW) + shift, top.boundary(Tangle::kSW));
  merge(tuples, bottom.boundary(Tangle::kNE) + shift, top.boundary(Tangle::kSE));
  return Tangle(std::move(tuples),
                {top.boundary(Tangle::kNW), top.boundary(Tangle::kNE),
                 bottom.boundary(Tangle::kSW) + shift, bottom.boundary(Tangle::kSE) + shift});
}

Diagram numerator_closure(const Tangle& t) {
  auto tuples = t.tuples();
  merge(tuples, t.boundary(Tangle::kNE), t.boundary(Tangle::kNW));
  merge(tuples, t.boundary(Tangle::kSE), t.boundary(Tangle::kSW));
  return Diagram::from_unoriented(tuples);
}

Diagram denominator_closure(const Tangle& t) {
  auto tuples = t.tuples();
  merge(tuples, t.boundary(Tangle::kSW), t.boundary(Tangle::kNW));
  merge(tuples, t.boundary(Tangle::kSE), t.boundary(Tangle::kNE));
  return Diagram::from_unoriented(tuples);
}

Diagram cycle_of_tangles(const Tangle& t, int n) {
  if (n < 1) throw DomainError("cycle of tangles needs n >= 1");
  Tangle ring = t;
  for (int i = 1; i < n; ++i) ring = tangle_sum(ring, t);
  return numerator_closure(ring);
}

}  // namespace kd
