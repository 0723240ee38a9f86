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

#include <array>
#include <vector>

#include "kd/diagram.hpp"

namespace kd {

// Two-string tangle in a disk. Crossings are stored as tuples that start at
// either end of the under strand and run counterclockwise; the four open
// arcs are tagged by the disk corner they reach.
class Tangle {
 public:
  enum Corner { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

  // Throws ValidationError unless each boundary label occurs once and every
  // other label twice.
  Tangle(std::vector<std::array<int, 4>> tuples, std::array<int, 4> boundary);

  // One crossing whose under strand runs SW to NE.
  static Tangle crossing();

  int crossing_number() const { return static_cast<int>(tuples_.size()); }
  const std::vector<std::array<int, 4>>& tuples() const { return tuples_; }
  int boundary(Corner c) const { return boundary_[c]; }

 private:
  std::vector<std::array<int, 4>> tuples_;
  std::array<int, 4> boundary_;
};

// Side by side: NE of `left` meets NW of `right`, SE meets SW.
Tangle tangle_sum(const Tangle& left, const Tangle& right);
// Stacked: SW of `top` meets NW of `bottom`, SE meets NE.
Tangle tangle_product(const Tangle& top, const Tangle& bottom);
// Closures: numerator joins NW-NE and SW-SE, denominator NW-SW and NE-SE.
Diagram numerator_closure(const Tangle& t);
Diagram denominator_closure(const Tangle& t);

// n copies in a ring, NE of each joined to NW of the next and SE to SW.
// cycle_of_tangles(t, 1) is the numerator closure of t.
Diagram cycle_of_tangles(const Tangle& t, int n);

}  // namespace kd
