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

#include "kd/families.hpp"

#include <array>
#include <string>
#include <vector>

#include "kd/errors.hpp"

namespace kd {

BraidWord weaving_braid(int p, int q) {
  if (p < 3 || q < 2) {
    throw DomainError("weaving knot needs p >= 3 and q >= 2, got (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  }
  BraidWord w;
  w.strands = p;
  for (int r = 0; r < q; ++r) {
    for (int i = 1; i < p; ++i) w.letters.push_back(i % 2 ? i : -i);
  }
  return w;
}

Diagram weaving_knot(int p, int q) { return from_braid(weaving_braid(p, q)); }

Diagram celtic_grid(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("celtic grid needs m, n >= 2");
  // Directions around a grid vertex in counterclockwise order.
  enum { kE = 0, kN = 1, kW = 2, kS = 3 };
  auto present = [&](int x, int y, int dir) {
    switch (dir) {
      case kE: return x + 1 < m;
      case kN: return y + 1 < n;
      case kW: return x > 0;
      default: return y > 0;
    }
  };
  auto prev_ccw = [&](int x, int y, int dir) {
    int d = dir;
    do d = (d + 3) % 4;
    while (!present(x, y, d));
    return d;
  };
  // Arc in the wedge from `dir` to the next edge counterclockwise at (x, y).
  auto wedge = [&](int x, int y, int dir) { return 4 * (x * n + y) + dir + 1; };

  std::vector<std::array<int, 4>> tuples;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int dir : {kE, kN}) {
        if (!present(x, y, dir)) continue;
        const int vx = dir == kE ? x + 1 : x;
        const int vy = dir == kE ? y : y + 1;
        const int back = dir + 2;
        const int ne = wedge(vx, vy, prev_ccw(vx, vy, back));
        const int nw = wedge(x, y, dir);
        const int sw = wedge(x, y, prev_ccw(x, y, dir));
        const int se = wedge(vx, vy, back);
        tuples.push_back({ne, nw, sw, se});
      }
    }
  }
  return Diagram::from_unoriented(tuples);
}

Diagram connect_sum(const Diagram& a, const Diagram& b) {
  if (a.crossing_number() == 0) return b;
  if (b.crossing_number() == 0) return a;
  const int offset = a.num_arcs();
  std::vector<Crossing> out(a.crossings().begin(), a.crossings().end());
  for (Crossing x : b.crossings()) {
    for (int& l : x.arcs) l += offset;
    out.push_back(x);
  }
  const Slot head_a = a.head(1);
  Slot head_b = b.head(1);
  head_b.crossing += a.crossing_number();
  // Arc 1 now runs from a's tail into b; b's first arc runs back into a.
  out[head_b.crossing].arcs[head_b.position] = 1;
  out[head_a.crossing].arcs[head_a.position] = offset + 1;
  return Diagram::from_crossings(std::move(out));
}

Diagram connect_power(const Diagram& d, int n) {
  if (n < 1) throw DomainError("connect power needs n >= 1");
  Diagram out = d;
  for (int i = 1; i < n; ++i) out = connect_sum(out, d);
  return out;
}

Diagram twist_on_two_strands(const Diagram& d, ArcPair site, int k) {
  if (k < 0) throw DomainError("twist count must be nonnegative");
  const int arcs = d.num_arcs();
  if (site.first < 1 || site.first > arcs || site.second < 1 || site.second > arcs ||
      site.first == site.second) {
    throw DomainError("twist site needs two distinct arcs of the diagram");
  }
  if (k == 0) return d;
  const int a1 = site.first;
  const int a2 = site.second;
  int face = -1;
  for (int f : {d.left_face(a1), d.right_face(a1)}) {
    if (face < 0 && (f == d.left_face(a2) || f == d.right_face(a2))) face = f;
  }
  if (face < 0) {
    throw DomainError("arcs " + std::to_string(a1) + " and " + std::to_string(a2) +
                      " do not bound a common region");
  }
  // For each arc: the end from which the region lies on the left, and the other end.
  auto ends = [&](int a) {
    return d.left_face(a) == face ? std::array<Slot, 2>{d.tail(a), d.head(a)}
                                  : std::array<Slot, 2>{d.head(a), d.tail(a)};
  };
  const auto [s1, t1] = ends(a1);
  const Slot t2 = ends(a2)[1];

  std::vector<std::array<int, 4>> tuples;
  for (const auto& x : d.crossings()) tuples.push_back(x.arcs);
  int next = arcs + 1;
  // Corner labels of the new crossings.
  std::vector<std::array<int, 4>> corner(k, {0, 0, 0, 0});  // NW, NE, SW, SE
  corner[0][0] = a1;
  tuples[s1.crossing][s1.position] = next;
  corner[k - 1][1] = next++;
  corner[0][2] = a2;
  tuples[t2.crossing][t2.position] = next;
  corner[k - 1][3] = next++;
  for (int j = 0; j + 1 < k; ++j) {
    corner[j][1] = corner[j + 1][0] = next++;
    corner[j][3] = corner[j + 1][2] = next++;
  }
  // Pick the under strand so the new crossings share the Goeritz type of
  // the crossing at the far end of the first arc.
  const int target = d.goeritz_type(t1.crossing);
  const bool colour0 = d.face_color(face) == 0;
  const bool ne_sw_under = colour0 ? target == -1 : target == 1;
  for (const auto& c : corner) {
    const int nw = c[0], ne = c[1], sw = c[2], se = c[3];
    if (ne_sw_under) {
      tuples.push_back({ne, nw, sw, se});
    } else {
      tuples.push_back({nw, sw, se, ne});
    }
  }
  return Diagram::from_unoriented(tuples);
}

}  // namespace kd
