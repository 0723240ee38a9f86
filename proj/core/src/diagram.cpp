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

#include "kd/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "kd/errors.hpp"

namespace kd {
namespace {

enum class Dir : signed char { kUnknown = 0, kIn = 1, kOut = -1 };

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Renumbers labels to 1..2c and checks that each label occurs twice.
std::vector<std::array<int, 4>> normalize_labels(std::span<const std::array<int, 4>> tuples) {
  std::map<int, int> count;
  for (const auto& t : tuples) {
    for (int a : t) {
      if (a <= 0) throw ValidationError("arc labels must be positive, got " + std::to_string(a));
      ++count[a];
    }
  }
  std::string bad;
  for (const auto& [label, n] : count) {
    if (n != 2) {
      bad += (bad.empty() ? "" : ", ") + std::to_string(label) + " (x" + std::to_string(n) + ")";
    }
  }
  if (!bad.empty()) throw ValidationError("arcs must appear exactly twice: " + bad);
  std::map<int, int> rank;
  for (const auto& [label, n] : count) rank.emplace(label, static_cast<int>(rank.size()) + 1);
  std::vector<std::array<int, 4>> out(tuples.begin(), tuples.end());
  for (auto& t : out) {
    for (int& a : t) a = rank[a];
  }
  return out;
}

// Both slots of every label, in (crossing, position) order.
std::vector<std::array<Slot, 2>> slots_by_label(const std::vector<std::array<int, 4>>& tuples) {
  std::vector<std::array<Slot, 2>> ends(2 * tuples.size());
  std::vector<int> seen(ends.size(), 0);
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    for (int p = 0; p < 4; ++p) {
      const int a = tuples[c][p] - 1;
      ends[a][seen[a]++] = Slot{c, p};
    }
  }
  return ends;
}

Slot partner(const std::array<Slot, 2>& ends, Slot s) { return ends[0] == s ? ends[1] : ends[0]; }

// Over strand positive iff it runs from position 3 to position 1 with
// consecutive labels, the usual fallback when no under-pass fixes it.
bool fallback_positive(const std::array<int, 4>& t) {
  const int j = t[1];
  const int l = t[3];
  return j - l == 1 || l - j > 1;
}

}  // namespace

Diagram::Diagram() : face_color_{0, 1} {}

Diagram Diagram::from_pd(std::span<const std::array<int, 4>> tuples) {
  if (tuples.empty()) return Diagram();
  const auto norm = normalize_labels(tuples);
  const auto ends = slots_by_label(norm);
  const int n = static_cast<int>(norm.size());
  std::vector<Dir> dir(4 * n, Dir::kUnknown);
  std::deque<Slot> queue;
  auto set = [&](Slot s, Dir d) {
    Dir& cur = dir[4 * s.crossing + s.position];
    if (cur == Dir::kUnknown) {
      cur = d;
      queue.push_back(s);
    } else if (cur != d) {
      throw ValidationError("inconsistent orientation at arc " +
                            std::to_string(norm[s.crossing][s.position]));
    }
  };
  auto propagate = [&] {
    while (!queue.empty()) {
      const Slot s = queue.front();
      queue.pop_front();
      const Dir d = dir[4 * s.crossing + s.position];
      const Dir flipped = d == Dir::kIn ? Dir::kOut : Dir::kIn;
      set(partner(ends[norm[s.crossing][s.position] - 1], s), flipped);
      set(Slot{s.crossing, (s.position + 2) % 4}, flipped);
    }
  };
  for (int c = 0; c < n; ++c) {
    set(Slot{c, 0}, Dir::kIn);
    set(Slot{c, 2}, Dir::kOut);
  }
  propagate();
  for (int c = 0; c < n; ++c) {
    if (dir[4 * c + 1] == Dir::kUnknown) {
      set(Slot{c, 3}, fallback_positive(norm[c]) ? Dir::kIn : Dir::kOut);
      propagate();
    }
  }
  std::vector<Crossing> crossings(n);
  for (int c = 0; c < n; ++c) {
    crossings[c].arcs = norm[c];
    crossings[c].over_in = dir[4 * c + 1] == Dir::kIn ? 1 : 3;
  }
  return from_crossings(std::move(crossings));
}

Diagram Diagram::from_unoriented(std::span<const std::array<int, 4>> tuples) {
  if (tuples.empty()) return Diagram();
  const auto norm = normalize_labels(tuples);
  const auto ends = slots_by_label(norm);
  const int n = static_cast<int>(norm.size());
  std::vector<Dir> dir(4 * n, Dir::kUnknown);
  for (int a = 0; a < 2 * n; ++a) {
    Slot start = ends[a][0];
    if (dir[4 * start.crossing + start.position] != Dir::kUnknown) continue;
    Slot out = start;
    do {
      dir[4 * out.crossing + out.position] = Dir::kOut;
      const Slot in = partner(ends[norm[out.crossing][out.position] - 1], out);
      if (dir[4 * in.crossing + in.position] != Dir::kUnknown) {
        throw ValidationError("strand passes a slot twice");
      }
      dir[4 * in.crossing + in.position] = Dir::kIn;
      out = Slot{in.crossing, (in.position + 2) % 4};
    } while (!(out == start));
  }
  std::vector<Crossing> crossings(n);
  for (int c = 0; c < n; ++c) {
    const int shift = dir[4 * c] == Dir::kIn ? 0 : 2;
    for (int p = 0; p < 4; ++p) crossings[c].arcs[p] = norm[c][(p + shift) % 4];
    crossings[c].over_in = dir[4 * c + (1 + shift) % 4] == Dir::kIn ? 1 : 3;
  }
  return from_crossings(std::move(crossings));
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings) {
  Diagram d;
  d.crossings_ = std::move(crossings);
  const int n = d.crossing_number();
  if (n == 0) return d;
  const int arcs = 2 * n;
  d.tails_.assign(arcs, Slot{-1, -1});
  d.heads_.assign(arcs, Slot{-1, -1});
  UnionFind pieces(n);
  std::vector<int> first_crossing(arcs, -1);
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossings_[c];
    if (x.over_in != 1 && x.over_in != 3) throw ValidationError("over strand must enter at 1 or 3");
    for (int p = 0; p < 4; ++p) {
      const int a = x.arcs[p];
      if (a < 1 || a > arcs) throw ValidationError("arc label out of range");
      const bool incoming = p == 0 || p == x.over_in;
      Slot& end = incoming ? d.heads_[a - 1] : d.tails_[a - 1];
      if (end.crossing >= 0) {
        throw ValidationError("arc " + std::to_string(a) + " has two " +
                              (incoming ? "heads" : "tails"));
      }
      end = Slot{c, p};
      if (first_crossing[a - 1] < 0) {
        first_crossing[a - 1] = c;
      } else {
        pieces.unite(first_crossing[a - 1], c);
      }
    }
  }
  for (int c = 1; c < n; ++c) {
    if (pieces.find(c) != pieces.find(0)) throw ValidationError("split diagrams are not supported");
  }

  d.component_.assign(arcs, -1);
  d.num_components_ = 0;
  for (int a = 1; a <= arcs; ++a) {
    if (d.component_[a - 1] >= 0) continue;
    int cur = a;
    while (d.component_[cur - 1] < 0) {
      d.component_[cur - 1] = d.num_components_;
      const Slot h = d.heads_[cur - 1];
      cur = d.arc_at(Slot{h.crossing, (h.position + 2) % 4});
    }
    ++d.num_components_;
  }

  d.corner_face_.assign(4 * n, -1);
  d.num_faces_ = 0;
  for (int k = 0; k < 4 * n; ++k) {
    if (d.corner_face_[k] >= 0) continue;
    int cur = k;
    while (d.corner_face_[cur] < 0) {
      d.corner_face_[cur] = d.num_faces_;
      const Slot next = d.other_end(Slot{cur / 4, (cur % 4 + 1) % 4});
      cur = 4 * next.crossing + next.position;
    }
    ++d.num_faces_;
  }
  if (d.num_faces_ != n + 2) {
    throw ValidationError("tuples do not describe a planar diagram (" +
                          std::to_string(d.num_faces_) + " regions for " + std::to_string(n) +
                          " crossings)");
  }

  std::vector<std::vector<int>> across(d.num_faces_);
  for (int k = 0; k < 4 * n; ++k) {
    const int c = k / 4;
    const int f = d.corner_face_[k];
    const int g = d.corner_face_[4 * c + (k % 4 + 3) % 4];
    across[f].push_back(g);
  }
  d.face_color_.assign(d.num_faces_, -1);
  std::deque<int> queue{d.corner_face_[0]};
  d.face_color_[d.corner_face_[0]] = 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int g : across[f]) {
      if (d.face_color_[g] < 0) {
        d.face_color_[g] = 1 - d.face_color_[f];
        queue.push_back(g);
      } else if (d.face_color_[g] == d.face_color_[f]) {
        throw ValidationError("diagram is not checkerboard colourable");
      }
    }
  }
  return d;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign();
  return w;
}

Slot Diagram::other_end(Slot s) const {
  const int a = arc_at(s);
  return tails_[a - 1] == s ? heads_[a - 1] : tails_[a - 1];
}

int Diagram::left_face(int arc) const {
  const Slot t = tail(arc);
  return face_at(t.crossing, t.position);
}

int Diagram::right_face(int arc) const {
  const Slot t = tail(arc);
  return face_at(t.crossing, (t.position + 3) % 4);
}

int Diagram::goeritz_type(int crossing) const {
  return face_color(face_at(crossing, 0)) == 0 ? 1 : -1;
}

int crossing_number(const Diagram& d) { return d.crossing_number(); }

bool is_alternating(const Diagram& d) {
  for (int c = 1; c < d.crossing_number(); ++c) {
    if (d.goeritz_type(c) != d.goeritz_type(0)) return false;
  }
  return true;
}

bool is_reduced(const Diagram& d) {
  for (int c = 0; c < d.crossing_number(); ++c) {
    std::array<int, 4> f{};
    for (int k = 0; k < 4; ++k) f[k] = d.face_at(c, k);
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
  }
  return true;
}

Diagram change_crossings(const Diagram& d, std::span<const int> subset) {
  std::vector<bool> flip(d.crossing_number(), false);
  for (int c : subset) {
    if (c < 0 || c >= d.crossing_number()) {
      throw DomainError("crossing index " + std::to_string(c) + " out of range");
    }
    flip[c] = true;
  }
  std::vector<Crossing> out(d.crossings().begin(), d.crossings().end());
  for (int c = 0; c < d.crossing_number(); ++c) {
    if (!flip[c]) continue;
    Crossing& x = out[c];
    const auto a = x.arcs;
    if (x.over_in == 1) {
      x.arcs = {a[1], a[2], a[3], a[0]};
      x.over_in = 3;
    } else {
      x.arcs = {a[3], a[0], a[1], a[2]};
      x.over_in = 1;
    }
  }
  return Diagram::from_crossings(std::move(out));
}

Diagram mirror(const Diagram& d) {
  std::vector<int> all(d.crossing_number());
  std::iota(all.begin(), all.end(), 0);
  return change_crossings(d, all);
}

}  // namespace kd
