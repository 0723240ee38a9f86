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

#include "kd/graphs.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "kd/errors.hpp"
#include "kd/linalg.hpp"

namespace kd {

int PlanarMultigraph::add_edge(int u, int v, int sign) {
  if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
    throw DomainError("edge endpoint out of range");
  }
  edges_.push_back(Edge{u, v, sign});
  return num_edges() - 1;
}

std::vector<int> PlanarMultigraph::degrees() const {
  std::vector<int> deg(vertices_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool PlanarMultigraph::is_connected() const {
  if (vertices_ <= 1) return true;
  std::vector<std::vector<int>> adj(vertices_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(vertices_, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == vertices_;
}

std::string PlanarMultigraph::to_edge_list() const {
  std::string out;
  for (const Edge& e : edges_) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

PlanarMultigraph PlanarMultigraph::from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<int, int>> pairs;
  int u = 0;
  int v = 0;
  int top = -1;
  while (in >> u >> v) {
    if (u < 0 || v < 0) throw SyntaxError("negative vertex id in edge list");
    pairs.emplace_back(u, v);
    top = std::max({top, u, v});
  }
  if (!in.eof()) throw SyntaxError("edge list must contain integer pairs");
  PlanarMultigraph g(top + 1);
  for (const auto& [a, b] : pairs) g.add_edge(a, b);
  return g;
}

PlanarMultigraph checkerboard_graph(const Diagram& d, int colour) {
  if (colour != 0 && colour != 1) throw DomainError("colour must be 0 or 1");
  std::vector<int> vertex_of(d.num_faces(), -1);
  int count = 0;
  for (int f = 0; f < d.num_faces(); ++f) {
    if (d.face_color(f) == colour) vertex_of[f] = count++;
  }
  PlanarMultigraph g(count);
  for (int c = 0; c < d.crossing_number(); ++c) {
    const int type = d.goeritz_type(c);
    // Corners 0 and 2 carry colour 0 exactly when the type is +1.
    const int first = (type == 1) == (colour == 0) ? 0 : 1;
    g.add_edge(vertex_of[d.face_at(c, first)], vertex_of[d.face_at(c, first + 2)],
               colour == 0 ? type : -type);
  }
  return g;
}

PlanarMultigraph tait_graph(const Diagram& d, int colour) {
  if (!is_alternating(d)) throw DomainError("Tait graph needs an alternating diagram");
  return checkerboard_graph(d, colour);
}

PlanarMultigraph projection_graph(const Diagram& d) {
  PlanarMultigraph g(d.crossing_number());
  for (int a = 1; a <= d.num_arcs(); ++a) g.add_edge(d.tail(a).crossing, d.head(a).crossing);
  return g;
}

BigInt spanning_tree_count(const PlanarMultigraph& g) {
  if (!g.is_connected()) throw DomainError("spanning trees need a connected graph");
  const int n = g.num_vertices();
  if (n <= 1) return 1;
  IntMatrix lap(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    lap(e.u, e.u) += 1;
    lap(e.v, e.v) += 1;
    lap(e.u, e.v) -= 1;
    lap(e.v, e.u) -= 1;
  }
  return bareiss_determinant(lap.minor(n - 1));
}

PlanarMultigraph identify_vertices(const PlanarMultigraph& g, int a, int b) {
  if (a == b) return g;
  if (a < 0 || b < 0 || a >= g.num_vertices() || b >= g.num_vertices()) {
    throw DomainError("vertex out of range");
  }
  auto relabel = [&](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  PlanarMultigraph out(g.num_vertices() - 1);
  for (const auto& e : g.edges()) out.add_edge(relabel(e.u), relabel(e.v), e.sign);
  return out;
}

PlanarMultigraph grid_graph(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("grid dimensions must be positive");
  PlanarMultigraph g(m * n);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x + 1 < m) g.add_edge(x * n + y, (x + 1) * n + y);
      if (y + 1 < n) g.add_edge(x * n + y, x * n + y + 1);
    }
  }
  return g;
}

PlanarMultigraph torus_grid_graph(int n) {
  if (n < 3) throw DomainError("torus grid needs n >= 3");
  PlanarMultigraph g(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      g.add_edge(x * n + y, ((x + 1) % n) * n + y);
      g.add_edge(x * n + y, x * n + (y + 1) % n);
    }
  }
  return g;
}

GridSubgraph::GridSubgraph(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("grid subgraph must be nonempty");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

GridSubgraph GridSubgraph::block(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("block dimensions must be positive");
  std::vector<Point> pts;
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < n; ++y) pts.emplace_back(x, y);
  }
  return GridSubgraph(std::move(pts));
}

bool GridSubgraph::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PlanarMultigraph GridSubgraph::induced_graph() const {
  PlanarMultigraph g(size());
  for (int i = 0; i < size(); ++i) {
    const auto [x, y] = points_[i];
    for (const Point& q : {Point{x + 1, y}, Point{x, y + 1}}) {
      const auto it = std::lower_bound(points_.begin(), points_.end(), q);
      if (it != points_.end() && *it == q) {
        g.add_edge(i, static_cast<int>(it - points_.begin()));
      }
    }
  }
  return g;
}

bool GridSubgraph::is_connected() const { return induced_graph().is_connected(); }

bool GridSubgraph::contains_block(int a, int b) const {
  for (const auto& [x0, y0] : points_) {
    bool all = true;
    for (long dx = 0; all && dx < a; ++dx) {
      for (long dy = 0; all && dy < b; ++dy) all = contains({x0 + dx, y0 + dy});
    }
    if (all) return true;
  }
  return false;
}

Rational folner_ratio(const GridSubgraph& h) {
  long boundary = 0;
  for (const auto& [x, y] : h.points()) {
    if (!h.contains({x + 1, y}) || !h.contains({x - 1, y}) || !h.contains({x, y + 1}) ||
        !h.contains({x, y - 1})) {
      ++boundary;
    }
  }
  return Rational(boundary, h.size());
}

std::vector<GridSubgraph::Point> celtic_lattice(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("celtic grid needs m, n >= 2");
  // Edge midpoints in doubled coordinates, rotated by 45 degrees.
  auto rotate = [](long X, long Y) { return GridSubgraph::Point{(X + Y - 1) / 2, (X - Y + 1) / 2}; };
  std::vector<GridSubgraph::Point> pts;
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < n; ++y) {
      if (x + 1 < m) pts.push_back(rotate(2 * x + 1, 2 * y));
      if (y + 1 < n) pts.push_back(rotate(2 * x, 2 * y + 1));
    }
  }
  return pts;
}

std::vector<EntropyPoint> tree_entropy_sequence(std::span<const PlanarMultigraph> family,
                                                mpfr_prec_t bits) {
  std::vector<EntropyPoint> out;
  out.reserve(family.size());
  for (const auto& g : family) {
    EntropyPoint p;
    p.vertices = g.num_vertices();
    p.trees = spanning_tree_count(g);
    p.entropy = log(Real::from_bigint(p.trees, bits)) / Real::from_int(p.vertices, bits);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace kd
