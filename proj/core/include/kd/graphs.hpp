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

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kd/bigint.hpp"
#include "kd/diagram.hpp"
#include "kd/real.hpp"

namespace kd {

// Undirected multigraph; parallel edges and loops allowed, edges optionally signed.
class PlanarMultigraph {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    int sign = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  PlanarMultigraph() = default;
  explicit PlanarMultigraph(int vertices) : vertices_(vertices) {}

  int add_edge(int u, int v, int sign = 0);
  int num_vertices() const { return vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<int> degrees() const;
  bool is_connected() const;

  // One "u v" pair per line.
  std::string to_edge_list() const;
  // Inverse of to_edge_list; vertex count is one more than the largest id.
  static PlanarMultigraph from_edge_list(std::string_view text);

 private:
  int vertices_ = 0;
  std::vector<Edge> edges_;
};

// Faces of colour `colour` as vertices, one edge per crossing, edge sign the
// Goeritz type. Defined for every diagram.
PlanarMultigraph checkerboard_graph(const Diagram& d, int colour = 0);
// Checkerboard graph of an alternating diagram. Throws DomainError otherwise.
PlanarMultigraph tait_graph(const Diagram& d, int colour = 0);
// Crossings as vertices, arcs as edges.
PlanarMultigraph projection_graph(const Diagram& d);

// Matrix-tree count with loops removed. Throws DomainError when disconnected.
BigInt spanning_tree_count(const PlanarMultigraph& g);

// Merges vertex b into vertex a.
PlanarMultigraph identify_vertices(const PlanarMultigraph& g, int a, int b);

PlanarMultigraph grid_graph(int m, int n);
// n x n grid with periodic boundary in both directions (n >= 3).
PlanarMultigraph torus_grid_graph(int n);

// Finite vertex set of the square lattice Z^2.
class GridSubgraph {
 public:
  using Point = std::pair<long, long>;

  // Sorts and deduplicates. Throws DomainError when empty.
  explicit GridSubgraph(std::vector<Point> points);
  // The m x n block [0,m) x [0,n).
  static GridSubgraph block(int m, int n);

  std::span<const Point> points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool contains(const Point& p) const;
  bool is_connected() const;
  // Whether some translate of the a x b block lies inside.
  bool contains_block(int a, int b) const;
  // Induced subgraph of the lattice, vertices in points() order.
  PlanarMultigraph induced_graph() const;

 private:
  std::vector<Point> points_;
};

// Number of vertices with a lattice neighbour outside H, over |H|.
Rational folner_ratio(const GridSubgraph& h);

// Crossings of celtic_grid(m, n) as lattice points, in crossing order.
// Interior arcs join lattice neighbours; arcs turning along the border
// join crossings two steps apart.
std::vector<GridSubgraph::Point> celtic_lattice(int m, int n);

struct EntropyPoint {
  int vertices = 0;
  BigInt trees;
  Real entropy;  // ln(trees) / vertices
};

std::vector<EntropyPoint> tree_entropy_sequence(std::span<const PlanarMultigraph> family,
                                                mpfr_prec_t bits = Real::kDefaultBits);

}  // namespace kd
