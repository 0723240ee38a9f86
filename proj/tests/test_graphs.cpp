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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kd/codec.hpp"
#include "kd/errors.hpp"
#include "kd/families.hpp"
#include "kd/graphs.hpp"
#include "kd/jones.hpp"
#include "oracles.hpp"

using namespace kd;

namespace {

// ln tau(C_n x C_n) from the Laplacian spectrum of the discrete torus.
double torus_log_trees(int n) {
  double sum = -2.0 * std::log(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == 0 && k == 0) continue;
      sum += std::log(4.0 - 2.0 * std::cos(2 * std::numbers::pi * j / n) -
                      2.0 * std::cos(2 * std::numbers::pi * k / n));
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("matrix-tree count matches brute-force enumeration") {
  SUBCASE("grids") {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 4; ++n) {
        const auto g = grid_graph(m, n);
        CHECK(spanning_tree_count(g) == oracle::brute_spanning_trees(g));
      }
    }
  }
  SUBCASE("multigraphs with loops and parallel edges") {
    PlanarMultigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 2);
    g.add_edge(2, 0);
    CHECK(spanning_tree_count(g) == oracle::brute_spanning_trees(g));
    CHECK(spanning_tree_count(g) == 5);
  }
  SUBCASE("Tait graphs of random braid closures") {
    for (const auto& w : oracle::random_braids(7, 30, 4, 7)) {
      const Diagram d = from_braid(w);
      const auto g = checkerboard_graph(d);
      if (g.num_edges() > 14) continue;
      CAPTURE(format_braid(w));
      CHECK(spanning_tree_count(g) == oracle::brute_spanning_trees(g));
    }
  }
}

TEST_CASE("known spanning tree counts") {
  CHECK(spanning_tree_count(grid_graph(2, 2)) == 4);
  CHECK(spanning_tree_count(grid_graph(3, 3)) == 192);
  CHECK(spanning_tree_count(grid_graph(4, 4)) == 100352);
  CHECK_THROWS_AS(spanning_tree_count(PlanarMultigraph(2)), DomainError);
}

TEST_CASE("Tait graph tree count equals the determinant of alternating diagrams") {
  const std::vector<Diagram> diagrams = {
      parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"), parse_dt(std::vector<int>{4, 6, 8, 2}),
      weaving_knot(3, 7), celtic_grid(3, 4), parse_dt(std::vector<int>{4, 10, 12, 14, 2, 8, 6})};
  for (const auto& d : diagrams) {
    const BigInt t0 = spanning_tree_count(tait_graph(d, 0));
    const BigInt t1 = spanning_tree_count(tait_graph(d, 1));
    CHECK(t0 == t1);
    CHECK(t0 == determinant(d));
    CHECK(t0 == oracle::naive_determinant(d));
  }
}

TEST_CASE("projection graph is 4-regular") {
  const Diagram d = celtic_grid(3, 3);
  const auto g = projection_graph(d);
  CHECK(g.num_vertices() == d.crossing_number());
  CHECK(g.num_edges() == 2 * d.crossing_number());
  for (int deg : g.degrees()) CHECK(deg == 4);
  CHECK(g.is_connected());
}

TEST_CASE("identifying vertices") {
  PlanarMultigraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  const auto cycle = identify_vertices(path, 0, 3);
  CHECK(cycle.num_vertices() == 3);
  CHECK(spanning_tree_count(cycle) == 3);
  CHECK_THROWS_AS(identify_vertices(path, 0, 9), DomainError);
}

TEST_CASE("edge list round trip") {
  const auto g = grid_graph(2, 3);
  const auto again = PlanarMultigraph::from_edge_list(g.to_edge_list());
  CHECK(again.num_vertices() == g.num_vertices());
  CHECK(again.to_edge_list() == g.to_edge_list());
}

TEST_CASE("Folner ratio of square blocks") {
  for (int n = 2; n <= 30; ++n) {
    CHECK(folner_ratio(GridSubgraph::block(n, n)) == Rational(4 * n - 4, n * n));
  }
  CHECK_THROWS_AS(GridSubgraph({}), DomainError);
}

TEST_CASE("celtic lattice is a connected grid subgraph") {
  for (int n = 3; n <= 8; ++n) {
    const GridSubgraph h(celtic_lattice(n, n));
    CHECK(h.size() == 2 * n * (n - 1));
    CHECK(h.is_connected());
    CHECK(h.contains_block(n - 1, n - 1));
  }
}

TEST_CASE("tree entropy") {
  SUBCASE("torus grids agree with the spectral product") {
    std::vector<PlanarMultigraph> family;
    for (int n = 3; n <= 8; ++n) family.push_back(torus_grid_graph(n));
    const auto seq = tree_entropy_sequence(family);
    for (size_t i = 0; i < seq.size(); ++i) {
      const int n = static_cast<int>(i) + 3;
      CHECK(seq[i].vertices == n * n);
      CHECK(seq[i].entropy.to_double() == doctest::Approx(torus_log_trees(n) / (n * n)).epsilon(1e-12));
    }
  }
  SUBCASE("free-boundary grids increase toward 4G/pi") {
    std::vector<PlanarMultigraph> family;
    for (int n = 2; n <= 10; ++n) family.push_back(grid_graph(n, n));
    const auto seq = tree_entropy_sequence(family);
    const double limit = 4 * 0.915965594177219015 / std::numbers::pi;
    for (size_t i = 1; i < seq.size(); ++i) CHECK(seq[i - 1].entropy < seq[i].entropy);
    CHECK(seq.back().entropy.to_double() < limit);
  }
}
