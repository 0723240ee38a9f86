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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "kd/errors.hpp"
#include "kd/jones.hpp"

namespace kd {
namespace {

using Wide = __int128;

// Dense Laurent polynomial in A: coeff[i] multiplies A^(lo + i).
struct DensePoly {
  int lo = 0;
  std::vector<Wide> coeff;

  void add(const DensePoly& p, int shift, Wide scale) {
    if (p.coeff.empty()) return;
    const int plo = p.lo + shift;
    const int phi = plo + static_cast<int>(p.coeff.size());
    if (coeff.empty()) {
      lo = plo;
      coeff.assign(p.coeff.size(), 0);
    }
    const int hi = lo + static_cast<int>(coeff.size());
    if (plo < lo) {
      coeff.insert(coeff.begin(), static_cast<size_t>(lo - plo), 0);
      lo = plo;
    }
    if (phi > hi) coeff.resize(static_cast<size_t>(phi - lo), 0);
    for (size_t i = 0; i < p.coeff.size(); ++i) coeff[plo - lo + i] += scale * p.coeff[i];
  }
};

// (-A^2 - A^-2)^k for k = 0..2 as sparse (exponent, coefficient) lists.
const std::array<std::vector<std::pair<int, Wide>>, 3> kLoopPowers = {{
    {{0, 1}},
    {{-2, -1}, {2, -1}},
    {{-4, 1}, {0, 2}, {4, 1}},
}};

// Unprocessed crossing whose arcs close the most open ends.
std::vector<int> greedy_order(const Diagram& d) {
  const int n = d.crossing_number();
  std::vector<int> order;
  std::vector<bool> done(n, false);
  std::vector<int> ends_seen(d.num_arcs() + 1, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int a : d.crossing(c).arcs) score += ends_seen[a] == 1 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (int a : d.crossing(best).arcs) ++ends_seen[a];
  }
  return order;
}

// Smoothing pairs of tuple positions and the exponent of A they carry.
struct Smoothing {
  std::array<std::pair<int, int>, 2> pairs;
  int a_power;
};
constexpr std::array<Smoothing, 2> kSmoothings = {{
    {{{{0, 1}, {2, 3}}}, 1},
    {{{{0, 3}, {1, 2}}}, -1},
}};

// Joins the existing pairing with one smoothing of a crossing: returns the
// pairing of the new frontier and the number of closed loops.
class Splicer {
 public:
  Splicer(const std::vector<int>& old_frontier, const std::vector<int>& new_frontier,
          const std::array<int, 4>& arcs)
      : old_size_(static_cast<int>(old_frontier.size())) {
    // Nodes: old frontier arcs first, then arcs first seen at this crossing.
    for (int a : old_frontier) node_of_.emplace(a, static_cast<int>(node_of_.size()));
    for (int a : arcs) node_of_.emplace(a, static_cast<int>(node_of_.size()));
    terminal_.assign(node_of_.size(), -1);
    for (int i = 0; i < static_cast<int>(new_frontier.size()); ++i) {
      terminal_[node_of_.at(new_frontier[i])] = i;
    }
    for (int p = 0; p < 4; ++p) position_node_[p] = node_of_.at(arcs[p]);
    new_size_ = static_cast<int>(new_frontier.size());
  }

  int splice(const std::string& pairing, const Smoothing& s, std::string& out) {
    const int nodes = static_cast<int>(node_of_.size());
    edges_.clear();
    incident_.assign(nodes, {});
    for (int i = 0; i < old_size_; ++i) {
      const int j = static_cast<unsigned char>(pairing[i]);
      if (i < j) link(i, j);
    }
    for (const auto& [p, q] : s.pairs) link(position_node_[p], position_node_[q]);
    used_.assign(edges_.size(), false);
    out.assign(static_cast<size_t>(new_size_), '\0');
    for (int v = 0; v < nodes; ++v) {
      if (terminal_[v] < 0 || incident_[v].size() != 1 || used_[incident_[v][0]]) continue;
      const int end = walk(v, incident_[v][0]);
      out[terminal_[v]] = static_cast<char>(terminal_[end]);
      out[terminal_[end]] = static_cast<char>(terminal_[v]);
    }
    int loops = 0;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      if (used_[e]) continue;
      walk(edges_[e].first, e);
      ++loops;
    }
    return loops;
  }

 private:
  void link(int u, int v) {
    const int e = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }

  // Follows edge `e` away from `v` until a terminal or a used edge.
  int walk(int v, int e) {
    while (true) {
      used_[e] = true;
      const int w = edges_[e].first == v ? edges_[e].second : edges_[e].first;
      if (terminal_[w] >= 0) return w;
      const auto& inc = incident_[w];
      const int next = inc[0] == e ? inc[1] : inc[0];
      if (used_[next]) return w;
      v = w;
      e = next;
    }
  }

  int old_size_;
  int new_size_ = 0;
  std::unordered_map<int, int> node_of_;
  std::vector<int> terminal_;
  std::array<int, 4> position_node_{};
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> used_;
};

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d, const BracketOptions& options) {
  const int n = d.crossing_number();
  if (n == 0) return LaurentPolynomial::monomial(1, 0, Variable::kA);
  if (n > options.max_crossings || n > 62) {
    throw ResourceError("bracket limited to " + std::to_string(std::min(options.max_crossings, 62)) +
                        " crossings, diagram has " + std::to_string(n));
  }

  std::vector<int> frontier;
  std::unordered_map<std::string, DensePoly> states;
  states[std::string()] = DensePoly{0, {1}};
  std::vector<int> ends_seen(d.num_arcs() + 1, 0);

  for (int c : greedy_order(d)) {
    const auto& arcs = d.crossing(c).arcs;
    for (int a : arcs) ++ends_seen[a];
    std::vector<int> next_frontier;
    for (int a : frontier) {
      if (ends_seen[a] == 1) next_frontier.push_back(a);
    }
    for (int a : arcs) {
      if (ends_seen[a] == 1 &&
          std::find(next_frontier.begin(), next_frontier.end(), a) == next_frontier.end()) {
        next_frontier.push_back(a);
      }
    }
    std::sort(next_frontier.begin(), next_frontier.end());

    Splicer splicer(frontier, next_frontier, arcs);
    std::unordered_map<std::string, DensePoly> next_states;
    std::string key;
    for (const auto& [pairing, poly] : states) {
      for (const Smoothing& s : kSmoothings) {
        const int loops = splicer.splice(pairing, s, key);
        DensePoly& target = next_states[key];
        for (const auto& [e, k] : kLoopPowers.at(loops)) target.add(poly, s.a_power + e, k);
      }
    }
    states = std::move(next_states);
    frontier = std::move(next_frontier);
  }

  // Every state closed at least one loop too many: divide by -A^2 - A^-2.
  const DensePoly& total = states.at(std::string());
  LaurentPolynomial raised(Variable::kA);  // -A^2 * total = (A^4 + 1) * bracket
  for (size_t i = 0; i < total.coeff.size(); ++i) {
    const Wide w = -total.coeff[i];
    if (w == 0) continue;
    const bool negative = w < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-w)
                                     : static_cast<unsigned __int128>(w);
    BigInt big = static_cast<unsigned long long>(mag >> 64);
    big <<= 64;
    big += static_cast<unsigned long long>(mag & 0xFFFFFFFFFFFFFFFFULL);
    raised.add_term(negative ? BigInt(-big) : big, total.lo + static_cast<int>(i) + 2);
  }
  LaurentPolynomial bracket(Variable::kA);
  std::map<int, BigInt> rest(raised.terms().begin(), raised.terms().end());
  const int floor = raised.min_exponent() + 4;
  while (!rest.empty() && rest.rbegin()->first >= floor) {
    const auto top = std::prev(rest.end());
    const int e = top->first;
    const BigInt coeff = top->second;
    rest.erase(top);
    bracket.add_term(coeff, e - 4);
    BigInt& below = rest[e - 4];
    below -= coeff;
    if (below == 0) rest.erase(e - 4);
  }
  if (!rest.empty()) throw std::logic_error("state sum not divisible by the loop value");
  return bracket;
}

}  // namespace kd
