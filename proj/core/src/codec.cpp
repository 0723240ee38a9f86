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

#include "kd/codec.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "kd/errors.hpp"

namespace kd {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<size_t>(ptr - begin);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

using PlanarGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

// Rim roles of the crossing gadget, in rim-cycle order.
enum Role { kInOdd = 0, kInEven = 1, kOutOdd = 2, kOutEven = 3 };

}  // namespace

Diagram parse_pd(std::string_view text) {
  Cursor in(text);
  std::vector<std::array<int, 4>> tuples;
  while (!in.done()) {
    in.expect('X');
    in.expect('(');
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) in.expect(',');
      t[i] = in.integer();
    }
    in.expect(')');
    tuples.push_back(t);
  }
  return Diagram::from_pd(tuples);
}

std::string format_pd(const Diagram& d) {
  std::string out;
  for (const auto& x : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x.arcs[0]) + "," + std::to_string(x.arcs[1]) + "," +
           std::to_string(x.arcs[2]) + "," + std::to_string(x.arcs[3]) + ")";
  }
  return out;
}

Diagram parse_dt(std::span<const int> code) {
  const int n = static_cast<int>(code.size());
  if (n == 0) return Diagram();
  std::set<int> seen;
  for (int e : code) {
    if (e % 2 != 0) throw ValidationError("DT entries must be even, got " + std::to_string(e));
    const int m = std::abs(e);
    if (m < 2 || m > 2 * n) throw ValidationError("DT entry out of range: " + std::to_string(e));
    if (!seen.insert(m).second) throw ValidationError("repeated DT entry " + std::to_string(m));
  }

  // visit v (1-based) -> (crossing, is odd pass)
  std::vector<int> visit_crossing(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    visit_crossing[2 * i + 1] = i;
    visit_crossing[std::abs(code[i])] = i;
  }
  auto rim = [](int crossing, int role) { return 5 * crossing + 1 + role; };

  PlanarGraph g(5 * n + 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < 4; ++r) {
      boost::add_edge(5 * i, rim(i, r), g);
      boost::add_edge(rim(i, r), rim(i, (r + 1) % 4), g);
    }
  }
  for (int v = 1; v <= 2 * n; ++v) {
    const int w = v == 2 * n ? 1 : v + 1;
    const int mid = 5 * n + v - 1;
    boost::add_edge(rim(visit_crossing[v], v % 2 ? kOutOdd : kOutEven), mid, g);
    boost::add_edge(mid, rim(visit_crossing[w], w % 2 ? kInOdd : kInEven), g);
  }
  int index = 0;
  boost::graph_traits<PlanarGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(g); ei != ei_end; ++ei) {
    boost::put(boost::edge_index, g, *ei, index++);
  }
  using Edge = boost::graph_traits<PlanarGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(boost::num_vertices(g));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
          embedding.begin(), boost::get(boost::vertex_index, g)));
  if (!planar) throw ValidationError("DT code is not realizable by a planar diagram");

  std::vector<std::array<int, 4>> tuples(n);
  for (int i = 0; i < n; ++i) {
    const int odd = 2 * i + 1;
    const int even = std::abs(code[i]);
    std::array<int, 4> arc_of_role{};
    arc_of_role[kInOdd] = odd == 1 ? 2 * n : odd - 1;
    arc_of_role[kOutOdd] = odd;
    arc_of_role[kInEven] = even - 1;
    arc_of_role[kOutEven] = even;

    std::array<int, 4> roles{};
    int k = 0;
    for (const Edge& e : embedding[5 * i]) {
      const int s = static_cast<int>(boost::source(e, g));
      const int t = static_cast<int>(boost::target(e, g));
      roles[k++] = (s == 5 * i ? t : s) - 5 * i - 1;
    }
    const int under_in = code[i] > 0 ? kInOdd : kInEven;
    int start = 0;
    while (roles[start] != under_in) ++start;
    for (int j = 0; j < 4; ++j) tuples[i][j] = arc_of_role[roles[(start + j) % 4]];
  }
  return Diagram::from_pd(tuples);
}

std::vector<int> parse_dt_text(std::string_view text) {
  std::string cleaned(text);
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  }
  Cursor in(cleaned);
  std::vector<int> code;
  while (!in.done()) code.push_back(in.integer());
  return code;
}

std::vector<int> to_dt(const Diagram& d) {
  if (d.num_components() != 1) throw DomainError("DT codes describe knots only");
  const int n = d.crossing_number();
  if (n == 0) return {};
  std::vector<int> odd_visit(n, 0);
  std::vector<int> even_visit(n, 0);
  std::vector<bool> even_over(n, false);
  Slot s = d.tail(1);
  for (int v = 1; v <= 2 * n; ++v) {
    const bool under = s.position % 2 == 0;
    if (v % 2) {
      odd_visit[s.crossing] = v;
    } else {
      even_visit[s.crossing] = v;
      even_over[s.crossing] = !under;
    }
    const Slot h = d.other_end(s);
    s = Slot{h.crossing, (h.position + 2) % 4};
  }
  std::vector<int> code(n);
  for (int c = 0; c < n; ++c) {
    if (odd_visit[c] == 0 || even_visit[c] == 0) {
      throw DomainError("crossing visited twice with equal parity");
    }
    code[(odd_visit[c] - 1) / 2] = even_over[c] ? even_visit[c] : -even_visit[c];
  }
  return code;
}

std::string format_dt(std::span<const int> code) {
  std::string out;
  for (int e : code) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw SyntaxError("braid must start with 'n:'");
  BraidWord w;
  Cursor head(text.substr(0, colon));
  w.strands = head.integer();
  if (!head.done()) head.fail("unexpected text before ':'");
  if (w.strands < 1) throw SyntaxError("strand count must be positive");
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::string token;
  while (body >> token) {
    std::string_view t = token;
    int sign = 1;
    if (!t.empty() && t.front() == '-') {
      sign = -1;
      t.remove_prefix(1);
    }
    if (!t.empty() && (t.front() == 's' || t.front() == 'S')) t.remove_prefix(1);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), index);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
      throw SyntaxError("bad braid letter '" + token + "'");
    }
    w.letters.push_back(sign * index);
  }
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::string out = std::to_string(w.strands) + ":";
  for (int l : w.letters) out += (l < 0 ? " -s" : " s") + std::to_string(std::abs(l));
  return out;
}

Diagram from_braid(const BraidWord& w) {
  if (w.strands < 1) throw ValidationError("braid needs at least one strand");
  std::vector<bool> touched(w.strands, false);
  for (int l : w.letters) {
    const int i = std::abs(l);
    if (i < 1 || i >= w.strands) {
      throw ValidationError("braid letter " + std::to_string(l) + " out of range for " +
                            std::to_string(w.strands) + " strands");
    }
    touched[i - 1] = touched[i] = true;
  }
  if (w.letters.empty()) {
    if (w.strands == 1) return Diagram();
    throw ValidationError("closure of the trivial braid is split");
  }
  for (bool t : touched) {
    if (!t) throw ValidationError("braid closure is split (idle strand)");
  }
  std::vector<int> current(w.strands);
  for (int i = 0; i < w.strands; ++i) current[i] = i + 1;
  int next_label = w.strands + 1;
  std::vector<std::array<int, 4>> tuples;
  for (int l : w.letters) {
    const int i = std::abs(l) - 1;
    const int a = current[i];
    const int b = current[i + 1];
    const int c = next_label++;
    const int d = next_label++;
    if (l > 0) {
      tuples.push_back({b, d, c, a});
    } else {
      tuples.push_back({a, b, d, c});
    }
    current[i] = c;
    current[i + 1] = d;
  }
  // Close up: the final arcs continue as the initial ones.
  std::vector<int> closing(next_label, 0);
  for (int i = 0; i < w.strands; ++i) closing[current[i]] = i + 1;
  for (auto& t : tuples) {
    for (int& a : t) {
      if (closing[a] != 0) a = closing[a];
    }
  }
  return Diagram::from_pd(tuples);
}

}  // namespace kd
