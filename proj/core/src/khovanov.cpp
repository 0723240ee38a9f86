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

#include "kd/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <type_traits>
#include <numeric>
#include <utility>

#include "kd/bigint.hpp"
#include "kd/errors.hpp"

namespace kd {
namespace {

// Circles of every resolution: circle id of each arc, and one arc per circle.
struct Resolution {
  std::vector<std::uint8_t> circle_of_arc;
  std::vector<std::uint8_t> arc_of_circle;
  int circles = 0;
  int marked = 0;
};

Resolution resolve(const Diagram& d, std::uint32_t state) {
  const int arcs = d.num_arcs();
  std::vector<int> parent(arcs);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < d.crossing_number(); ++c) {
    const auto& a = d.crossing(c).arcs;
    if (state >> c & 1u) {
      parent[find(a[0] - 1)] = find(a[3] - 1);
      parent[find(a[1] - 1)] = find(a[2] - 1);
    } else {
      parent[find(a[0] - 1)] = find(a[1] - 1);
      parent[find(a[2] - 1)] = find(a[3] - 1);
    }
  }
  Resolution r;
  r.circle_of_arc.assign(arcs, 0);
  std::vector<int> id(arcs, -1);
  for (int a = 0; a < arcs; ++a) {
    const int root = find(a);
    if (id[root] < 0) {
      id[root] = r.circles++;
      r.arc_of_circle.push_back(static_cast<std::uint8_t>(a));
    }
    r.circle_of_arc[a] = static_cast<std::uint8_t>(id[root]);
  }
  r.marked = r.circle_of_arc[0];
  return r;
}

// Drops the marked bit from a labelling (bit set = x, the lower generator).
std::uint32_t compress(std::uint32_t mask, int marked) {
  const std::uint32_t low = mask & ((1u << marked) - 1);
  return low | ((mask >> (marked + 1)) << marked);
}

std::uint32_t expand(std::uint32_t compact, int marked) {
  const std::uint32_t low = compact & ((1u << marked) - 1);
  return low | (1u << marked) | ((compact >> marked) << (marked + 1));
}

struct Entry {
  int row;
  std::int64_t value;
};
using SparseColumn = std::vector<Entry>;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Column reduction in the style of persistence: every column is reduced
// against earlier pivots by its lowest (largest) row.
class RankReducer {
 public:
  explicit RankReducer(int rows) : pivot_(rows, -1) {}

  // Returns the pivot row, or -1 when the column reduces to zero.
  virtual int add(SparseColumn column) = 0;
  virtual ~RankReducer() = default;

 protected:
  std::vector<int> pivot_;
};

class TwoReducer final : public RankReducer {
 public:
  using RankReducer::RankReducer;

  int add(SparseColumn column) override {
    std::vector<int> col;
    col.reserve(column.size());
    for (const Entry& e : column) {
      if (e.value % 2 != 0) col.push_back(e.row);
    }
    std::vector<int> merged;
    while (!col.empty()) {
      const int low = col.back();
      const int p = pivot_[low];
      if (p < 0) {
        pivot_[low] = static_cast<int>(stored_.size());
        stored_.push_back(std::move(col));
        return low;
      }
      const auto& other = stored_[p];
      merged.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(merged));
      col.swap(merged);
    }
    return -1;
  }

 private:
  std::vector<std::vector<int>> stored_;
};

// Fraction-free elimination over the integers, i.e. rank over Q.
template <typename Int>
class RationalReducer final : public RankReducer {
 public:
  using RankReducer::RankReducer;

  int add(SparseColumn column) override {
    std::vector<std::pair<int, Int>> col;
    col.reserve(column.size());
    for (const Entry& e : column) col.emplace_back(e.row, Int(e.value));
    std::vector<std::pair<int, Int>> merged;
    while (!col.empty()) {
      const int low = col.back().first;
      const int p = pivot_[low];
      if (p < 0) {
        normalize(col);
        pivot_[low] = static_cast<int>(stored_.size());
        stored_.push_back(std::move(col));
        return low;
      }
      const auto& other = stored_[p];
      const Int a = col.back().second;
      const Int b = other.back().second;
      // col <- b * col - a * other, which cancels the low entry.
      merged.clear();
      size_t i = 0;
      size_t j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          merged.emplace_back(col[i].first, mul(b, col[i].second));
          ++i;
        } else if (i == col.size() || other[j].first < col[i].first) {
          merged.emplace_back(other[j].first, -mul(a, other[j].second));
          ++j;
        } else {
          Int v = sub(mul(b, col[i].second), mul(a, other[j].second));
          if (v != 0) merged.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col.swap(merged);
      normalize(col);
    }
    return -1;
  }

 private:
  static Int mul(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      return checked_mul(a, b);
    } else {
      return a * b;
    }
  }
  static Int sub(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      return checked_sub(a, b);
    } else {
      return a - b;
    }
  }
  static Int gcd_of(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      return std::gcd(a, b);
    } else {
      return boost::multiprecision::gcd(a, b);
    }
  }
  static void normalize(std::vector<std::pair<int, Int>>& col) {
    if (col.empty()) return;
    Int g = 0;
    for (const auto& [r, v] : col) {
      g = gcd_of(g, v < 0 ? Int(-v) : v);
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& [r, v] : col) v /= g;
    }
  }

  std::vector<std::vector<std::pair<int, Int>>> stored_;
};

std::unique_ptr<RankReducer> make_reducer(Field field, int rows, bool wide) {
  if (field == Field::kTwo) return std::make_unique<TwoReducer>(rows);
  if (wide) return std::make_unique<RationalReducer<BigInt>>(rows);
  return std::make_unique<RationalReducer<std::int64_t>>(rows);
}

struct Cube {
  int crossings = 0;
  int negative = 0;
  int positive = 0;
  std::vector<Resolution> states;
  // Block index (r, q) of every generator and its position inside the block.
  std::map<std::pair<int, int>, long> block_size;
  std::vector<std::vector<std::uint32_t>> position;  // [state][compact mask]
};

int homological(const Cube& cube, std::uint32_t s) {
  return std::popcount(s) - cube.negative;
}

int quantum(const Cube& cube, std::uint32_t s, int circles, std::uint32_t mask) {
  return circles - 2 * std::popcount(mask) + std::popcount(s) + cube.positive -
         2 * cube.negative + 1;
}

// Image of one generator under the edge map that changes crossing `i`.
void edge_image(const Cube& cube, const Diagram& d, std::uint32_t s, std::uint32_t mask, int i,
                std::int64_t sign, SparseColumn& out) {
  const std::uint32_t t = s | (1u << i);
  const Resolution& from = cube.states[s];
  const Resolution& to = cube.states[t];
  const auto& a = d.crossing(i).arcs;
  const int c1 = from.circle_of_arc[a[0] - 1];
  const int c2 = from.circle_of_arc[a[2] - 1];
  std::uint32_t base = 0;
  for (int c = 0; c < from.circles; ++c) {
    if (c == c1 || c == c2) continue;
    if (mask >> c & 1u) base |= 1u << to.circle_of_arc[from.arc_of_circle[c]];
  }
  auto emit = [&](std::uint32_t m) {
    const std::uint32_t row = cube.position[t][compress(m, to.marked)];
    out.push_back(Entry{static_cast<int>(row), sign});
  };
  if (c1 != c2) {
    const bool x1 = mask >> c1 & 1u;
    const bool x2 = mask >> c2 & 1u;
    if (x1 && x2) return;
    const int merged = to.circle_of_arc[a[0] - 1];
    emit(x1 || x2 ? base | (1u << merged) : base);
  } else {
    const int left = to.circle_of_arc[a[0] - 1];
    const int right = to.circle_of_arc[a[1] - 1];
    if (mask >> c1 & 1u) {
      emit(base | (1u << left) | (1u << right));
    } else {
      emit(base | (1u << left));
      emit(base | (1u << right));
    }
  }
}

}  // namespace

long ChainComplexSummary::total_rank() const {
  long total = 0;
  for (const auto& b : table) total += b.homology;
  return total;
}

LaurentPolynomial ChainComplexSummary::euler_characteristic() const {
  LaurentPolynomial out(Variable::kT);
  for (const auto& b : table) {
    // q^j = (-1)^j t^(j/2).
    const long sign = ((b.homological + b.quantum) % 2 == 0) ? 1 : -1;
    out.add_term(BigInt(sign * b.generators), b.quantum);
  }
  return out;
}

std::string ChainComplexSummary::to_csv() const {
  std::string out = "homological,quantum,rank\n";
  for (const auto& b : table) {
    if (b.homology == 0) continue;
    out += std::to_string(b.homological) + "," + std::to_string(b.quantum) + "," +
           std::to_string(b.homology) + "\n";
  }
  return out;
}

ChainComplexSummary reduced_khovanov(const Diagram& d, const KhovanovOptions& options) {
  const int n = d.crossing_number();
  if (n > options.max_crossings || n > 24) {
    throw ResourceError("Khovanov complex limited to " +
                        std::to_string(std::min(options.max_crossings, 24)) +
                        " crossings, diagram has " + std::to_string(n));
  }
  ChainComplexSummary summary;
  summary.field = options.field;
  if (n == 0) {
    summary.table.push_back(BidegreeRank{0, 0, 1, 0, 1});
    return summary;
  }

  Cube cube;
  cube.crossings = n;
  for (const auto& x : d.crossings()) (x.sign() > 0 ? cube.positive : cube.negative)++;
  const std::uint32_t vertices = 1u << n;
  cube.states.reserve(vertices);
  cube.position.resize(vertices);
  for (std::uint32_t s = 0; s < vertices; ++s) {
    cube.states.push_back(resolve(d, s));
    const Resolution& r = cube.states.back();
    const std::uint32_t count = 1u << (r.circles - 1);
    cube.position[s].resize(count);
    const int h = homological(cube, s);
    for (std::uint32_t c = 0; c < count; ++c) {
      const int q = quantum(cube, s, r.circles, expand(c, r.marked));
      cube.position[s][c] = static_cast<std::uint32_t>(cube.block_size[{h, q}]++);
    }
  }

  // Columns of each block, in block order.
  auto build_block = [&](int h, int q) {
    std::vector<SparseColumn> columns(static_cast<size_t>(cube.block_size[{h, q}]));
    for (std::uint32_t s = 0; s < vertices; ++s) {
      if (homological(cube, s) != h) continue;
      const Resolution& r = cube.states[s];
      for (std::uint32_t c = 0; c < cube.position[s].size(); ++c) {
        const std::uint32_t mask = expand(c, r.marked);
        if (quantum(cube, s, r.circles, mask) != q) continue;
        SparseColumn& col = columns[cube.position[s][c]];
        for (int i = 0; i < n; ++i) {
          if (s >> i & 1u) continue;
          const std::int64_t sign = std::popcount(s & ((1u << i) - 1)) % 2 ? -1 : 1;
          edge_image(cube, d, s, mask, i, sign, col);
        }
        std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
      }
    }
    return columns;
  };

  std::map<int, std::vector<int>> degrees_of_q;
  for (const auto& [key, size] : cube.block_size) degrees_of_q[key.second].push_back(key.first);

  std::map<std::pair<int, int>, long> ranks;
  for (const auto& [q, hs] : degrees_of_q) {
    std::vector<bool> cleared;  // pivot rows of the previous differential
    int previous_h = hs.front() - 2;
    for (int h : hs) {
      const auto target = cube.block_size.find({h + 1, q});
      if (h != previous_h + 1) cleared.clear();
      previous_h = h;
      if (target == cube.block_size.end()) {
        ranks[{h, q}] = 0;
        cleared.clear();
        continue;
      }
      const auto columns = build_block(h, q);
      const int rows = static_cast<int>(target->second);
      std::vector<bool> pivots(rows, false);
      long rank = 0;
      auto run = [&](bool wide) {
        auto reducer = make_reducer(options.field, rows, wide);
        std::fill(pivots.begin(), pivots.end(), false);
        rank = 0;
        for (size_t j = 0; j < columns.size(); ++j) {
          if (j < cleared.size() && cleared[j]) continue;
          const int low = reducer->add(columns[j]);
          if (low >= 0) {
            pivots[low] = true;
            ++rank;
          }
        }
      };
      try {
        run(false);
      } catch (const Overflow&) {
        run(true);
      }
      ranks[{h, q}] = rank;
      cleared = std::move(pivots);
    }
  }

  for (const auto& [key, size] : cube.block_size) {
    BidegreeRank b;
    b.homological = key.first;
    b.quantum = key.second;
    b.generators = size;
    b.boundary_rank = ranks[key];
    const auto in = ranks.find({key.first - 1, key.second});
    b.homology = size - b.boundary_rank - (in == ranks.end() ? 0 : in->second);
    summary.table.push_back(b);
  }
  return summary;
}

long reduced_kh_rank(const Diagram& d, const KhovanovOptions& options) {
  return reduced_khovanov(d, options).total_rank();
}

Real kh_density(const Diagram& d, const KhovanovOptions& options, mpfr_prec_t bits) {
  if (d.crossing_number() == 0) throw DomainError("density needs at least one crossing");
  const long rank = reduced_kh_rank(d, options);
  return Real::from_int(2, bits) * Real::pi(bits) * log(Real::from_int(rank, bits)) /
         Real::from_int(d.crossing_number(), bits);
}

const char* to_string(Field f) { return f == Field::kTwo ? "F2" : "Q"; }

Field parse_field(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "q" || t == "rationals") return Field::kRationals;
  if (t == "f2" || t == "two" || t == "z2") return Field::kTwo;
  throw DomainError("unknown coefficient field '" + text + "'");
}

}  // namespace kd
