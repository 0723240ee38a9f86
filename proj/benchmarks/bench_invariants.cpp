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

#include <benchmark/benchmark.h>

#include "kd/codec.hpp"
#include "kd/families.hpp"
#include "kd/graphs.hpp"
#include "kd/jones.hpp"
#include "kd/kashaev.hpp"
#include "kd/khovanov.hpp"

namespace {

void BM_KauffmanBracketWeaving(benchmark::State& state) {
  const kd::Diagram d = kd::weaving_knot(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kd::kauffman_bracket(d));
  state.SetLabel(std::to_string(d.crossing_number()) + " crossings");
}
BENCHMARK(BM_KauffmanBracketWeaving)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SpanningTreesGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const kd::PlanarMultigraph g = kd::grid_graph(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kd::spanning_tree_count(g));
}
BENCHMARK(BM_SpanningTreesGrid)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

void BM_ReducedKhovanovWeaving(benchmark::State& state) {
  const kd::Diagram d = kd::weaving_knot(3, static_cast<int>(state.range(0)));
  const kd::KhovanovOptions options{kd::Field::kTwo, 16};
  for (auto _ : state) benchmark::DoNotOptimize(kd::reduced_khovanov(d, options));
  state.SetLabel(std::to_string(d.crossing_number()) + " crossings");
}
BENCHMARK(BM_ReducedKhovanovWeaving)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_KashaevFigureEight(benchmark::State& state) {
  const kd::Diagram d = kd::parse_dt(std::vector<int>{4, 6, 8, 2});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kd::kashaev_invariant(d, n));
}
BENCHMARK(BM_KashaevFigureEight)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
