// Copyright 2026 The spexm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "spexm/canonical.hpp"
#include "spexm/charpoly.hpp"
#include "spexm/enumerate.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"
#include "spexm/pattern.hpp"
#include "spexm/search.hpp"
#include "spexm/spectral.hpp"

namespace spexm {
namespace {

Graph petersen() { return parse_graph6("IheA@GUAo"); }

void BM_CanonicalFormPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormPetersen);

void BM_CanonicalFormBook(benchmark::State& state) {
  const Graph g = build_family(families::Book{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormBook)->Arg(4)->Arg(12)->Arg(24);

void BM_SpectralRadiusBook(benchmark::State& state) {
  const Graph g = build_family(families::Book{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g));
}
BENCHMARK(BM_SpectralRadiusBook)->Arg(4)->Arg(12)->Arg(24);

void BM_CharPolyPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPolyPetersen);

void BM_CycleSearchPetersen(benchmark::State& state) {
  const Graph g = petersen();
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(has_cycle_of_length(g, t));
}
BENCHMARK(BM_CycleSearchPetersen)->DenseRange(3, 10);

void BM_EnumerateByEdges(benchmark::State& state) {
  EnumConstraints c;
  c.m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_by_edges(c, [](const Graph&, const CanonicalForm&) {}));
  }
}
BENCHMARK(BM_EnumerateByEdges)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_EnumerateSquareFree(benchmark::State& state) {
  EnumConstraints c;
  c.m = static_cast<int>(state.range(0));
  c.forbid = {patterns::Cycle{4}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_by_edges(c, [](const Graph&, const CanonicalForm&) {}));
  }
}
BENCHMARK(BM_EnumerateSquareFree)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_SearchHexagonFree(benchmark::State& state) {
  SearchConfig cfg;
  cfg.m = static_cast<int>(state.range(0));
  cfg.forbid = {patterns::Cycle{6}};
  cfg.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_rho(cfg));
}
BENCHMARK(BM_SearchHexagonFree)->Arg(15)->Arg(23)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace spexm

BENCHMARK_MAIN();
