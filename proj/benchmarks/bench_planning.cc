// Copyright 2026 The ZebraT Simulator Authors
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

#include "zebrat/dwa.h"
#include "zebrat/grid_search.h"
#include "zebrat/navigation.h"
#include "zebrat/scenarios.h"

namespace zebrat {
namespace {

void BM_Plan(benchmark::State& state) {
  const Scenario scenario = BuildUrban({});
  const OccupancyGrid plan = Inflate(scenario.grid, Footprint{});
  const CellIndex start = plan.CellAt({scenario.start.x, scenario.start.y});
  const CellIndex goal = plan.CellAt({scenario.goal.x, scenario.goal.y});
  const auto kind = static_cast<PlannerKind>(state.range(0));
  std::size_t expansions = 0;
  for (auto _ : state) {
    const SearchResult r = PlanPath(kind, plan, start, goal);
    expansions = r.expansions;
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(std::string(PlannerKindName(kind)));
  state.counters["expansions"] = static_cast<double>(expansions);
}
BENCHMARK(BM_Plan)
    ->Arg(static_cast<int>(PlannerKind::kDijkstra))
    ->Arg(static_cast<int>(PlannerKind::kAStar))
    ->Unit(benchmark::kMillisecond);

void BM_Inflate(benchmark::State& state) {
  const Scenario scenario = BuildUrban({});
  for (auto _ : state) {
    benchmark::DoNotOptimize(Inflate(scenario.grid, Footprint{}));
  }
}
BENCHMARK(BM_Inflate)->Unit(benchmark::kMillisecond);

void BM_DwaStep(benchmark::State& state) {
  const Scenario scenario = BuildUrban({});
  const DynamicWindowPlanner planner(scenario.grid, Footprint{});
  const KinematicState pose{1.5, 1.5, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(planner.Step(pose, {0.5, 0.0}, {3.0, 3.0}));
  }
}
BENCHMARK(BM_DwaStep)->Unit(benchmark::kMicrosecond);

void BM_NavigateUrban(benchmark::State& state) {
  const Scenario scenario = BuildUrban({});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Navigate(scenario.grid, Footprint{}, {scenario.start.x, scenario.start.y},
                 std::nullopt, {scenario.goal.x, scenario.goal.y}));
  }
}
BENCHMARK(BM_NavigateUrban)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
}  // namespace zebrat

BENCHMARK_MAIN();
