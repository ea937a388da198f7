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

#include "zebrat/kinematics.h"
#include "zebrat/lidar.h"
#include "zebrat/robot_model.h"
#include "zebrat/scenarios.h"
#include "zebrat/urdf.h"

namespace zebrat {
namespace {

void BM_Rk4Step(benchmark::State& state) {
  KinematicState s;
  for (auto _ : state) {
    s = Step(s, {1.0, 0.3}, 0.01, 0.53);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_AdvanceControlPeriod(benchmark::State& state) {
  const KinematicParams params;
  KinematicState s;
  for (auto _ : state) {
    s = Advance(s, {1.0, 0.3}, 0.1, params);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_AdvanceControlPeriod);

void BM_RaycastScan(benchmark::State& state) {
  const Scenario scenario = BuildUrban({});
  ScanConfig cfg;
  cfg.num_beams = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RaycastScan(scenario.grid, scenario.start, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RaycastScan)->Arg(36)->Arg(360);

void BM_UrdfEmitParse(benchmark::State& state) {
  ModelOptions opts;
  opts.include_sensors = true;
  const RobotModel model =
      BuildCanonicalModel(Dimensions{}, DefaultLinkMasses(), opts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ParseUrdf(EmitUrdf(model)));
  }
}
BENCHMARK(BM_UrdfEmitParse);

}  // namespace
}  // namespace zebrat

BENCHMARK_MAIN();
