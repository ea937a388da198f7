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

#include <string>

#include "zebrat/map_share.h"
#include "zebrat/q_learning.h"
#include "zebrat/session.h"

namespace zebrat {
namespace {

void BM_SessionStep(benchmark::State& state) {
  Session session;
  session.HandleLine(R"({"type":"reset","seed":1})");
  const std::string step = R"({"type":"step","agent":"adr","v":0.0,"phi":0.0})";
  int steps = 0;
  for (auto _ : state) {
    if (++steps == 400) {
      state.PauseTiming();
      session.HandleLine(R"({"type":"reset","seed":1})");
      steps = 0;
      state.ResumeTiming();
    }
    benchmark::DoNotOptimize(session.HandleLine(step));
  }
}
BENCHMARK(BM_SessionStep)->Unit(benchmark::kMicrosecond);

void BM_MapShareUrban(benchmark::State& state) {
  Session session;
  session.HandleLine(R"({"type":"reset","scenario":"urban","seed":0,"agents":2})");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        session.HandleLine(R"({"type":"map_share","from":"av","to":"adr"})"));
    benchmark::DoNotOptimize(
        session.HandleLine(R"({"type":"observe","agent":"adr"})"));
  }
}
BENCHMARK(BM_MapShareUrban)->Unit(benchmark::kMicrosecond);

void BM_QLearningEpisodes(benchmark::State& state) {
  for (auto _ : state) {
    AlleyTask task;
    QLearningConfig cfg;
    cfg.episodes = static_cast<int>(state.range(0));
    benchmark::DoNotOptimize(QLearningTrain(task, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_QLearningEpisodes)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zebrat

BENCHMARK_MAIN();
