// Copyright 2026 The Covering Authors
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

#include <numeric>
#include <vector>

#include "cli/generators.h"
#include "covering/epsnet.h"
#include "covering/exact.h"
#include "covering/flowcheck.h"
#include "covering/hitting.h"
#include "covering/rng.h"
#include "covering/wolsey.h"

namespace covering {
namespace {

SetCoverInstance Instance(int n) {
  Rng rng(1);
  tools::CoverParams params;
  params.n = n;
  params.m = n / 2;
  params.density = 0.1;
  params.cap_min = 1;
  params.cap_max = 8;
  return tools::RandomFeasibleCover(params, rng);
}

void BM_MaxCoverValue(benchmark::State& state) {
  const SetCoverInstance inst = Instance(static_cast<int>(state.range(0)));
  std::vector<SetId> all(inst.num_sets());
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(MaxCoverValue(inst, all).value);
}
BENCHMARK(BM_MaxCoverValue)->Arg(100)->Arg(400)->Arg(1600);

void BM_GreedyCapacitated(benchmark::State& state) {
  const SetCoverInstance inst = Instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveCapacitated(inst).total_cost);
}
BENCHMARK(BM_GreedyCapacitated)->Arg(100)->Arg(400);

void BM_BuildEpsNet(benchmark::State& state) {
  Rng rng(2);
  const PointSet points = tools::UniformPoints(static_cast<int>(state.range(0)), rng);
  NetConfig config;
  config.eps = 1.0 / static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(BuildEpsNet(points, config).net.size());
}
BENCHMARK(BM_BuildEpsNet)
    ->Args({10000, 16})
    ->Args({100000, 16})
    ->Args({100000, 128})
    ->Unit(benchmark::kMillisecond);

void BM_VerifyEpsNet(benchmark::State& state) {
  Rng rng(3);
  const PointSet points = tools::UniformPoints(static_cast<int>(state.range(0)), rng);
  NetConfig config;
  config.eps = 1.0 / 16;
  const std::vector<int> net = BuildEpsNet(points, config).net;
  for (auto _ : state) benchmark::DoNotOptimize(VerifyEpsNet(points, config.eps, net).ok);
}
BENCHMARK(BM_VerifyEpsNet)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_SolveHitting(benchmark::State& state) {
  Rng rng(4);
  const int n = static_cast<int>(state.range(0));
  const PointSet points = tools::UniformPoints(n, rng);
  const RectSet rects = tools::StabbedRects(points, 2 * n, 0.2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveHitting(points, rects, NetConfig{}).points.size());
  }
}
BENCHMARK(BM_SolveHitting)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace covering

BENCHMARK_MAIN();
