// Copyright 2026 The uavfl Authors.
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

#include <random>

#include "uavfl/coalition.hpp"
#include "uavfl/experiments.hpp"
#include "uavfl/oracle.hpp"

namespace {

using namespace uavfl;

ScenarioConfig MakeScenario(int uavs, int cells)
{
  std::mt19937_64 rng(7);
  ScenarioConfig  s;
  s.radio.global_model_size      = 7.5 * kBitsPerMegabyte;
  s.radio.cell_aggregate_size    = 2.5 * kBitsPerMegabyte;
  s.radio.worker_update_size     = 0.5 * kBitsPerMegabyte;
  s.radio.worker_bandwidth       = 1.0e5;
  s.radio.worker_tx_power        = 5.0e-3;
  s.radio.worker_channel_gain_db = 5.0;
  s.game.required_iterations     = 20;
  for (int k = 1; k <= cells; ++k)
  {
    CellSpec c;
    c.id                   = k;
    c.position             = {UniformIn(rng, 0, 1000), UniformIn(rng, 0, 1000)};
    c.price_per_importance = 3.0;
    c.importance_override  = UniformIn(rng, 10.0, 40.0);
    c.workers              = {{1, c.id, 32000.0}};
    s.cells.push_back(c);
  }
  for (int m = 1; m <= uavs; ++m)
  {
    Uav u;
    u.id               = m;
    u.depot            = {UniformIn(rng, 0, 1000), UniformIn(rng, 0, 1000)};
    u.energy_capacity  = UniformIn(rng, 200.0, 2500.0);
    u.bandwidth        = UniformIn(rng, 2.0e5, 4.0e5);
    u.tx_power         = UniformIn(rng, 0.5, 5.0);
    u.rx_power         = UniformIn(rng, 0.5, 1.0);
    u.channel_gain_db  = UniformIn(rng, 5.0, 25.0);
    u.cooperation_cost = 2.0;
    s.uavs.push_back(u);
  }
  Validate(s);
  return s;
}

void BM_EvaluateSerial(benchmark::State &state)
{
  const auto s          = MakeScenario(static_cast<int>(state.range(0)), 4);
  const auto partitions = EnumeratePartitions(s.uav_ids());
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(oracle::EvaluatePartitionsSerial(partitions, s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(partitions.size()));
}

void BM_EvaluateParallel(benchmark::State &state)
{
  const auto s          = MakeScenario(static_cast<int>(state.range(0)), 4);
  const auto partitions = EnumeratePartitions(s.uav_ids());
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(oracle::EvaluatePartitionsParallel(partitions, s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(partitions.size()));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
