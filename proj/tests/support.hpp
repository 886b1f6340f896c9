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

// Shared fixtures for the unit and acceptance tests.

#pragma once

#include <random>

#include "uavfl/experiments.hpp"
#include "uavfl/scenario.hpp"

namespace uavfl::testing {

inline ScenarioConfig Baseline()
{
  return LoadScenarioFile(UAVFL_BASELINE);
}

/// A UAV with the baseline's small-payload radio profile.
inline Uav MakeUav(UavId id, Point depot, double energy)
{
  Uav u;
  u.id              = id;
  u.depot           = depot;
  u.energy_capacity = energy;
  u.bandwidth       = 3.0e5;
  u.tx_power        = 2.0;
  u.rx_power        = 0.8;
  u.channel_gain_db = 15.0;
  return u;
}

inline CellSpec MakeCell(CellId id, Point position, double importance)
{
  CellSpec c;
  c.id                   = id;
  c.position             = position;
  c.price_per_importance = 3.0;
  c.importance_override  = importance;
  c.workers              = {{1, id, 32000.0}};
  return c;
}

inline RadioEnv SmallRadio()
{
  RadioEnv r;
  r.global_model_size      = 7.5 * kBitsPerMegabyte;
  r.cell_aggregate_size    = 2.5 * kBitsPerMegabyte;
  r.worker_update_size     = 0.5 * kBitsPerMegabyte;
  r.worker_bandwidth       = 1.0e5;
  r.worker_tx_power        = 5.0e-3;
  r.worker_channel_gain_db = 5.0;
  return r;
}

/// Small random instance with a mix of feasible and infeasible pairs.
inline ScenarioConfig RandomScenario(std::uint64_t seed, int uavs, int cells, PaymentRule rule)
{
  std::mt19937_64 rng(seed);
  ScenarioConfig  s;
  s.radio                    = SmallRadio();
  s.game.payment_rule        = rule;
  s.game.rng_seed            = seed;
  s.game.required_iterations = 10 + static_cast<int>(UniformIndex(rng, 21));
  for (int k = 1; k <= cells; ++k)
  {
    s.cells.push_back(
      MakeCell(k, {UniformIn(rng, 0, 1000), UniformIn(rng, 0, 1000)}, UniformIn(rng, 10.0, 40.0)));
  }
  const double coop = UniformIn(rng, 0.0, 4.0);
  for (int m = 1; m <= uavs; ++m)
  {
    Uav u = MakeUav(m, {UniformIn(rng, 0, 1000), UniformIn(rng, 0, 1000)}, UniformIn(rng, 200.0, 2500.0));
    u.bandwidth        = UniformIn(rng, 2.0e5, 4.0e5);
    u.tx_power         = UniformIn(rng, 0.5, 5.0);
    u.rx_power         = UniformIn(rng, 0.5, 1.0);
    u.channel_gain_db  = UniformIn(rng, 5.0, 25.0);
    u.cooperation_cost = coop;
    s.uavs.push_back(u);
  }
  Validate(s);
  return s;
}

}  // namespace uavfl::testing
