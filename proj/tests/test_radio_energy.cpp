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

#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "uavfl/radio_energy.hpp"

using namespace uavfl;
using testing::MakeCell;
using testing::MakeUav;

namespace {

// Closed form written out longhand, independent of the library helpers.
double ReferenceRate(double b, double p, double g_db, double interference, double n0_dbm)
{
  const double n0   = std::exp((n0_dbm - 30.0) / 10.0 * std::log(10.0));
  const double gain = std::exp(g_db / 10.0 * std::log(10.0));
  return b * std::log(1.0 + p * gain / (interference + b * n0)) / std::log(2.0);
}

}  // namespace

TEST_CASE("unit conversions")
{
  CHECK(DbToLinear(0.0) == doctest::Approx(1.0));
  CHECK(DbToLinear(10.0) == doctest::Approx(10.0));
  CHECK(DbmPerHzToWattsPerHz(-174.0) == doctest::Approx(3.981e-21).epsilon(1e-3));
}

TEST_CASE("flying energy")
{
  RadioEnv env;
  Uav      u = MakeUav(3, {100, 600}, 1000);
  CHECK(FlyingEnergy(u, MakeCell(1, {200, 300}, 1), env) == doctest::Approx(31.6228).epsilon(1e-5));
  CHECK(FlyingEnergy(u, MakeCell(1, {100, 600}, 1), env) == 0.0);

  const double base = FlyingEnergy(u, MakeCell(1, {700, 900}, 1), env);
  u.velocity *= 2.0;
  CHECK(FlyingEnergy(u, MakeCell(1, {700, 900}, 1), env) == doctest::Approx(base / 2.0));
}

TEST_CASE("compute energy")
{
  Uav u                        = MakeUav(1, {0, 0}, 100);
  u.cpu_coefficient            = 1e-26;
  u.cpu_cycles_per_aggregation = 2e9;
  u.cpu_frequency              = 1e8;
  CHECK(ComputeEnergy(u) == doctest::Approx(0.2));
  const double e = ComputeEnergy(u);
  u.cpu_frequency *= 2.0;
  CHECK(ComputeEnergy(u) == doctest::Approx(4.0 * e));
  u.cpu_coefficient = 0.0;
  CHECK(ComputeEnergy(u) == 0.0);
}

TEST_CASE("shannon rate examples")
{
  const double n0 = DbmPerHzToWattsPerHz(-174.0);
  CHECK(ShannonRate(4e5, 0.0, 5.0, 0.0, n0) == 0.0);
  CHECK(ShannonRate(4e5, 1.0, 5.0, 0.0, n0) == doctest::Approx(2.03e7).epsilon(0.005));
  CHECK_THROWS_AS(ShannonRate(0.0, 1.0, 5.0, 0.0, n0), std::invalid_argument);
  CHECK(ShannonRate(4e5, 2.0, 5.0, 0.0, n0) > ShannonRate(4e5, 1.0, 5.0, 0.0, n0));
}

TEST_CASE("shannon rate matches an independent closed form")
{
  std::mt19937_64                        rng(3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 1000; ++i)
  {
    const double b = 1e4 + 1e7 * u01(rng);
    const double p = 1e-3 + 10.0 * u01(rng);
    const double g = -10.0 + 40.0 * u01(rng);
    const double I = u01(rng) < 0.5 ? 0.0 : 1e-12 * u01(rng);
    const double r = ShannonRate(b, p, g, I, DbmPerHzToWattsPerHz(-174.0));
    CHECK(std::abs(r - ReferenceRate(b, p, g, I, -174.0)) <= 1e-9 * r);
  }
}

TEST_CASE("per-iteration energy components")
{
  const RadioEnv env  = testing::SmallRadio();
  const Uav      u    = MakeUav(1, {0, 0}, 1000);
  const CellSpec cell = MakeCell(1, {100, 0}, 10);

  const auto none = ComputePerIterationEnergy(u, cell, env, 0);
  CHECK(none.receive_from_workers == 0.0);
  CHECK(none.transmit_to_workers == 0.0);
  CHECK(none.hover == 5.0);
  CHECK(none.circuit == 5.0);

  const auto one = ComputePerIterationEnergy(u, cell, env, 1);
  const auto two = ComputePerIterationEnergy(u, cell, env, 2);
  CHECK(two.receive_from_workers == doctest::Approx(2.0 * one.receive_from_workers));
  CHECK(two.transmit_to_workers == doctest::Approx(2.0 * one.transmit_to_workers));
  CHECK(one.total() == doctest::Approx(one.receive_from_workers + one.receive_from_owner + one.transmit_to_owner +
                                       one.transmit_to_workers + one.compute + one.hover + one.circuit));

  // Hand-computed uplink term.
  const double rate = ReferenceRate(u.bandwidth, u.tx_power, u.channel_gain_db, 0.0, -174.0);
  CHECK(one.transmit_to_owner == doctest::Approx(u.tx_power * env.cell_aggregate_size / rate));

  RadioEnv bigger          = env;
  bigger.global_model_size = 2.0 * env.global_model_size;
  CHECK(ComputePerIterationEnergy(u, cell, bigger, 1).total() > one.total());

  CHECK_THROWS_AS(ComputePerIterationEnergy(u, cell, env, -1), std::invalid_argument);
}

TEST_CASE("zero rate with a payload is an infeasible link")
{
  RadioEnv env       = testing::SmallRadio();
  env.owner_tx_power = 0.0;
  CHECK_THROWS_AS(ComputePerIterationEnergy(MakeUav(1, {0, 0}, 1000), MakeCell(1, {0, 0}, 1), env, 1),
                  InfeasibleLinkError);
}

TEST_CASE("max iterations arithmetic")
{
  // Round trip 100 J, 10 J per iteration, 200 J battery.
  RadioEnv env           = testing::SmallRadio();
  Uav      u             = MakeUav(1, {0, 0}, 200);
  const CellSpec cell    = MakeCell(1, {500, 0}, 1);  // 50 s one way at 1 W
  u.cooperation_cost     = 0.0;
  const double per       = ComputePerIterationEnergy(u, cell, env, 1).total();
  u.hover_energy_per_iteration += 10.0 - per;  // pin the per-iteration total to 10 J
  CHECK(ComputePerIterationEnergy(u, cell, env, 1).total() == doctest::Approx(10.0));
  u.energy_capacity = 200.0 + 1e-9;  // guard the floor against rounding in the pinned total
  CHECK(MaxIterations(u, cell, env, 1, false) == 10);

  u.energy_capacity = 200.0;
  Uav far           = u;
  far.depot         = {0, 0};
  CHECK(MaxIterations(far, MakeCell(1, {1000, 250}, 1), env, 1, false) == 0);

  // Slack of 1 J after the 100 J flight: K = 2 costs exactly one iteration.
  u.energy_capacity  = 201.0;
  u.cooperation_cost = 2.0;
  CHECK(MaxIterations(u, cell, env, 1, false) == 10);
  CHECK(MaxIterations(u, cell, env, 1, true) == 9);
}

TEST_CASE("max iterations monotonicity properties")
{
  std::mt19937_64                        rng(5);
  std::uniform_real_distribution<double> coord(0.0, 1000.0);
  std::uniform_real_distribution<double> energy(100.0, 4000.0);
  const RadioEnv                         env = testing::SmallRadio();
  for (int i = 0; i < 500; ++i)
  {
    Uav            u = MakeUav(1, {coord(rng), coord(rng)}, energy(rng));
    const CellSpec a = MakeCell(1, {coord(rng), coord(rng)}, 1);
    const CellSpec b = MakeCell(2, {coord(rng), coord(rng)}, 1);
    const auto    &near = Distance(u.depot, a.position) <= Distance(u.depot, b.position) ? a : b;
    const auto    &far  = &near == &a ? b : a;
    CHECK(MaxIterations(u, near, env, 1, false) >= MaxIterations(u, far, env, 1, false));
    CHECK(MaxIterations(u, a, env, 1, true) <= MaxIterations(u, a, env, 1, false));
    const int before = MaxIterations(u, a, env, 1, false);
    u.energy_capacity += energy(rng);
    CHECK(MaxIterations(u, a, env, 1, false) >= before);
  }
}

TEST_CASE("transmission time")
{
  CHECK(TransmissionTime(0.0, 1.0) == 0.0);
  CHECK(TransmissionTime(4e9, 2.03e7) == doctest::Approx(197.0).epsilon(0.005));
  CHECK(TransmissionTime(100.0, 5.0) == doctest::Approx(2.0 * TransmissionTime(100.0, 10.0)));
  CHECK_THROWS_AS(TransmissionTime(1.0, 0.0), InfeasibleLinkError);
}
