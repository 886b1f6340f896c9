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

#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "uavfl/merge_split.hpp"
#include "uavfl/oracle.hpp"
#include "uavfl/radio_energy.hpp"

using namespace uavfl;
using testing::MakeCell;
using testing::MakeUav;

TEST_CASE("one UAV has no gap")
{
  ScenarioConfig s;
  s.radio = testing::SmallRadio();
  s.cells = {MakeCell(1, {500, 500}, 20)};
  s.uavs  = {MakeUav(1, {400, 400}, 3000)};
  const auto r = oracle::ExhaustiveBestPartition(s);
  CHECK(r.partitions_evaluated == 1);
  CHECK(r.optimality_gap == 0.0);
  CHECK(r.stability_certified);
}

TEST_CASE("baseline oracle report")
{
  const auto s = testing::Baseline();
  const auto r = oracle::ExhaustiveBestPartition(s);
  CHECK(r.partitions_evaluated == 203);
  CHECK(r.best_total_profit >= r.algorithm_total_profit - 1e-9);
  CHECK(r.stability_certified);
  CHECK_FALSE(oracle::CertifyStability(Partition::Grand(s.uav_ids()), s));
  MESSAGE("baseline optimality gap " << r.optimality_gap);
}

TEST_CASE("serial and parallel evaluation agree")
{
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
  {
    const auto s          = testing::RandomScenario(seed, 6, 3, PaymentRule::BidPrice);
    const auto partitions = EnumeratePartitions(s.uav_ids());
    CHECK(oracle::EvaluatePartitionsSerial(partitions, s) == oracle::EvaluatePartitionsParallel(partitions, s));
    const auto a = oracle::ExhaustiveBestPartitionSerial(s);
    const auto b = oracle::ExhaustiveBestPartitionParallel(s);
    CHECK(a.partition == b.partition);
    CHECK(a.total_profit == b.total_profit);
  }
}

TEST_CASE("nothing profitable gives zero profit")
{
  auto s = testing::Baseline();
  s.game.required_iterations = 100000;
  const auto r = oracle::ExhaustiveBestPartition(s);
  CHECK(r.best_total_profit == 0.0);
  CHECK(r.algorithm_total_profit == 0.0);
  const auto a = oracle::ExhaustiveBestAssignment(Partition::Singletons(s.uav_ids()), s);
  CHECK(a.assignment.empty());
  CHECK(a.total_profit == 0.0);
}

TEST_CASE("player cap")
{
  auto s = testing::RandomScenario(1, 11, 2, PaymentRule::BidPrice);
  CHECK_THROWS_AS(oracle::ExhaustiveBestPartitionSerial(s), std::length_error);
}

TEST_CASE("best assignment matches allocate for one pair")
{
  ScenarioConfig s;
  s.radio = testing::SmallRadio();
  s.cells = {MakeCell(1, {500, 500}, 20)};
  s.uavs  = {MakeUav(1, {400, 400}, 3000)};
  const auto p = Partition::Singletons(s.uav_ids());
  const auto a = oracle::ExhaustiveBestAssignment(p, s);
  CHECK(a.total_profit == doctest::Approx(Allocate(p, s).total_profit));
  REQUIRE(a.assignment.size() == 1);
  CHECK(a.assignment[0].second == 1);
}

TEST_CASE("greedy trap: the exhaustive assignment is strictly better")
{
  // Both cells value every coalition by importance only. Coalition {1} is
  // cheap everywhere but prefers cell 1; {2} can only profit in cell 1. The
  // tie on cell 1 goes to {1}, stranding {2}.
  ScenarioConfig s;
  s.radio                 = testing::SmallRadio();
  s.game.weight_latency   = 0.0;
  s.cells                 = {MakeCell(1, {500, 0}, 40), MakeCell(2, {0, 0}, 20)};
  Uav a                   = MakeUav(1, {100, 0}, 5000);
  Uav b                   = MakeUav(2, {600, 0}, 5000);
  for (Uav *u : {&a, &b})
  {
    u->energy_price = 0.065;
    u->hover_energy_per_iteration += 20.0 - ComputePerIterationEnergy(*u, s.cells[0], s.radio, 1).total();
  }
  s.uavs = {a, b};
  Validate(s);

  const auto p      = Partition::Singletons(s.uav_ids());
  const auto greedy = Allocate(p, s);
  const auto best   = oracle::ExhaustiveBestAssignment(p, s);
  CHECK(greedy.allocation_string() == "{1}->1");
  CHECK(best.total_profit > greedy.total_profit + 1.0);
  REQUIRE(best.assignment.size() == 2);
  CHECK(best.assignment[0] == std::pair<Coalition, CellId>{Coalition{1}, 2});
  CHECK(best.assignment[1] == std::pair<Coalition, CellId>{Coalition{2}, 1});
}

TEST_CASE("best assignment bounds allocate under bid price")
{
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
  {
    const auto s = testing::RandomScenario(seed, 5, 4, PaymentRule::BidPrice);
    for (const auto &p : EnumeratePartitions(s.uav_ids()))
    {
      CHECK(oracle::ExhaustiveBestAssignment(p, s).total_profit >= Allocate(p, s).total_profit - 1e-9);
    }
  }
}

TEST_CASE("certification agrees with the search predicate")
{
  for (std::uint64_t seed = 1; seed <= 15; ++seed)
  {
    const auto s = testing::RandomScenario(seed, 4, 3, PaymentRule::BidPrice);
    for (const auto &p : EnumeratePartitions(s.uav_ids()))
    {
      CHECK(oracle::CertifyStability(p, s) == IsMergeSplitStable(p, s));
    }
  }
}

TEST_CASE("algorithm never beats the optimum; median gap logged")
{
  std::vector<double> gaps;
  for (std::uint64_t seed = 1; seed <= 30; ++seed)
  {
    const auto s = testing::RandomScenario(seed, 3 + static_cast<int>(seed % 3), 3, PaymentRule::BidPrice);
    const auto r = oracle::ExhaustiveBestPartition(s);
    CHECK(r.algorithm_total_profit <= r.best_total_profit + 1e-9);
    CHECK(r.stability_certified);
    gaps.push_back(r.optimality_gap);
  }
  std::sort(gaps.begin(), gaps.end());
  MESSAGE("median optimality gap " << gaps[gaps.size() / 2]);
}
