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

#include "doctest.h"
#include "support.hpp"
#include "uavfl/merge_split.hpp"
#include "uavfl/oracle.hpp"

using namespace uavfl;

TEST_CASE("single UAV stays a singleton")
{
  ScenarioConfig s;
  s.radio = testing::SmallRadio();
  s.cells = {testing::MakeCell(1, {500, 500}, 20)};
  s.uavs  = {testing::MakeUav(7, {400, 400}, 3000)};
  const auto r = MergeAndSplit(s);
  CHECK(r.partition.to_string() == "{{7}}");
  CHECK(r.moves == 0);
  CHECK(IsMergeSplitStable(r.partition, s));
}

TEST_CASE("baseline converges to the expected partition")
{
  const auto             s = testing::Baseline();
  std::vector<MoveEvent> events;
  const auto             r = MergeAndSplit(s, [&](const MoveEvent &e) { events.push_back(e); });
  CHECK(r.partition.to_string() == "{{1,3},{2},{4},{5},{6}}");
  CHECK(r.outcome.allocation_string() == "{1,3}->1;{4}->2;{6}->3");
  REQUIRE_FALSE(events.empty());
  CHECK(events.front().kind == MoveKind::Initial);
  CHECK(events.front().outcome.allocation_string() == "{3}->2;{4}->1;{6}->3");
  CHECK(IsMergeSplitStable(r.partition, s));
  CHECK_FALSE(IsMergeSplitStable(Partition::Grand(s.uav_ids()), s));
}

TEST_CASE("initial partition must cover the UAVs")
{
  const auto s = testing::Baseline();
  CHECK_THROWS(MergeAndSplit(Partition::Singletons(std::vector<UavId>{1, 2, 3}), s));
}

TEST_CASE("committed moves strictly raise profit and stay bounded")
{
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
  {
    const auto             s = testing::RandomScenario(seed, 5, 3, PaymentRule::BidPrice);
    std::vector<MoveEvent> events;
    const auto             r = MergeAndSplit(s, [&](const MoveEvent &e) { events.push_back(e); });
    CHECK(r.partition.covers(s.uav_ids()));
    CHECK(static_cast<std::uint64_t>(r.moves) <= BellNumber(5));
    CHECK(events.size() == static_cast<std::size_t>(r.moves) + 1);
    for (std::size_t i = 1; i < events.size(); ++i)
    {
      CHECK(events[i].gamma_after > events[i].gamma_before);
      CHECK(events[i].before == events[i - 1].after);
    }
    CHECK(IsMergeSplitStable(r.partition, s));
  }
}

TEST_CASE("merge-and-split from the grand coalition also reaches stability")
{
  for (std::uint64_t seed = 100; seed < 120; ++seed)
  {
    const auto s = testing::RandomScenario(seed, 4, 3, PaymentRule::BidPrice);
    const auto r = MergeAndSplit(Partition::Grand(s.uav_ids()), s);
    CHECK(IsMergeSplitStable(r.partition, s));
  }
}

TEST_CASE("large cooperation cost keeps everyone alone")
{
  auto s = testing::Baseline();
  for (auto &u : s.uavs)
  {
    u.cooperation_cost = 1000.0;
  }
  const auto r = MergeAndSplit(s);
  CHECK(r.partition == Partition::Singletons(s.uav_ids()));
  CHECK(oracle::CertifyStability(r.partition, s));
  CHECK(oracle::ExhaustiveBestPartitionSerial(s).total_profit == doctest::Approx(r.outcome.total_profit));
}

TEST_CASE("move kind names")
{
  CHECK(ToString(MoveKind::Merge) == "merge");
  CHECK(ToString(MoveKind::Split) == "split");
  CHECK(ToString(MoveKind::Initial) == "initial");
}
