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

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "uavfl/experiments.hpp"
#include "uavfl/report.hpp"

using namespace uavfl;

TEST_CASE("number formatting")
{
  CHECK(report::Number(1.0) == "1.000000");
  CHECK(report::Number(-0.0) == "0.000000");
  CHECK(report::Number(-1e-9) == "0.000000");
  CHECK(report::Number(99.2737834) == "99.273783");
}

TEST_CASE("uniform helpers")
{
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i)
  {
    const double u = UniformUnit(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(UniformIndex(rng, 3) < 3);
    CHECK(UniformIn(rng, 2.0, 2.0) == 2.0);
  }
  CHECK_THROWS(UniformIndex(rng, 0));
}

TEST_CASE("run record and CSV round trip")
{
  const auto s   = testing::Baseline();
  const auto run = RunPipeline(s, true, false);
  CHECK(run.record.num_coalitions == 5);
  CHECK(run.record.max_coalition_size == 2);
  CHECK(Partition::Parse(run.record.partition.to_string()) == run.record.partition);
  CHECK(run.trace.size() == static_cast<std::size_t>(run.result.moves) + 1);

  std::ostringstream csv;
  report::WriteRecordsCsv(csv, std::span(&run.record, 1));
  std::istringstream lines(csv.str());
  std::string        line;
  std::getline(lines, line);
  CHECK(line == report::kRecordHeader);
  std::getline(lines, line);
  CHECK(line.rfind("summary,run,1,,,\"{{1,3},{2},{4},{5},{6}}\"", 0) == 0);
  int coalition_lines = 0;
  while (std::getline(lines, line))
  {
    CHECK(line.rfind("coalition,", 0) == 0);
    ++coalition_lines;
  }
  CHECK(coalition_lines == 3);

  const auto j = nlohmann::json::parse(report::RunJson(run, s));
  CHECK(j["record"]["partition"] == "{{1,3},{2},{4},{5},{6}}");
  CHECK(j["trace"].size() == run.trace.size());
  CHECK(j["informational"].size() == 3);
}

TEST_CASE("completion time is informational and positive")
{
  const auto s   = testing::Baseline();
  const auto run = RunPipeline(s, false, false);
  for (const auto &a : run.result.outcome.allocations)
  {
    const double t = CompletionTime(a, s);
    CHECK(t > MaxTravelTime(a.coalition, s.cell(a.cell_id), s));
  }
}

TEST_CASE("tables")
{
  const auto s       = testing::Baseline();
  const auto entries = BuildTables(s, DefaultTableCoalitions());
  CHECK(entries.size() == 6 * 3 + 6 * 3);
  for (const auto &e : entries)
  {
    if (e.table == "valuation" && e.coalition.min_id() <= 2)
    {
      CHECK_FALSE(e.feasible);
      CHECK(e.valuation == 0.0);
    }
  }

  auto t                     = s;
  t.game.required_iterations = 100000;
  for (const auto &e : BuildTables(t, DefaultTableCoalitions()))
  {
    CHECK_FALSE(e.feasible);
    CHECK(e.valuation == 0.0);
    CHECK(e.profit == 0.0);
  }
}

TEST_CASE("sweep")
{
  const auto s = testing::Baseline();
  CHECK(Sweep(s, SweepParameter::CooperationCost, std::vector<double>{}).empty());
  CHECK_THROWS(ParseSweepParameter("velocity"));
  CHECK(ParseSweepParameter("required_iterations") == SweepParameter::RequiredIterations);

  const std::vector<double> ks{0, 2, 5};
  const auto                recs = Sweep(s, SweepParameter::CooperationCost, ks);
  REQUIRE(recs.size() == 3);
  for (std::size_t i = 0; i < ks.size(); ++i)
  {
    const auto direct = MergeAndSplit(WithParameter(s, SweepParameter::CooperationCost, ks[i]));
    CHECK(recs[i].swept_parameter == "cooperation_cost");
    CHECK(*recs[i].swept_value == ks[i]);
    CHECK(recs[i].partition == direct.partition);
    CHECK(recs[i].total_profit == direct.outcome.total_profit);
  }
  CHECK_THROWS(WithParameter(s, SweepParameter::RequiredIterations, 0));
  CHECK_THROWS(WithParameter(s, SweepParameter::CooperationCost, -1));
}

TEST_CASE("compare is deterministic and labelled")
{
  const auto s = testing::Baseline();
  const auto a = Compare(s, 2);
  const auto b = Compare(s, 2);
  REQUIRE(a.size() == 6);
  std::ostringstream x, y;
  report::WriteRecordsCsv(x, a);
  report::WriteRecordsCsv(y, b);
  CHECK(x.str() == y.str());
  CHECK(a[0].experiment == "joint");
  CHECK(a[1].experiment == "random_allocation");
  CHECK(a[2].experiment == "random_partition");
  CHECK(a[3].seed == s.game.rng_seed + 1);
  CHECK_THROWS(Compare(s, 0));
}

TEST_CASE("compare with a single partition and cell: all schemes agree")
{
  ScenarioConfig s;
  s.radio = testing::SmallRadio();
  s.cells = {testing::MakeCell(1, {500, 500}, 20)};
  s.uavs  = {testing::MakeUav(1, {400, 400}, 3000)};
  const auto recs = Compare(s, 3);
  for (const auto &r : recs)
  {
    CHECK(r.total_profit == doctest::Approx(recs[0].total_profit));
  }
}

TEST_CASE("commtime")
{
  auto s = testing::Baseline();
  CHECK_THROWS(CommTime(s, 0));
  const auto a = CommTime(s, 5);
  const auto b = CommTime(s, 5);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    CHECK(a[i].worker_time == b[i].worker_time);
    CHECK(a[i].uav_time == b[i].uav_time);
  }

  auto &t                  = s.commtime;
  t.worker_bandwidth       = {1e5, 1e5};
  t.worker_tx_power        = {5e-3, 5e-3};
  t.worker_channel_gain_db = {4, 4};
  t.uav_bandwidth          = {3e5, 3e5};
  t.uav_tx_power           = {2, 2};
  t.uav_channel_gain_db    = {10, 10};
  const auto c             = CommTime(s, 10);
  for (const auto &d : c)
  {
    CHECK(d.worker_time == c[0].worker_time);
    CHECK(d.uav_time == c[0].uav_time);
  }
}
