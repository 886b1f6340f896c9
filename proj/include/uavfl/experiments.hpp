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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "uavfl/auction.hpp"
#include "uavfl/merge_split.hpp"
#include "uavfl/oracle.hpp"

namespace uavfl {

struct CoalitionRow
{
  Coalition coalition;
  CellId    cell    = 0;
  double    revenue = 0.0;
  double    cost    = 0.0;
  double    profit  = 0.0;
};

/// One run or sweep point.
struct ExperimentRecord
{
  std::string               experiment;
  std::uint64_t             seed = 0;
  std::string               swept_parameter;
  std::optional<double>     swept_value;
  Partition                 partition;
  std::string               allocation;
  double                    total_profit       = 0.0;
  std::size_t               num_coalitions     = 0;
  std::size_t               max_coalition_size = 0;
  std::vector<CoalitionRow> rows;
};

ExperimentRecord MakeRecord(std::string experiment, std::uint64_t seed, const Partition &partition,
                            const AuctionOutcome &outcome);

/// Seconds from dispatch until the last scheduled iteration finishes: the
/// farthest member's flight plus the per-iteration communication and
/// compute time of every scheduled iteration. Reported only.
double CompletionTime(const Allocation &allocation, const ScenarioConfig &scenario);

struct RunResult
{
  ExperimentRecord              record;
  MergeSplitResult              result;
  std::vector<MoveEvent>        trace;
  std::optional<oracle::Report> oracle;
};

RunResult RunPipeline(const ScenarioConfig &scenario, bool with_trace, bool with_oracle);

struct TableEntry
{
  std::string table;  // "valuation" or "coalition_profit"
  Coalition   coalition;
  CellId      cell      = 0;
  bool        feasible  = false;
  double      valuation = 0.0;
  double      revenue   = 0.0;
  double      cost      = 0.0;
  double      profit    = 0.0;
};

/// Coalitions listed in the coalition profit table.
std::vector<Coalition> DefaultTableCoalitions();

/// Cell valuations of every singleton UAV (0 when infeasible), followed by
/// revenue, cost and profit of `coalitions` in every cell.
std::vector<TableEntry> BuildTables(const ScenarioConfig &scenario, std::span<const Coalition> coalitions);

enum class SweepParameter
{
  CooperationCost,
  RequiredIterations,
};

SweepParameter   ParseSweepParameter(std::string_view text);
std::string_view ToString(SweepParameter p);

ScenarioConfig WithParameter(const ScenarioConfig &scenario, SweepParameter p, double value);

/// One record per value, in input order.
std::vector<ExperimentRecord> Sweep(const ScenarioConfig &scenario, SweepParameter p, std::span<const double> values);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double UniformUnit(std::mt19937_64 &rng);
double UniformIn(std::mt19937_64 &rng, double lo, double hi);
std::size_t UniformIndex(std::mt19937_64 &rng, std::size_t n);

/// Merge-and-split partition, then coalitions in random order each take a
/// uniformly random remaining cell among their positive-profit ones.
AuctionOutcome RandomAllocation(const Partition &partition, const ScenarioConfig &scenario, std::mt19937_64 &rng);

/// A partition drawn uniformly from the enumeration.
Partition RandomPartition(const ScenarioConfig &scenario, std::mt19937_64 &rng);

/// Three schemes per round: "joint", "random_allocation",
/// "random_partition". Round r draws from a stream seeded with seed + r - 1.
std::vector<ExperimentRecord> Compare(const ScenarioConfig &scenario, int rounds);

struct CommTimeDraw
{
  int    draw        = 0;
  double worker_time = 0.0;
  double uav_time    = 0.0;
};

/// Draw order per sample: worker bandwidth, power, gain, then UAV
/// bandwidth, power, gain.
std::vector<CommTimeDraw> CommTime(const ScenarioConfig &scenario, int draws);

}  // namespace uavfl
