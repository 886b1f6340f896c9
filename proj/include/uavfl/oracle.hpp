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
#include <span>
#include <utility>
#include <vector>

#include "uavfl/auction.hpp"
#include "uavfl/coalition.hpp"

namespace uavfl {

/// Brute-force checks for small instances.
namespace oracle {

inline constexpr std::size_t kMaxPlayers        = 10;
inline constexpr std::size_t kMaxAssignmentSide = 8;

struct BestPartition
{
  Partition     partition;
  double        total_profit = 0.0;
  std::uint64_t evaluated    = 0;
};

/// Total profit of each partition, same order as the input.
std::vector<double> EvaluatePartitionsSerial(std::span<const Partition> partitions, const ScenarioConfig &scenario);

/// OpenMP version of EvaluatePartitionsSerial; results are identical.
std::vector<double> EvaluatePartitionsParallel(std::span<const Partition> partitions,
                                               const ScenarioConfig       &scenario);

/// Highest-profit partition of the scenario's UAVs. Ties keep the partition
/// that comes first in enumeration order.
BestPartition ExhaustiveBestPartitionSerial(const ScenarioConfig &scenario);
BestPartition ExhaustiveBestPartitionParallel(const ScenarioConfig &scenario);

struct Report
{
  Partition     best_partition;
  double        best_total_profit = 0.0;
  Partition     algorithm_partition;
  double        algorithm_total_profit = 0.0;
  double        optimality_gap         = 0.0;  // fraction of the best profit
  bool          stability_certified    = false;
  std::uint64_t partitions_evaluated   = 0;
};

/// Runs merge-and-split from all singletons and compares it with the
/// exhaustive optimum.
Report ExhaustiveBestPartition(const ScenarioConfig &scenario);

struct AssignmentResult
{
  std::vector<std::pair<Coalition, CellId>> assignment;
  double                                    total_profit = 0.0;
};

/// Best injective partial assignment of coalitions to cells, each pair
/// valued at its own bid minus its cost and only positive pairs allowed.
AssignmentResult ExhaustiveBestAssignment(const Partition &partition, const ScenarioConfig &scenario);

/// No pairwise merge and no split of one coalition strictly raises total
/// profit. Written against the definitions, not the search code.
bool CertifyStability(const Partition &partition, const ScenarioConfig &scenario);

}  // namespace oracle
}  // namespace uavfl
