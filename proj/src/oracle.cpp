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

#include "uavfl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "uavfl/merge_split.hpp"

namespace uavfl::oracle {

std::vector<double> EvaluatePartitionsSerial(std::span<const Partition> partitions, const ScenarioConfig &scenario)
{
  std::vector<double> gamma(partitions.size());
  for (std::size_t i = 0; i < partitions.size(); ++i)
  {
    gamma[i] = Allocate(partitions[i], scenario).total_profit;
  }
  return gamma;
}

std::vector<double> EvaluatePartitionsParallel(std::span<const Partition> partitions,
                                               const ScenarioConfig       &scenario)
{
  std::vector<double> gamma(partitions.size());
  const auto          n = static_cast<long long>(partitions.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < n; ++i)
  {
    gamma[static_cast<std::size_t>(i)] = Allocate(partitions[static_cast<std::size_t>(i)], scenario).total_profit;
  }
  return gamma;
}

namespace {

std::vector<Partition> AllPartitions(const ScenarioConfig &scenario)
{
  const auto ids = scenario.uav_ids();
  if (ids.size() > kMaxPlayers)
  {
    throw std::length_error("oracle: " + std::to_string(ids.size()) + " UAVs exceeds the cap of " +
                            std::to_string(kMaxPlayers));
  }
  return EnumeratePartitions(ids, kMaxPlayers);
}

BestPartition Reduce(std::vector<Partition> &&partitions, const std::vector<double> &gamma)
{
  BestPartition best;
  best.evaluated = partitions.size();
  std::size_t arg = 0;
  for (std::size_t i = 1; i < gamma.size(); ++i)
  {
    if (gamma[i] > gamma[arg])
    {
      arg = i;
    }
  }
  if (!partitions.empty())
  {
    best.partition    = std::move(partitions[arg]);
    best.total_profit = gamma[arg];
  }
  return best;
}

}  // namespace

BestPartition ExhaustiveBestPartitionSerial(const ScenarioConfig &scenario)
{
  auto partitions = AllPartitions(scenario);
  auto gamma      = EvaluatePartitionsSerial(partitions, scenario);
  return Reduce(std::move(partitions), gamma);
}

BestPartition ExhaustiveBestPartitionParallel(const ScenarioConfig &scenario)
{
  auto partitions = AllPartitions(scenario);
  auto gamma      = EvaluatePartitionsParallel(partitions, scenario);
  return Reduce(std::move(partitions), gamma);
}

Report ExhaustiveBestPartition(const ScenarioConfig &scenario)
{
  const auto best = ExhaustiveBestPartitionParallel(scenario);
  const auto alg  = MergeAndSplit(scenario);

  Report r;
  r.best_partition         = best.partition;
  r.best_total_profit      = best.total_profit;
  r.algorithm_partition    = alg.partition;
  r.algorithm_total_profit = alg.outcome.total_profit;
  r.partitions_evaluated   = best.evaluated;
  r.optimality_gap =
    best.total_profit > 0.0 ? (best.total_profit - alg.outcome.total_profit) / best.total_profit : 0.0;
  r.stability_certified = CertifyStability(alg.partition, scenario);
  return r;
}

AssignmentResult ExhaustiveBestAssignment(const Partition &partition, const ScenarioConfig &scenario)
{
  const auto &coalitions = partition.coalitions();
  const auto &cells      = scenario.cells;
  if (coalitions.size() > kMaxAssignmentSide || cells.size() > kMaxAssignmentSide)
  {
    throw std::length_error("oracle: assignment search is capped at 8 coalitions by 8 cells");
  }
  const std::size_t   nk = cells.size();
  std::vector<double> value(coalitions.size() * nk, 0.0);
  for (std::size_t s = 0; s < coalitions.size(); ++s)
  {
    for (std::size_t k = 0; k < nk; ++k)
    {
      if (Feasible(coalitions[s], cells[k], scenario))
      {
        const double bid  = Valuation(cells[k], coalitions[s], scenario);
        const double cost = CoalitionCost(coalitions[s], cells[k],
                                          ScheduleIterations(coalitions[s], cells[k], scenario), scenario);
        value[s * nk + k] = bid - cost;
      }
    }
  }

  AssignmentResult         best;
  std::vector<int>         choice(coalitions.size(), -1);
  std::vector<int>         best_choice(coalitions.size(), -1);
  std::vector<bool>        used(nk, false);
  double                   best_total = 0.0;
  std::function<void(std::size_t, double)> search = [&](std::size_t s, double total) {
    if (s == coalitions.size())
    {
      if (total > best_total)
      {
        best_total  = total;
        best_choice = choice;
      }
      return;
    }
    choice[s] = -1;
    search(s + 1, total);
    for (std::size_t k = 0; k < nk; ++k)
    {
      const double v = value[s * nk + k];
      if (!used[k] && v > 0.0)
      {
        used[k]   = true;
        choice[s] = static_cast<int>(k);
        search(s + 1, total + v);
        used[k]   = false;
        choice[s] = -1;
      }
    }
  };
  search(0, 0.0);

  for (std::size_t s = 0; s < coalitions.size(); ++s)
  {
    if (best_choice[s] >= 0)
    {
      best.assignment.emplace_back(coalitions[s], cells[static_cast<std::size_t>(best_choice[s])].id);
    }
  }
  best.total_profit = best_total;
  return best;
}

namespace {

// Set partitions of `items` into at least two blocks, built from block
// labels counted in mixed radix. Deliberately unrelated to the generator
// used by the search code.
std::vector<std::vector<std::vector<UavId>>> ProperSplits(const std::vector<UavId> &items)
{
  std::vector<std::vector<std::vector<UavId>>> out;
  const std::size_t                            n = items.size();
  std::vector<std::size_t>                     label(n, 0);
  while (true)
  {
    // Keep only labelings in first-occurrence normal form.
    bool        canonical = true;
    std::size_t next      = 0;
    for (std::size_t i = 0; i < n && canonical; ++i)
    {
      if (label[i] > next)
      {
        canonical = false;
      }
      else if (label[i] == next)
      {
        ++next;
      }
    }
    if (canonical && next >= 2)
    {
      std::vector<std::vector<UavId>> blocks(next);
      for (std::size_t i = 0; i < n; ++i)
      {
        blocks[label[i]].push_back(items[i]);
      }
      out.push_back(std::move(blocks));
    }
    std::size_t pos = 0;
    while (pos < n && ++label[pos] == n)
    {
      label[pos] = 0;
      ++pos;
    }
    if (pos == n)
    {
      break;
    }
  }
  return out;
}

double Gamma(const std::vector<std::vector<UavId>> &blocks, const ScenarioConfig &scenario)
{
  std::vector<Coalition> cs;
  cs.reserve(blocks.size());
  for (const auto &b : blocks)
  {
    cs.emplace_back(b);
  }
  return Allocate(Partition(std::move(cs)), scenario).total_profit;
}

}  // namespace

bool CertifyStability(const Partition &partition, const ScenarioConfig &scenario)
{
  std::vector<std::vector<UavId>> blocks;
  for (const auto &c : partition.coalitions())
  {
    blocks.push_back(c.members());
  }
  const double current   = Gamma(blocks, scenario);
  const double threshold = current + 1e-9;

  for (std::size_t i = 0; i < blocks.size(); ++i)
  {
    for (std::size_t j = 0; j < blocks.size(); ++j)
    {
      if (i == j)
      {
        continue;
      }
      std::vector<std::vector<UavId>> next;
      for (std::size_t k = 0; k < blocks.size(); ++k)
      {
        if (k != i && k != j)
        {
          next.push_back(blocks[k]);
        }
      }
      std::vector<UavId> joined = blocks[i];
      joined.insert(joined.end(), blocks[j].begin(), blocks[j].end());
      next.push_back(std::move(joined));
      if (Gamma(next, scenario) > threshold)
      {
        return false;
      }
    }
  }

  for (std::size_t i = 0; i < blocks.size(); ++i)
  {
    if (blocks[i].size() < 2)
    {
      continue;
    }
    for (auto &split : ProperSplits(blocks[i]))
    {
      std::vector<std::vector<UavId>> next;
      for (std::size_t k = 0; k < blocks.size(); ++k)
      {
        if (k != i)
        {
          next.push_back(blocks[k]);
        }
      }
      next.insert(next.end(), split.begin(), split.end());
      if (Gamma(next, scenario) > threshold)
      {
        return false;
      }
    }
  }
  return true;
}

}  // namespace uavfl::oracle
