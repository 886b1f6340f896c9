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

#include "uavfl/merge_split.hpp"

#include <optional>

namespace uavfl {

std::string_view ToString(MoveKind kind)
{
  switch (kind)
  {
    case MoveKind::Initial:
      return "initial";
    case MoveKind::Merge:
      return "merge";
    case MoveKind::Split:
      return "split";
  }
  return "unknown";
}

namespace {

struct Candidate
{
  Partition      partition;
  AuctionOutcome outcome;
};

std::optional<Candidate> FirstImprovingMerge(const Partition &current, double gamma, const ScenarioConfig &scenario)
{
  const std::size_t n = current.size();
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = i + 1; j < n; ++j)
    {
      Partition next    = current.merged(i, j);
      auto      outcome = Allocate(next, scenario);
      if (outcome.total_profit > gamma + kImprovementTolerance)
      {
        return Candidate{std::move(next), std::move(outcome)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Candidate> FirstImprovingSplit(const Partition &current, double gamma, const ScenarioConfig &scenario)
{
  for (std::size_t i = 0; i < current.size(); ++i)
  {
    const Coalition &c = current.coalitions()[i];
    if (c.size() < 2)
    {
      continue;
    }
    for (const auto &parts : SplitsOf(c))
    {
      Partition next    = current.replaced(i, parts);
      auto      outcome = Allocate(next, scenario);
      if (outcome.total_profit > gamma + kImprovementTolerance)
      {
        return Candidate{std::move(next), std::move(outcome)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MergeSplitResult MergeAndSplit(const Partition &initial, const ScenarioConfig &scenario, const MoveSink &sink)
{
  if (!initial.covers(scenario.uav_ids()))
  {
    throw std::invalid_argument("initial partition does not cover the UAV set");
  }
  MergeSplitResult r;
  r.partition = initial;
  r.outcome   = Allocate(initial, scenario);
  if (sink)
  {
    sink({MoveKind::Initial, initial, initial, r.outcome.total_profit, r.outcome.total_profit, r.outcome});
  }

  auto commit = [&](MoveKind kind, Candidate &&c) {
    MoveEvent ev{kind, r.partition, c.partition, r.outcome.total_profit, c.outcome.total_profit, {}};
    r.partition = std::move(c.partition);
    r.outcome   = std::move(c.outcome);
    ++r.moves;
    if (sink)
    {
      ev.outcome = r.outcome;
      sink(ev);
    }
  };

  bool changed = true;
  while (changed)
  {
    changed = false;
    while (auto c = FirstImprovingMerge(r.partition, r.outcome.total_profit, scenario))
    {
      commit(MoveKind::Merge, std::move(*c));
      changed = true;
    }
    while (auto c = FirstImprovingSplit(r.partition, r.outcome.total_profit, scenario))
    {
      commit(MoveKind::Split, std::move(*c));
      changed = true;
    }
  }
  return r;
}

MergeSplitResult MergeAndSplit(const ScenarioConfig &scenario, const MoveSink &sink)
{
  return MergeAndSplit(Partition::Singletons(scenario.uav_ids()), scenario, sink);
}

bool IsMergeSplitStable(const Partition &partition, const ScenarioConfig &scenario)
{
  const double gamma = Allocate(partition, scenario).total_profit;
  return !FirstImprovingMerge(partition, gamma, scenario) && !FirstImprovingSplit(partition, gamma, scenario);
}

}  // namespace uavfl
