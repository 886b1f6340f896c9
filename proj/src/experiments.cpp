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

#include "uavfl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uavfl/radio_energy.hpp"

namespace uavfl {

ExperimentRecord MakeRecord(std::string experiment, std::uint64_t seed, const Partition &partition,
                            const AuctionOutcome &outcome)
{
  ExperimentRecord r;
  r.experiment         = std::move(experiment);
  r.seed               = seed;
  r.partition          = partition;
  r.allocation         = outcome.allocation_string();
  r.total_profit       = outcome.total_profit;
  r.num_coalitions     = partition.size();
  r.max_coalition_size = partition.max_coalition_size();
  for (const auto &a : outcome.allocations)
  {
    r.rows.push_back({a.coalition, a.cell_id, a.payment, a.cost, a.profit});
  }
  return r;
}

double CompletionTime(const Allocation &allocation, const ScenarioConfig &scenario)
{
  const CellSpec &cell    = scenario.cell(allocation.cell_id);
  const RadioEnv &env     = scenario.radio;
  const double    noise   = DbmPerHzToWattsPerHz(env.noise_psd_dbm_per_hz);
  const bool      workers = SelectedWorkerCount(cell, scenario) > 0;

  double t = MaxTravelTime(allocation.coalition, cell, scenario);
  for (const auto &step : allocation.schedule.assignments)
  {
    const Uav &u          = scenario.uav(step.uav_id);
    double     per        = TransmissionTime(env.cell_aggregate_size, UavUplinkRate(u, env));
    per                  += TransmissionTime(env.global_model_size,
                                             ShannonRate(env.owner_bandwidth, env.owner_tx_power, u.channel_gain_db, 0.0, noise));
    if (workers)
    {
      // Workers use orthogonal blocks, so their uploads overlap in time.
      per += TransmissionTime(env.worker_update_size, WorkerUplinkRate(env));
      per += TransmissionTime(env.global_model_size,
                              ShannonRate(u.bandwidth, u.tx_power, env.worker_channel_gain_db, 0.0, noise));
    }
    per += u.cpu_cycles_per_aggregation / u.cpu_frequency;
    t += step.iterations * per;
  }
  return t;
}

RunResult RunPipeline(const ScenarioConfig &scenario, bool with_trace, bool with_oracle)
{
  RunResult r;
  MoveSink  sink;
  if (with_trace)
  {
    sink = [&](const MoveEvent &e) { r.trace.push_back(e); };
  }
  r.result = MergeAndSplit(scenario, sink);
  r.record = MakeRecord("run", scenario.game.rng_seed, r.result.partition, r.result.outcome);
  if (with_oracle)
  {
    r.oracle = oracle::ExhaustiveBestPartition(scenario);
  }
  return r;
}

std::vector<Coalition> DefaultTableCoalitions()
{
  return {Coalition{3}, Coalition{1, 3}, Coalition{2, 3}, Coalition{1, 2, 3}, Coalition{6}, Coalition{2, 6}};
}

std::vector<TableEntry> BuildTables(const ScenarioConfig &scenario, std::span<const Coalition> coalitions)
{
  std::vector<CellSpec> cells = scenario.cells;
  std::sort(cells.begin(), cells.end(), [](const CellSpec &a, const CellSpec &b) { return a.id < b.id; });

  std::vector<TableEntry> out;
  for (UavId id : scenario.uav_ids())
  {
    const Coalition single{id};
    for (const auto &cell : cells)
    {
      TableEntry e{"valuation", single, cell.id};
      e.feasible = Feasible(single, cell, scenario);
      if (e.feasible)
      {
        e.valuation = Valuation(cell, single, scenario);
      }
      out.push_back(e);
    }
  }
  for (const auto &c : coalitions)
  {
    for (UavId id : c.members())
    {
      scenario.uav(id);  // throws for ids missing from the scenario
    }
    for (const auto &cell : cells)
    {
      TableEntry e{"coalition_profit", c, cell.id};
      e.feasible = Feasible(c, cell, scenario);
      if (e.feasible)
      {
        e.valuation = Valuation(cell, c, scenario);
        const auto p = CoalitionProfit(c, cell, scenario);
        e.revenue    = p.revenue;
        e.cost       = p.cost;
        e.profit     = p.profit;
      }
      out.push_back(e);
    }
  }
  return out;
}

SweepParameter ParseSweepParameter(std::string_view text)
{
  if (text == "cooperation_cost")
  {
    return SweepParameter::CooperationCost;
  }
  if (text == "required_iterations")
  {
    return SweepParameter::RequiredIterations;
  }
  throw std::invalid_argument("unknown sweep parameter \"" + std::string(text) +
                              "\" (expected cooperation_cost or required_iterations)");
}

std::string_view ToString(SweepParameter p)
{
  return p == SweepParameter::CooperationCost ? "cooperation_cost" : "required_iterations";
}

ScenarioConfig WithParameter(const ScenarioConfig &scenario, SweepParameter p, double value)
{
  if (!std::isfinite(value))
  {
    throw std::invalid_argument("sweep values must be finite");
  }
  ScenarioConfig s = scenario;
  switch (p)
  {
    case SweepParameter::CooperationCost:
      for (auto &u : s.uavs)
      {
        u.cooperation_cost = value;
      }
      break;
    case SweepParameter::RequiredIterations:
      s.game.required_iterations = static_cast<int>(std::lround(value));
      break;
  }
  Validate(s);
  return s;
}

std::vector<ExperimentRecord> Sweep(const ScenarioConfig &scenario, SweepParameter p, std::span<const double> values)
{
  std::vector<ScenarioConfig> points;
  points.reserve(values.size());
  for (double v : values)
  {
    points.push_back(WithParameter(scenario, p, v));
  }
  std::vector<ExperimentRecord> out(values.size());
  const auto                    n = static_cast<long long>(values.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i)
  {
    const auto  k   = static_cast<std::size_t>(i);
    const auto  res = MergeAndSplit(points[k]);
    auto        rec = MakeRecord("sweep", scenario.game.rng_seed, res.partition, res.outcome);
    rec.swept_parameter = std::string(ToString(p));
    rec.swept_value     = values[k];
    out[k]              = std::move(rec);
  }
  return out;
}

double UniformUnit(std::mt19937_64 &rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double UniformIn(std::mt19937_64 &rng, double lo, double hi)
{
  return lo + (hi - lo) * UniformUnit(rng);
}

std::size_t UniformIndex(std::mt19937_64 &rng, std::size_t n)
{
  if (n == 0)
  {
    throw std::invalid_argument("UniformIndex: empty range");
  }
  return std::min(n - 1, static_cast<std::size_t>(UniformUnit(rng) * static_cast<double>(n)));
}

AuctionOutcome RandomAllocation(const Partition &partition, const ScenarioConfig &scenario, std::mt19937_64 &rng)
{
  std::vector<Coalition> order = partition.coalitions();
  for (std::size_t i = order.size(); i > 1; --i)
  {
    std::swap(order[i - 1], order[UniformIndex(rng, i)]);
  }

  std::vector<CellSpec> open = scenario.cells;
  std::sort(open.begin(), open.end(), [](const CellSpec &a, const CellSpec &b) { return a.id < b.id; });

  AuctionOutcome out;
  for (const auto &c : order)
  {
    std::vector<std::size_t>     candidates;
    std::vector<ProfitBreakdown> profits;
    for (std::size_t k = 0; k < open.size(); ++k)
    {
      if (!Feasible(c, open[k], scenario))
      {
        continue;
      }
      const auto p = CoalitionProfit(c, open[k], scenario);
      if (p.profit > 0.0)
      {
        candidates.push_back(k);
        profits.push_back(p);
      }
    }
    if (candidates.empty())
    {
      out.unallocated_coalitions.push_back(c);
      continue;
    }
    const std::size_t pick = UniformIndex(rng, candidates.size());
    const CellSpec   &cell = open[candidates[pick]];
    Allocation        a;
    a.coalition = c;
    a.cell_id   = cell.id;
    a.schedule  = ScheduleIterations(c, cell, scenario);
    a.valuation = Valuation(cell, c, scenario);
    a.bid       = a.valuation;
    a.payment   = profits[pick].revenue;
    a.cost      = profits[pick].cost;
    a.profit    = profits[pick].profit;
    a.round     = 1;
    out.allocations.push_back(std::move(a));
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(candidates[pick]));
  }
  std::sort(out.allocations.begin(), out.allocations.end(),
            [](const Allocation &a, const Allocation &b) { return a.coalition < b.coalition; });
  std::sort(out.unallocated_coalitions.begin(), out.unallocated_coalitions.end());
  for (const auto &a : out.allocations)
  {
    out.total_profit += a.profit;
  }
  for (const auto &cell : open)
  {
    out.unserved_cells.push_back(cell.id);
  }
  out.rounds = out.allocations.empty() ? 0 : 1;
  return out;
}

Partition RandomPartition(const ScenarioConfig &scenario, std::mt19937_64 &rng)
{
  const auto          ids   = scenario.uav_ids();
  const std::uint64_t count = BellNumber(static_cast<int>(ids.size()));
  const std::uint64_t index = std::min<std::uint64_t>(
    count - 1, static_cast<std::uint64_t>(UniformUnit(rng) * static_cast<double>(count)));
  std::uint64_t i = 0;
  Partition     chosen;
  ForEachPartition(ids, [&](const Partition &p) {
    if (i++ == index)
    {
      chosen = p;
    }
  });
  return chosen;
}

std::vector<ExperimentRecord> Compare(const ScenarioConfig &scenario, int rounds)
{
  if (rounds < 1)
  {
    throw std::invalid_argument("rounds must be at least 1");
  }
  const auto joint = MergeAndSplit(scenario);

  std::vector<ExperimentRecord> out;
  for (int r = 1; r <= rounds; ++r)
  {
    const std::uint64_t seed = scenario.game.rng_seed + static_cast<std::uint64_t>(r - 1);
    std::mt19937_64     rng(seed);

    const auto random_alloc = RandomAllocation(joint.partition, scenario, rng);
    const auto random_part  = RandomPartition(scenario, rng);
    const auto random_part_outcome = Allocate(random_part, scenario);

    for (auto rec : {MakeRecord("joint", seed, joint.partition, joint.outcome),
                     MakeRecord("random_allocation", seed, joint.partition, random_alloc),
                     MakeRecord("random_partition", seed, random_part, random_part_outcome)})
    {
      rec.swept_parameter = "round";
      rec.swept_value     = r;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<CommTimeDraw> CommTime(const ScenarioConfig &scenario, int draws)
{
  if (draws < 1)
  {
    throw std::invalid_argument("draws must be at least 1");
  }
  const auto     &t     = scenario.commtime;
  const RadioEnv &env   = scenario.radio;
  const double    noise = DbmPerHzToWattsPerHz(env.noise_psd_dbm_per_hz);
  std::mt19937_64 rng(scenario.game.rng_seed);

  std::vector<CommTimeDraw> out;
  out.reserve(static_cast<std::size_t>(draws));
  for (int d = 0; d < draws; ++d)
  {
    const double wb = UniformIn(rng, t.worker_bandwidth.min, t.worker_bandwidth.max);
    const double wp = UniformIn(rng, t.worker_tx_power.min, t.worker_tx_power.max);
    const double wh = UniformIn(rng, t.worker_channel_gain_db.min, t.worker_channel_gain_db.max);
    const double ub = UniformIn(rng, t.uav_bandwidth.min, t.uav_bandwidth.max);
    const double up = UniformIn(rng, t.uav_tx_power.min, t.uav_tx_power.max);
    const double uh = UniformIn(rng, t.uav_channel_gain_db.min, t.uav_channel_gain_db.max);

    CommTimeDraw row;
    row.draw        = d;
    row.worker_time = TransmissionTime(env.worker_update_size, ShannonRate(wb, wp, wh, env.uplink_interference, noise));
    row.uav_time    = TransmissionTime(env.cell_aggregate_size, ShannonRate(ub, up, uh, env.uplink_interference, noise));
    out.push_back(row);
  }
  return out;
}

}  // namespace uavfl
