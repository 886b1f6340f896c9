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

#include "uavfl/auction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "uavfl/radio_energy.hpp"

namespace uavfl {

const Allocation *AuctionOutcome::find(const Coalition &coalition) const
{
  for (const auto &a : allocations)
  {
    if (a.coalition == coalition)
    {
      return &a;
    }
  }
  return nullptr;
}

const Allocation *AuctionOutcome::find_cell(CellId cell) const
{
  for (const auto &a : allocations)
  {
    if (a.cell_id == cell)
    {
      return &a;
    }
  }
  return nullptr;
}

std::string AuctionOutcome::allocation_string() const
{
  std::string out;
  for (const auto &a : allocations)
  {
    if (!out.empty())
    {
      out += ';';
    }
    out += a.coalition.to_string() + "->" + std::to_string(a.cell_id);
  }
  return out;
}

double MaxTravelTime(const Coalition &coalition, const CellSpec &cell, const ScenarioConfig &scenario)
{
  double t = 0.0;
  for (UavId id : coalition.members())
  {
    t = std::max(t, TravelTime(scenario.uav(id), cell));
  }
  return t;
}

double Valuation(const CellSpec &cell, const Coalition &coalition, const ScenarioConfig &scenario)
{
  if (coalition.empty())
  {
    throw std::invalid_argument("valuation of an empty coalition");
  }
  const GameParams &g     = scenario.game;
  const double      sigma = CellImportance(cell, g.importance_threshold);
  const double      t     = std::max(MaxTravelTime(coalition, cell, scenario), g.min_travel_time);
  return g.weight_importance * cell.price_per_importance * sigma + g.weight_latency * g.latency_scale / t;
}

bool Feasible(const Coalition &coalition, const CellSpec &cell, const ScenarioConfig &scenario)
{
  long long total = 0;
  for (UavId id : coalition.members())
  {
    total += MemberCapacity(coalition, id, cell, scenario);
  }
  return total >= scenario.game.required_iterations;
}

std::vector<Bid> BidsFor(const Coalition &coalition, const ScenarioConfig &scenario)
{
  std::vector<Bid> bids;
  for (const auto &cell : scenario.cells)
  {
    if (Feasible(coalition, cell, scenario))
    {
      bids.push_back({cell.id, coalition, Valuation(cell, coalition, scenario)});
    }
  }
  std::sort(bids.begin(), bids.end(), [](const Bid &a, const Bid &b) { return a.cell_id < b.cell_id; });
  return bids;
}

std::vector<Bid> CollectBids(const Partition &partition, const ScenarioConfig &scenario)
{
  std::vector<Bid> bids;
  for (const auto &c : partition.coalitions())
  {
    auto part = BidsFor(c, scenario);
    bids.insert(bids.end(), part.begin(), part.end());
  }
  std::stable_sort(bids.begin(), bids.end(), [](const Bid &a, const Bid &b) { return a.cell_id < b.cell_id; });
  return bids;
}

double Payment(std::span<const Bid> bids_for_coalition, CellId winner, PaymentRule rule)
{
  if (bids_for_coalition.empty())
  {
    throw std::invalid_argument("payment: no bids");
  }
  const Bid *own   = nullptr;
  double     other = -std::numeric_limits<double>::infinity();
  for (const auto &b : bids_for_coalition)
  {
    if (b.cell_id == winner)
    {
      own = &b;
    }
    else
    {
      other = std::max(other, b.value);
    }
  }
  if (own == nullptr)
  {
    throw std::invalid_argument("payment: winner " + std::to_string(winner) + " did not bid");
  }
  if (rule == PaymentRule::BidPrice || bids_for_coalition.size() == 1)
  {
    return own->value;
  }
  return other;
}

double CoalitionCost(const Coalition &coalition, const CellSpec &cell, const IterationSchedule &schedule,
                     const ScenarioConfig &scenario)
{
  const bool multi   = coalition.size() >= 2;
  const int  workers = SelectedWorkerCount(cell, scenario);
  double     cost    = 0.0;
  for (UavId id : coalition.members())
  {
    const Uav &u      = scenario.uav(id);
    double     energy = 2.0 * FlyingEnergy(u, cell, scenario.radio);
    const int  n      = schedule.iterations_of(id);
    if (n > 0)
    {
      energy += n * ComputePerIterationEnergy(u, cell, scenario.radio, workers).total();
    }
    cost += u.energy_price * energy;
    if (multi)
    {
      cost += u.cooperation_cost;
    }
  }
  return cost;
}

ProfitBreakdown CoalitionProfit(const Coalition &coalition, const CellSpec &cell, const ScenarioConfig &scenario)
{
  if (!Feasible(coalition, cell, scenario))
  {
    throw std::invalid_argument("coalition " + coalition.to_string() + " is infeasible for cell " +
                                std::to_string(cell.id));
  }
  const auto      bids = BidsFor(coalition, scenario);
  ProfitBreakdown p;
  p.revenue = Payment(bids, cell.id, scenario.game.payment_rule);
  p.cost    = CoalitionCost(coalition, cell, ScheduleIterations(coalition, cell, scenario), scenario);
  p.profit  = p.revenue - p.cost;
  return p;
}

namespace {

// Everything the rounds need about one (coalition, cell) pair.
struct PairInfo
{
  bool   feasible  = false;
  double valuation = 0.0;
  double bid       = 0.0;
  double cost      = 0.0;
};

struct Target
{
  std::size_t cell_index = 0;
  double      payment    = 0.0;
  double      profit     = 0.0;
};

}  // namespace

AuctionOutcome Allocate(const Partition &partition, const ScenarioConfig &scenario)
{
  return Allocate(partition, scenario, nullptr);
}

AuctionOutcome Allocate(const Partition &partition, const ScenarioConfig &scenario, const BidReporter &reporter)
{
  const auto &coalitions = partition.coalitions();
  const auto &cells      = scenario.cells;
  const auto  nc         = coalitions.size();
  const auto  nk         = cells.size();

  std::vector<PairInfo> info(nc * nk);
  for (std::size_t s = 0; s < nc; ++s)
  {
    for (std::size_t k = 0; k < nk; ++k)
    {
      PairInfo &p = info[s * nk + k];
      p.feasible  = Feasible(coalitions[s], cells[k], scenario);
      if (!p.feasible)
      {
        continue;
      }
      p.valuation = Valuation(cells[k], coalitions[s], scenario);
      p.bid       = reporter ? reporter(cells[k].id, coalitions[s], p.valuation) : p.valuation;
      if (p.bid < 0.0)
      {
        p.feasible = false;  // a negative report withdraws the bid
        continue;
      }
      p.cost = CoalitionCost(coalitions[s], cells[k], ScheduleIterations(coalitions[s], cells[k], scenario), scenario);
    }
  }

  std::vector<bool> coalition_open(nc, true);
  std::vector<bool> cell_open(nk, true);
  const PaymentRule rule = scenario.game.payment_rule;

  // Cells sorted by id so ties resolve to the smaller id regardless of the
  // order they appear in the scenario.
  std::vector<std::size_t> cell_order(nk);
  for (std::size_t k = 0; k < nk; ++k)
  {
    cell_order[k] = k;
  }
  std::sort(cell_order.begin(), cell_order.end(),
            [&](std::size_t a, std::size_t b) { return cells[a].id < cells[b].id; });

  auto target_of = [&](std::size_t s) -> std::optional<Target> {
    std::optional<Target> best;
    if (rule == PaymentRule::SecondPrice)
    {
      // Only the top remaining bidder can win; it pays the runner-up bid.
      std::optional<std::size_t> top;
      double                     second = -1.0;
      int                        bidders = 0;
      for (std::size_t k : cell_order)
      {
        const PairInfo &p = info[s * nk + k];
        if (!cell_open[k] || !p.feasible)
        {
          continue;
        }
        ++bidders;
        if (!top || p.bid > info[s * nk + *top].bid)
        {
          if (top)
          {
            second = std::max(second, info[s * nk + *top].bid);
          }
          top = k;
        }
        else
        {
          second = std::max(second, p.bid);
        }
      }
      if (!top)
      {
        return best;
      }
      const PairInfo &p       = info[s * nk + *top];
      const double    payment = bidders >= 2 ? second : p.bid;
      if (payment - p.cost > 0.0)
      {
        best = Target{*top, payment, payment - p.cost};
      }
      return best;
    }
    for (std::size_t k : cell_order)
    {
      const PairInfo &p = info[s * nk + k];
      if (!cell_open[k] || !p.feasible)
      {
        continue;
      }
      const double profit = p.bid - p.cost;
      if (profit > 0.0 && (!best || profit > best->profit))
      {
        best = Target{k, p.bid, profit};
      }
    }
    return best;
  };

  AuctionOutcome out;
  for (int round = 1;; ++round)
  {
    // Every open coalition names its target; each targeted cell then takes
    // the suitor it bids highest for.
    std::map<std::size_t, std::vector<std::pair<std::size_t, Target>>> suitors;
    for (std::size_t s = 0; s < nc; ++s)
    {
      if (!coalition_open[s])
      {
        continue;
      }
      if (auto t = target_of(s))
      {
        suitors[t->cell_index].emplace_back(s, *t);
      }
    }
    if (suitors.empty())
    {
      break;
    }
    out.rounds = round;
    for (const auto &[k, list] : suitors)
    {
      const std::pair<std::size_t, Target> *winner = nullptr;
      for (const auto &entry : list)
      {
        // Coalitions are in canonical order, so a strict comparison keeps
        // the smaller coalition on ties.
        if (winner == nullptr || info[entry.first * nk + k].bid > info[winner->first * nk + k].bid)
        {
          winner = &entry;
        }
      }
      const std::size_t s = winner->first;
      const PairInfo   &p = info[s * nk + k];
      Allocation        a;
      a.coalition = coalitions[s];
      a.cell_id   = cells[k].id;
      a.schedule  = ScheduleIterations(coalitions[s], cells[k], scenario);
      a.bid       = p.bid;
      a.valuation = p.valuation;
      a.payment   = winner->second.payment;
      a.cost      = p.cost;
      a.profit    = winner->second.profit;
      a.round     = round;
      out.allocations.push_back(std::move(a));
      coalition_open[s] = false;
      cell_open[k]      = false;
    }
  }

  std::sort(out.allocations.begin(), out.allocations.end(),
            [](const Allocation &a, const Allocation &b) { return a.coalition < b.coalition; });
  for (const auto &a : out.allocations)
  {
    out.total_profit += a.profit;
  }
  for (std::size_t s = 0; s < nc; ++s)
  {
    if (coalition_open[s])
    {
      out.unallocated_coalitions.push_back(coalitions[s]);
    }
  }
  for (std::size_t k : cell_order)
  {
    if (cell_open[k])
    {
      out.unserved_cells.push_back(cells[k].id);
    }
  }
  return out;
}

double CellUtility(CellId cell, const Coalition &coalition, const AuctionOutcome &outcome)
{
  const Allocation *a = outcome.find(coalition);
  if (a == nullptr || a->cell_id != cell)
  {
    return 0.0;
  }
  return a->valuation - a->payment;
}

double CellRevenueRate(const CellSpec &cell, double importance_threshold, double completion_time)
{
  if (!(completion_time > 0.0))
  {
    throw std::invalid_argument("completion time must be positive");
  }
  return cell.price_per_importance * CellImportance(cell, importance_threshold) / completion_time;
}

}  // namespace uavfl
