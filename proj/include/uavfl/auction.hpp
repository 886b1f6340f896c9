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

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavfl/coalition.hpp"
#include "uavfl/scenario.hpp"

namespace uavfl {

struct Bid
{
  CellId    cell_id = 0;
  Coalition coalition;
  double    value = 0.0;
};

/// One allocated (coalition, cell) pair. `bid` is the reported bid of the
/// cell, `valuation` its true value; they differ only when bids are
/// overridden.
struct Allocation
{
  Coalition         coalition;
  CellId            cell_id = 0;
  IterationSchedule schedule;
  double            bid       = 0.0;
  double            valuation = 0.0;
  double            payment   = 0.0;
  double            cost      = 0.0;
  double            profit    = 0.0;
  int               round     = 0;
};

struct AuctionOutcome
{
  std::vector<Allocation> allocations;  // in coalition canonical order
  std::vector<Coalition>  unallocated_coalitions;
  std::vector<CellId>     unserved_cells;
  double                  total_profit = 0.0;
  int                     rounds       = 0;

  const Allocation *find(const Coalition &coalition) const;
  const Allocation *find_cell(CellId cell) const;

  /// "{1,3}->1;{4}->2", empty when nothing is allocated.
  std::string allocation_string() const;
};

/// Maps a truthful valuation to the bid a cell actually reports.
using BidReporter = std::function<double(CellId cell, const Coalition &coalition, double valuation)>;

double MaxTravelTime(const Coalition &coalition, const CellSpec &cell, const ScenarioConfig &scenario);

/// theta1 * q * sigma + theta2 * C / (max member travel time).
double Valuation(const CellSpec &cell, const Coalition &coalition, const ScenarioConfig &scenario);

/// Summed member capacity reaches the required iteration count.
bool Feasible(const Coalition &coalition, const CellSpec &cell, const ScenarioConfig &scenario);

/// Truthful bids of every cell for every feasible coalition, ordered by
/// cell id then coalition.
std::vector<Bid> CollectBids(const Partition &partition, const ScenarioConfig &scenario);

/// Bids of every cell for one coalition (feasible pairs only), by cell id.
std::vector<Bid> BidsFor(const Coalition &coalition, const ScenarioConfig &scenario);

/// Price paid by `winner`. Second price falls back to the winner's own bid
/// when it is the only bidder.
double Payment(std::span<const Bid> bids_for_coalition, CellId winner, PaymentRule rule);

double CoalitionCost(const Coalition &coalition, const CellSpec &cell, const IterationSchedule &schedule,
                     const ScenarioConfig &scenario);

struct ProfitBreakdown
{
  double revenue = 0.0;
  double cost    = 0.0;
  double profit  = 0.0;
};

/// Revenue is the payment under the configured rule against all cells'
/// bids. Throws std::invalid_argument for an infeasible pair.
ProfitBreakdown CoalitionProfit(const Coalition &coalition, const CellSpec &cell, const ScenarioConfig &scenario);

/// Round-based greedy allocation of coalitions to cells.
AuctionOutcome Allocate(const Partition &partition, const ScenarioConfig &scenario);
AuctionOutcome Allocate(const Partition &partition, const ScenarioConfig &scenario, const BidReporter &reporter);

/// Valuation minus payment for the allocated pair, 0 otherwise.
double CellUtility(CellId cell, const Coalition &coalition, const AuctionOutcome &outcome);

/// q * sigma / t_c. Informational only.
double CellRevenueRate(const CellSpec &cell, double importance_threshold, double completion_time);

}  // namespace uavfl
