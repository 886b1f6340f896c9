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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uavfl {

using UavId = int;
using CellId = int;

/// Bits in one megabyte as used by scenario files.
inline constexpr double kBitsPerMegabyte = 8.0e6;

struct Point
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point &, const Point &) = default;
};

double Distance(Point a, Point b);

/// Raised for malformed or invalid scenario documents. `path()` names the
/// offending field (e.g. "uavs[2].energy_capacity"), or is empty for
/// document-level parse errors.
class ScenarioError : public std::runtime_error
{
public:
  ScenarioError(std::string path, const std::string &message);

  const std::string &path() const noexcept
  {
    return path_;
  }

private:
  std::string path_;
};

struct WorkerSpec
{
  int    id            = 0;
  CellId cell_id       = 0;
  double sampling_rate = 0.0;  // samples per second

  friend bool operator==(const WorkerSpec &, const WorkerSpec &) = default;
};

struct CellSpec
{
  CellId                  id = 0;
  Point                   position;
  double                  price_per_importance = 0.0;
  std::optional<double>   importance_override;
  std::vector<WorkerSpec> workers;

  friend bool operator==(const CellSpec &, const CellSpec &) = default;
};

struct Uav
{
  UavId  id = 0;
  Point  depot;
  double energy_capacity              = 0.0;    // J
  double velocity                     = 10.0;   // m/s
  double flight_power                 = 1.0;    // W
  double flight_weight_depot          = 1.0;
  double cooperation_cost             = 2.0;    // per membership in a multi-UAV coalition
  double energy_price                 = 0.03;   // currency per J
  double cpu_cycles_per_aggregation   = 1.0e9;
  double cpu_frequency                = 1.0e8;  // Hz
  double cpu_coefficient              = 1.0e-26;
  double bandwidth                    = 0.0;    // Hz
  double tx_power                     = 0.0;    // W
  double rx_power                     = 0.0;    // W
  double channel_gain_db              = 0.0;
  double hover_energy_per_iteration   = 5.0;    // J
  double circuit_energy_per_iteration = 5.0;    // J

  friend bool operator==(const Uav &, const Uav &) = default;
};

struct RadioEnv
{
  double noise_psd_dbm_per_hz   = -174.0;
  double uplink_interference    = 0.0;      // W per resource block
  double owner_bandwidth        = 5.0e6;    // Hz
  double owner_tx_power         = 10.0;     // W
  double global_model_size      = 1.2e10;   // bits
  double cell_aggregate_size    = 4.0e9;    // bits
  double worker_update_size     = 8.0e8;    // bits
  double worker_bandwidth       = 1.5e5;    // Hz
  double worker_tx_power        = 1.0e-2;   // W
  double worker_channel_gain_db = 2.0;
  double cell_flight_weight     = 1.0;

  friend bool operator==(const RadioEnv &, const RadioEnv &) = default;
};

enum class PaymentRule
{
  BidPrice,
  SecondPrice,
};

std::string_view ToString(PaymentRule rule);
PaymentRule      ParsePaymentRule(std::string_view text);

struct GameParams
{
  int           required_iterations   = 20;
  double        importance_threshold  = 1.0;
  double        weight_importance     = 0.5;
  double        weight_latency        = 0.5;
  double        latency_scale         = 1000.0;  // s
  double        min_travel_time       = 1.0e-6;  // s, floor for zero-distance coalitions
  PaymentRule   payment_rule          = PaymentRule::BidPrice;
  std::uint64_t rng_seed              = 1;

  friend bool operator==(const GameParams &, const GameParams &) = default;
};

/// Closed interval used when drawing radio parameters uniformly.
struct Range
{
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const Range &, const Range &) = default;
};

/// Parameter ranges sampled by the communication-time experiment.
struct CommTimeRanges
{
  Range worker_bandwidth{5.0e4, 1.5e5};
  Range worker_tx_power{1.0e-3, 1.0e-2};
  Range worker_channel_gain_db{2.0, 8.0};
  Range uav_bandwidth{2.0e5, 4.0e5};
  Range uav_tx_power{0.5, 5.0};
  Range uav_channel_gain_db{5.0, 25.0};

  friend bool operator==(const CommTimeRanges &, const CommTimeRanges &) = default;
};

struct ScenarioConfig
{
  double                grid_width  = 1000.0;
  double                grid_height = 1000.0;
  std::vector<CellSpec> cells;
  std::vector<Uav>      uavs;
  RadioEnv              radio;
  GameParams            game;
  CommTimeRanges        commtime;

  const CellSpec &cell(CellId id) const;
  const Uav      &uav(UavId id) const;
  std::vector<UavId> uav_ids() const;

  friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

/// log10(s + 1) / log10(20): concave, nondecreasing, 1 at 19 sps.
double WorkerImportance(double sampling_rate);

/// Workers whose importance strictly exceeds `threshold`, in input order.
std::vector<WorkerSpec> SelectWorkers(const CellSpec &cell, double threshold);

double CellImportance(const CellSpec &cell, double threshold);

/// Checks every invariant and throws ScenarioError naming the first
/// violated field.
void Validate(const ScenarioConfig &config);

ScenarioConfig LoadScenario(std::string_view document);
ScenarioConfig LoadScenarioFile(const std::filesystem::path &path);
std::string    SerializeScenario(const ScenarioConfig &config);

}  // namespace uavfl
