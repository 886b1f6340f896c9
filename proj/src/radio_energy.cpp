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

#include "uavfl/radio_energy.hpp"

#include <cmath>
#include <limits>

namespace uavfl {

double DbToLinear(double value_db)
{
  return std::pow(10.0, value_db / 10.0);
}

double DbmPerHzToWattsPerHz(double value_dbm_per_hz)
{
  return std::pow(10.0, (value_dbm_per_hz - 30.0) / 10.0);
}

double TravelTime(const Uav &uav, const CellSpec &cell)
{
  return Distance(uav.depot, cell.position) / uav.velocity;
}

double FlyingEnergy(const Uav &uav, const CellSpec &cell, const RadioEnv &env)
{
  const double weight = 0.5 * env.cell_flight_weight + 0.5 * uav.flight_weight_depot;
  return weight * uav.flight_power * TravelTime(uav, cell);
}

double ComputeEnergy(const Uav &uav)
{
  return uav.cpu_coefficient * uav.cpu_cycles_per_aggregation * uav.cpu_frequency * uav.cpu_frequency;
}

double ShannonRate(double bandwidth, double signal_power, double gain_db, double interference, double noise_psd)
{
  if (!(bandwidth > 0.0))
  {
    throw std::invalid_argument("ShannonRate: bandwidth must be positive");
  }
  const double sinr = signal_power * DbToLinear(gain_db) / (interference + bandwidth * noise_psd);
  return bandwidth * std::log2(1.0 + sinr);
}

double TransmissionTime(double payload_bits, double rate)
{
  if (payload_bits == 0.0)
  {
    return 0.0;
  }
  if (!(rate > 0.0))
  {
    throw InfeasibleLinkError("zero rate with a nonzero payload");
  }
  return payload_bits / rate;
}

double UavUplinkRate(const Uav &uav, const RadioEnv &env)
{
  return ShannonRate(uav.bandwidth, uav.tx_power, uav.channel_gain_db, env.uplink_interference,
                     DbmPerHzToWattsPerHz(env.noise_psd_dbm_per_hz));
}

double WorkerUplinkRate(const RadioEnv &env)
{
  return ShannonRate(env.worker_bandwidth, env.worker_tx_power, env.worker_channel_gain_db,
                     env.uplink_interference, DbmPerHzToWattsPerHz(env.noise_psd_dbm_per_hz));
}

namespace {

double LinkEnergy(double power, double payload, double rate, const char *link)
{
  if (payload == 0.0)
  {
    return 0.0;
  }
  if (!(rate > 0.0))
  {
    throw InfeasibleLinkError(link);
  }
  return power * payload / rate;
}

}  // namespace

PerIterationEnergy ComputePerIterationEnergy(const Uav &uav, const CellSpec & /*cell*/, const RadioEnv &env,
                                             int selected_worker_count)
{
  if (selected_worker_count < 0)
  {
    throw std::invalid_argument("selected_worker_count must be nonnegative");
  }
  const double noise   = DbmPerHzToWattsPerHz(env.noise_psd_dbm_per_hz);
  const double workers = static_cast<double>(selected_worker_count);

  PerIterationEnergy e;
  e.transmit_to_owner = LinkEnergy(uav.tx_power, env.cell_aggregate_size, UavUplinkRate(uav, env), "uav->owner");

  const double owner_downlink = ShannonRate(env.owner_bandwidth, env.owner_tx_power, uav.channel_gain_db, 0.0, noise);
  e.receive_from_owner        = LinkEnergy(uav.rx_power, env.global_model_size, owner_downlink, "owner->uav");

  if (selected_worker_count > 0)
  {
    e.receive_from_workers =
      workers * LinkEnergy(uav.rx_power, env.worker_update_size, WorkerUplinkRate(env), "worker->uav");
    const double worker_downlink = ShannonRate(uav.bandwidth, uav.tx_power, env.worker_channel_gain_db, 0.0, noise);
    e.transmit_to_workers =
      workers * LinkEnergy(uav.tx_power, env.global_model_size, worker_downlink, "uav->worker");
  }

  e.compute = ComputeEnergy(uav);
  e.hover   = uav.hover_energy_per_iteration;
  e.circuit = uav.circuit_energy_per_iteration;
  return e;
}

int MaxIterations(const Uav &uav, const CellSpec &cell, const RadioEnv &env, int worker_count,
                  bool in_multi_uav_coalition)
{
  const double budget = uav.energy_capacity - 2.0 * FlyingEnergy(uav, cell, env) -
                        (in_multi_uav_coalition ? uav.cooperation_cost : 0.0);
  if (budget <= 0.0)
  {
    return 0;
  }
  const double per_iteration = ComputePerIterationEnergy(uav, cell, env, worker_count).total();
  if (per_iteration <= 0.0)
  {
    return std::numeric_limits<int>::max();
  }
  const double n = std::floor(budget / per_iteration);
  return n >= static_cast<double>(std::numeric_limits<int>::max()) ? std::numeric_limits<int>::max()
                                                                    : static_cast<int>(n);
}

}  // namespace uavfl
