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

#include <stdexcept>
#include <string>

#include "uavfl/scenario.hpp"

namespace uavfl {

/// A link whose rate is zero while it still has a payload to carry.
class InfeasibleLinkError : public std::runtime_error
{
public:
  explicit InfeasibleLinkError(const std::string &link)
    : std::runtime_error("infeasible link: " + link)
  {}
};

double DbToLinear(double value_db);
double DbmPerHzToWattsPerHz(double value_dbm_per_hz);

/// One leg from the UAV depot to the cell, in joules. Round trips cost twice
/// this amount.
double FlyingEnergy(const Uav &uav, const CellSpec &cell, const RadioEnv &env);

/// Seconds for the UAV to reach the cell at its own velocity.
double TravelTime(const Uav &uav, const CellSpec &cell);

/// kappa * cycles * f^2, joules per iteration.
double ComputeEnergy(const Uav &uav);

/// Shannon rate of one resource block, bits per second. Channel gain is a
/// dB ratio; the noise density is in W/Hz.
double ShannonRate(double bandwidth, double signal_power, double gain_db, double interference,
                   double noise_psd);

/// Energy spent by one UAV during one FL iteration in one cell.
struct PerIterationEnergy
{
  double receive_from_workers = 0.0;
  double receive_from_owner   = 0.0;
  double transmit_to_owner    = 0.0;
  double transmit_to_workers  = 0.0;
  double compute              = 0.0;
  double hover                = 0.0;
  double circuit              = 0.0;

  double total() const
  {
    return receive_from_workers + receive_from_owner + transmit_to_owner + transmit_to_workers + compute +
           hover + circuit;
  }
};

/// All workers in a cell share the representative radio profile in `env`.
PerIterationEnergy ComputePerIterationEnergy(const Uav &uav, const CellSpec &cell, const RadioEnv &env,
                                             int selected_worker_count);

/// Whole iterations the UAV can support in the cell after the round-trip
/// flight and, inside a multi-UAV coalition, its cooperation cost. Zero
/// when the flight alone exhausts the battery.
int MaxIterations(const Uav &uav, const CellSpec &cell, const RadioEnv &env, int worker_count,
                  bool in_multi_uav_coalition);

double TransmissionTime(double payload_bits, double rate);

/// Uplink rate of the UAV to the model owner (one resource block).
double UavUplinkRate(const Uav &uav, const RadioEnv &env);

/// Uplink rate of a representative worker to its UAV.
double WorkerUplinkRate(const RadioEnv &env);

}  // namespace uavfl
