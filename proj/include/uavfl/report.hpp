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

#include <ostream>
#include <span>
#include <string>

#include "uavfl/experiments.hpp"

namespace uavfl::report {

/// Fixed six-decimal formatting used by every CSV column.
std::string Number(double value);

/// Header of the record CSV. One "summary" line per record followed by one
/// "coalition" line per allocated coalition.
inline constexpr const char *kRecordHeader =
  "record_type,experiment,seed,swept_parameter,swept_value,partition,allocation,total_profit,"
  "num_coalitions,max_coalition_size,coalition,cell,revenue,cost,profit";

inline constexpr const char *kTableHeader = "table,coalition,cell,feasible,valuation,revenue,cost,profit";

inline constexpr const char *kCommTimeHeader = "draw,worker_time,uav_time";

void WriteRecordsCsv(std::ostream &out, std::span<const ExperimentRecord> records);
void WriteTablesCsv(std::ostream &out, std::span<const TableEntry> entries);
void WriteCommTimeCsv(std::ostream &out, std::span<const CommTimeDraw> draws);

/// Trace events and the oracle report as extra CSV sections, each with
/// its own header line.
void WriteTraceCsv(std::ostream &out, std::span<const MoveEvent> trace);
void WriteOracleCsv(std::ostream &out, const oracle::Report &report);

std::string RecordsJson(std::span<const ExperimentRecord> records);
std::string RunJson(const RunResult &run, const ScenarioConfig &scenario);
std::string TablesJson(std::span<const TableEntry> entries);
std::string CommTimeJson(std::span<const CommTimeDraw> draws);

}  // namespace uavfl::report
