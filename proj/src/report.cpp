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

#include "uavfl/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace uavfl::report {

using json = nlohmann::ordered_json;

std::string Number(double value)
{
  if (value == 0.0)
  {
    value = 0.0;  // no "-0.000000"
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000")
  {
    s = "0.000000";
  }
  return s;
}

namespace {

// Partition and allocation strings contain commas.
std::string Quoted(const std::string &s)
{
  std::string out = "\"";
  for (char c : s)
  {
    if (c == '"')
    {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string SummaryPrefix(const char *type, const ExperimentRecord &r)
{
  std::string line = type;
  line += ',' + r.experiment;
  line += ',' + std::to_string(r.seed);
  line += ',' + r.swept_parameter;
  line += ',' + (r.swept_value ? Number(*r.swept_value) : std::string());
  line += ',' + Quoted(r.partition.to_string());
  line += ',' + Quoted(r.allocation);
  line += ',' + Number(r.total_profit);
  line += ',' + std::to_string(r.num_coalitions);
  line += ',' + std::to_string(r.max_coalition_size);
  return line;
}

json ToJson(const IterationSchedule &s)
{
  json a = json::array();
  for (const auto &x : s.assignments)
  {
    a.push_back({{"uav", x.uav_id}, {"iterations", x.iterations}});
  }
  return a;
}

json ToJson(const AuctionOutcome &o)
{
  json j;
  j["allocations"] = json::array();
  for (const auto &a : o.allocations)
  {
    j["allocations"].push_back({{"coalition", a.coalition.to_string()},
                                {"cell", a.cell_id},
                                {"round", a.round},
                                {"bid", a.bid},
                                {"payment", a.payment},
                                {"cost", a.cost},
                                {"profit", a.profit},
                                {"schedule", ToJson(a.schedule)}});
  }
  j["unallocated_coalitions"] = json::array();
  for (const auto &c : o.unallocated_coalitions)
  {
    j["unallocated_coalitions"].push_back(c.to_string());
  }
  j["unserved_cells"] = o.unserved_cells;
  j["total_profit"]   = o.total_profit;
  return j;
}

json ToJson(const ExperimentRecord &r)
{
  json j;
  j["experiment"]      = r.experiment;
  j["seed"]            = r.seed;
  j["swept_parameter"] = r.swept_parameter;
  j["swept_value"]     = r.swept_value ? json(*r.swept_value) : json(nullptr);
  j["partition"]       = r.partition.to_string();
  j["allocation"]      = r.allocation;
  j["total_profit"]    = r.total_profit;
  j["num_coalitions"]  = r.num_coalitions;
  j["max_coalition_size"] = r.max_coalition_size;
  j["coalitions"]         = json::array();
  for (const auto &row : r.rows)
  {
    j["coalitions"].push_back({{"coalition", row.coalition.to_string()},
                               {"cell", row.cell},
                               {"revenue", row.revenue},
                               {"cost", row.cost},
                               {"profit", row.profit}});
  }
  return j;
}

json ToJson(const oracle::Report &r)
{
  return {{"best_partition", r.best_partition.to_string()},
          {"best_total_profit", r.best_total_profit},
          {"algorithm_partition", r.algorithm_partition.to_string()},
          {"algorithm_total_profit", r.algorithm_total_profit},
          {"optimality_gap", r.optimality_gap},
          {"stability_certified", r.stability_certified},
          {"partitions_evaluated", r.partitions_evaluated}};
}

}  // namespace

void WriteRecordsCsv(std::ostream &out, std::span<const ExperimentRecord> records)
{
  out << kRecordHeader << '\n';
  for (const auto &r : records)
  {
    out << SummaryPrefix("summary", r) << ",,,,,\n";
    for (const auto &row : r.rows)
    {
      out << SummaryPrefix("coalition", r) << ',' << Quoted(row.coalition.to_string()) << ',' << row.cell << ','
          << Number(row.revenue) << ',' << Number(row.cost) << ',' << Number(row.profit) << '\n';
    }
  }
}

void WriteTablesCsv(std::ostream &out, std::span<const TableEntry> entries)
{
  out << kTableHeader << '\n';
  for (const auto &e : entries)
  {
    out << e.table << ',' << Quoted(e.coalition.to_string()) << ',' << e.cell << ',' << (e.feasible ? 1 : 0)
        << ',' << Number(e.valuation) << ',' << Number(e.revenue) << ',' << Number(e.cost) << ','
        << Number(e.profit) << '\n';
  }
}

void WriteCommTimeCsv(std::ostream &out, std::span<const CommTimeDraw> draws)
{
  out << kCommTimeHeader << '\n';
  for (const auto &d : draws)
  {
    out << d.draw << ',' << Number(d.worker_time) << ',' << Number(d.uav_time) << '\n';
  }
}

void WriteTraceCsv(std::ostream &out, std::span<const MoveEvent> trace)
{
  out << "step,move,before,after,gamma_before,gamma_after,allocation\n";
  int step = 0;
  for (const auto &e : trace)
  {
    out << step++ << ',' << ToString(e.kind) << ',' << Quoted(e.before.to_string()) << ','
        << Quoted(e.after.to_string()) << ',' << Number(e.gamma_before) << ',' << Number(e.gamma_after) << ','
        << Quoted(e.outcome.allocation_string()) << '\n';
  }
}

void WriteOracleCsv(std::ostream &out, const oracle::Report &r)
{
  out << "best_partition,best_total_profit,algorithm_partition,algorithm_total_profit,optimality_gap,"
         "stability_certified,partitions_evaluated\n";
  out << Quoted(r.best_partition.to_string()) << ',' << Number(r.best_total_profit) << ','
      << Quoted(r.algorithm_partition.to_string()) << ',' << Number(r.algorithm_total_profit) << ','
      << Number(r.optimality_gap) << ',' << (r.stability_certified ? "true" : "false") << ','
      << r.partitions_evaluated << '\n';
}

std::string RecordsJson(std::span<const ExperimentRecord> records)
{
  json a = json::array();
  for (const auto &r : records)
  {
    a.push_back(ToJson(r));
  }
  return json{{"records", a}}.dump(2) + "\n";
}

std::string RunJson(const RunResult &run, const ScenarioConfig &scenario)
{
  json j;
  j["record"]  = ToJson(run.record);
  j["outcome"] = ToJson(run.result.outcome);
  json info    = json::array();
  for (const auto &a : run.result.outcome.allocations)
  {
    const double t = CompletionTime(a, scenario);
    info.push_back({{"coalition", a.coalition.to_string()},
                    {"cell", a.cell_id},
                    {"completion_time", t},
                    {"cell_revenue_rate",
                     CellRevenueRate(scenario.cell(a.cell_id), scenario.game.importance_threshold, t)}});
  }
  j["informational"] = info;
  j["moves"]         = run.result.moves;
  if (!run.trace.empty())
  {
    json t = json::array();
    for (const auto &e : run.trace)
    {
      t.push_back({{"move", std::string(ToString(e.kind))},
                   {"before", e.before.to_string()},
                   {"after", e.after.to_string()},
                   {"gamma_before", e.gamma_before},
                   {"gamma_after", e.gamma_after},
                   {"gamma_delta", e.gamma_after - e.gamma_before},
                   {"outcome", ToJson(e.outcome)}});
    }
    j["trace"] = t;
  }
  if (run.oracle)
  {
    j["oracle"] = ToJson(*run.oracle);
  }
  return j.dump(2) + "\n";
}

std::string TablesJson(std::span<const TableEntry> entries)
{
  json a = json::array();
  for (const auto &e : entries)
  {
    a.push_back({{"table", e.table},
                 {"coalition", e.coalition.to_string()},
                 {"cell", e.cell},
                 {"feasible", e.feasible},
                 {"valuation", e.valuation},
                 {"revenue", e.revenue},
                 {"cost", e.cost},
                 {"profit", e.profit}});
  }
  return json{{"tables", a}}.dump(2) + "\n";
}

std::string CommTimeJson(std::span<const CommTimeDraw> draws)
{
  json a = json::array();
  for (const auto &d : draws)
  {
    a.push_back({{"draw", d.draw}, {"worker_time", d.worker_time}, {"uav_time", d.uav_time}});
  }
  return json{{"draws", a}}.dump(2) + "\n";
}

}  // namespace uavfl::report
