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

// uavfl: command-line front end for the coalition/auction simulator.
//
//   uavfl run      --scenario FILE [--trace] [--oracle]
//   uavfl tables   --scenario FILE
//   uavfl sweep    --scenario FILE --parameter cooperation_cost --values 0,1,2
//   uavfl compare  --scenario FILE [--rounds 3]
//   uavfl commtime --scenario FILE [--draws 1000]
//
// Exit codes: 0 success, 1 empty or infeasible result, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavfl/experiments.hpp"
#include "uavfl/report.hpp"
#include "uavfl/scenario.hpp"

namespace {

constexpr int kExitOk       = 0;
constexpr int kExitEmpty    = 1;
constexpr int kExitUsage    = 2;

struct Common
{
  std::string                  scenario;
  std::optional<std::uint64_t> seed;
  std::string                  out;
  std::string                  format = "csv";
};

void AddCommon(CLI::App *cmd, Common &c)
{
  cmd->add_option("--scenario", c.scenario, "Scenario file (JSON)")->required();
  cmd->add_option("--seed", c.seed, "Override the scenario RNG seed");
  cmd->add_option("--out", c.out, "Output file (default: standard output)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

int Emit(const Common &c, const std::string &text)
{
  if (c.out.empty())
  {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f || !(f << text))
  {
    std::cerr << "uavfl: cannot write " << c.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Auction and coalition formation simulator for UAV-assisted federated learning"};
  app.require_subcommand(1);

  Common common;
  bool   trace       = false;
  bool   with_oracle = false;
  std::string         parameter;
  std::vector<double> values;
  int                 rounds = 3;
  int                 draws  = 1000;

  auto *run = app.add_subcommand("run", "Merge-and-split with auction allocation");
  AddCommon(run, common);
  run->add_flag("--trace", trace, "Include the merge/split event log");
  run->add_flag("--oracle", with_oracle, "Compare against exhaustive search");

  auto *tables = app.add_subcommand("tables", "Valuation and coalition profit tables");
  AddCommon(tables, common);

  auto *sweep = app.add_subcommand("sweep", "Rerun the pipeline for each parameter value");
  AddCommon(sweep, common);
  sweep->add_option("--parameter", parameter, "cooperation_cost or required_iterations")->required();
  sweep->add_option("--values", values, "Comma separated values")->delimiter(',');

  auto *compare = app.add_subcommand("compare", "Joint scheme versus random baselines");
  AddCommon(compare, common);
  compare->add_option("--rounds", rounds, "Seeded rounds")->check(CLI::PositiveNumber);

  auto *commtime = app.add_subcommand("commtime", "Worker versus UAV upload times");
  AddCommon(commtime, common);
  commtime->add_option("--draws", draws, "Random draws")->check(CLI::PositiveNumber);

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  uavfl::ScenarioConfig scenario;
  try
  {
    scenario = uavfl::LoadScenarioFile(common.scenario);
    if (common.seed)
    {
      scenario.game.rng_seed = *common.seed;
    }
  }
  catch (const uavfl::ScenarioError &e)
  {
    std::cerr << "uavfl: " << common.scenario << ": " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const std::exception &e)
  {
    std::cerr << "uavfl: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool json = common.format == "json";
  try
  {
    std::ostringstream out;
    int                status = kExitOk;

    if (run->parsed())
    {
      const auto result = uavfl::RunPipeline(scenario, trace, with_oracle);
      if (json)
      {
        out << uavfl::report::RunJson(result, scenario);
      }
      else
      {
        uavfl::report::WriteRecordsCsv(out, std::span(&result.record, 1));
        if (trace)
        {
          out << '\n';
          uavfl::report::WriteTraceCsv(out, result.trace);
        }
        if (result.oracle)
        {
          out << '\n';
          uavfl::report::WriteOracleCsv(out, *result.oracle);
        }
      }
      status = result.result.outcome.allocations.empty() ? kExitEmpty : kExitOk;
    }
    else if (tables->parsed())
    {
      const auto coalitions = uavfl::DefaultTableCoalitions();
      std::vector<uavfl::Coalition> listed;
      const auto ids = scenario.uav_ids();
      for (const auto &c : coalitions)
      {
        bool present = true;
        for (auto id : c.members())
        {
          present = present && std::find(ids.begin(), ids.end(), id) != ids.end();
        }
        if (present)
        {
          listed.push_back(c);
        }
      }
      const auto entries = uavfl::BuildTables(scenario, listed);
      if (json)
      {
        out << uavfl::report::TablesJson(entries);
      }
      else
      {
        uavfl::report::WriteTablesCsv(out, entries);
      }
      bool any = false;
      for (const auto &e : entries)
      {
        any = any || e.feasible;
      }
      status = any ? kExitOk : kExitEmpty;
    }
    else if (sweep->parsed())
    {
      uavfl::SweepParameter p;
      try
      {
        p = uavfl::ParseSweepParameter(parameter);
      }
      catch (const std::invalid_argument &e)
      {
        std::cerr << "uavfl: " << e.what() << "\n";
        return kExitUsage;
      }
      const auto records = uavfl::Sweep(scenario, p, values);
      if (json)
      {
        out << uavfl::report::RecordsJson(records);
      }
      else
      {
        uavfl::report::WriteRecordsCsv(out, records);
      }
    }
    else if (compare->parsed())
    {
      const auto records = uavfl::Compare(scenario, rounds);
      if (json)
      {
        out << uavfl::report::RecordsJson(records);
      }
      else
      {
        uavfl::report::WriteRecordsCsv(out, records);
      }
    }
    else if (commtime->parsed())
    {
      const auto rows = uavfl::CommTime(scenario, draws);
      if (json)
      {
        out << uavfl::report::CommTimeJson(rows);
      }
      else
      {
        uavfl::report::WriteCommTimeCsv(out, rows);
      }
    }

    const int written = Emit(common, out.str());
    return written != kExitOk ? written : status;
  }
  catch (const uavfl::ScenarioError &e)
  {
    std::cerr << "uavfl: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const std::exception &e)
  {
    std::cerr << "uavfl: " << e.what() << "\n";
    return kExitEmpty;
  }
}
