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

#include "uavfl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace uavfl {

using nlohmann::json;

double Distance(Point a, Point b)
{
  return std::hypot(a.x - b.x, a.y - b.y);
}

ScenarioError::ScenarioError(std::string path, const std::string &message)
  : std::runtime_error(path.empty() ? message : path + ": " + message)
  , path_(std::move(path))
{}

std::string_view ToString(PaymentRule rule)
{
  switch (rule)
  {
  case PaymentRule::BidPrice:
    return "bid_price";
  case PaymentRule::SecondPrice:
    return "second_price";
  }
  return "bid_price";
}

PaymentRule ParsePaymentRule(std::string_view text)
{
  if (text == "bid_price")
  {
    return PaymentRule::BidPrice;
  }
  if (text == "second_price")
  {
    return PaymentRule::SecondPrice;
  }
  throw ScenarioError("game.payment_rule",
                      "expected \"bid_price\" or \"second_price\", got \"" + std::string(text) + "\"");
}

const CellSpec &ScenarioConfig::cell(CellId id) const
{
  auto it = std::find_if(cells.begin(), cells.end(), [id](const CellSpec &c) { return c.id == id; });
  if (it == cells.end())
  {
    throw std::out_of_range("unknown cell id " + std::to_string(id));
  }
  return *it;
}

const Uav &ScenarioConfig::uav(UavId id) const
{
  auto it = std::find_if(uavs.begin(), uavs.end(), [id](const Uav &u) { return u.id == id; });
  if (it == uavs.end())
  {
    throw std::out_of_range("unknown UAV id " + std::to_string(id));
  }
  return *it;
}

std::vector<UavId> ScenarioConfig::uav_ids() const
{
  std::vector<UavId> ids;
  ids.reserve(uavs.size());
  for (const auto &u : uavs)
  {
    ids.push_back(u.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

double WorkerImportance(double sampling_rate)
{
  if (!(sampling_rate >= 0.0))
  {
    throw ScenarioError("sampling_rate", "must be nonnegative");
  }
  return std::log10(sampling_rate + 1.0) / std::log10(20.0);
}

std::vector<WorkerSpec> SelectWorkers(const CellSpec &cell, double threshold)
{
  std::vector<WorkerSpec> selected;
  for (const auto &w : cell.workers)
  {
    if (WorkerImportance(w.sampling_rate) > threshold)
    {
      selected.push_back(w);
    }
  }
  return selected;
}

double CellImportance(const CellSpec &cell, double threshold)
{
  if (cell.importance_override)
  {
    return *cell.importance_override;
  }
  double sum = 0.0;
  for (const auto &w : SelectWorkers(cell, threshold))
  {
    sum += WorkerImportance(w.sampling_rate);
  }
  return sum;
}

namespace {

void Require(bool ok, const std::string &path, const std::string &what)
{
  if (!ok)
  {
    throw ScenarioError(path, what);
  }
}

void RequirePositive(double v, const std::string &path)
{
  Require(std::isfinite(v) && v > 0.0, path, "must be positive");
}

void RequireNonNegative(double v, const std::string &path)
{
  Require(std::isfinite(v) && v >= 0.0, path, "must be nonnegative");
}

void RequireInGrid(Point p, const ScenarioConfig &c, const std::string &path)
{
  Require(p.x >= 0.0 && p.x <= c.grid_width && p.y >= 0.0 && p.y <= c.grid_height, path,
          "lies outside the grid");
}

void RequireRange(const Range &r, const std::string &path)
{
  Require(std::isfinite(r.min) && std::isfinite(r.max) && r.min <= r.max, path, "min must not exceed max");
}

}  // namespace

void Validate(const ScenarioConfig &c)
{
  RequirePositive(c.grid_width, "grid.width");
  RequirePositive(c.grid_height, "grid.height");

  std::set<CellId> cell_ids;
  for (std::size_t i = 0; i < c.cells.size(); ++i)
  {
    const auto  &cell = c.cells[i];
    const auto   path = "cells[" + std::to_string(i) + "]";
    Require(cell_ids.insert(cell.id).second, path + ".id", "duplicate cell id " + std::to_string(cell.id));
    RequireInGrid(cell.position, c, path + ".position");
    RequireNonNegative(cell.price_per_importance, path + ".price_per_importance");
    if (cell.importance_override)
    {
      RequireNonNegative(*cell.importance_override, path + ".importance_override");
    }
    else
    {
      Require(!cell.workers.empty(), path + ".workers", "must be non-empty without importance_override");
    }
    std::set<int> worker_ids;
    for (std::size_t w = 0; w < cell.workers.size(); ++w)
    {
      const auto wpath = path + ".workers[" + std::to_string(w) + "]";
      Require(worker_ids.insert(cell.workers[w].id).second, wpath + ".id",
              "duplicate worker id " + std::to_string(cell.workers[w].id));
      RequirePositive(cell.workers[w].sampling_rate, wpath + ".sampling_rate");
    }
  }

  std::set<UavId> uav_ids;
  for (std::size_t i = 0; i < c.uavs.size(); ++i)
  {
    const auto &u    = c.uavs[i];
    const auto  path = "uavs[" + std::to_string(i) + "]";
    Require(uav_ids.insert(u.id).second, path + ".id", "duplicate UAV id " + std::to_string(u.id));
    RequireInGrid(u.depot, c, path + ".depot");
    RequirePositive(u.energy_capacity, path + ".energy_capacity");
    RequirePositive(u.velocity, path + ".velocity");
    RequireNonNegative(u.flight_power, path + ".flight_power");
    RequireNonNegative(u.flight_weight_depot, path + ".flight_weight_depot");
    RequireNonNegative(u.cooperation_cost, path + ".cooperation_cost");
    RequireNonNegative(u.energy_price, path + ".energy_price");
    RequireNonNegative(u.cpu_cycles_per_aggregation, path + ".cpu_cycles_per_aggregation");
    RequireNonNegative(u.cpu_frequency, path + ".cpu_frequency");
    RequireNonNegative(u.cpu_coefficient, path + ".cpu_coefficient");
    RequirePositive(u.bandwidth, path + ".bandwidth");
    RequirePositive(u.tx_power, path + ".tx_power");
    RequirePositive(u.rx_power, path + ".rx_power");
    Require(std::isfinite(u.channel_gain_db), path + ".channel_gain_db", "must be finite");
    RequireNonNegative(u.hover_energy_per_iteration, path + ".hover_energy_per_iteration");
    RequireNonNegative(u.circuit_energy_per_iteration, path + ".circuit_energy_per_iteration");
  }

  const auto &r = c.radio;
  Require(std::isfinite(r.noise_psd_dbm_per_hz), "radio.noise_psd_dbm_per_hz", "must be finite");
  RequireNonNegative(r.uplink_interference, "radio.uplink_interference");
  RequirePositive(r.owner_bandwidth, "radio.owner_bandwidth");
  RequirePositive(r.owner_tx_power, "radio.owner_tx_power");
  RequirePositive(r.global_model_size, "radio.global_model_size_mb");
  RequirePositive(r.cell_aggregate_size, "radio.cell_aggregate_size_mb");
  RequirePositive(r.worker_update_size, "radio.worker_update_size_mb");
  RequirePositive(r.worker_bandwidth, "radio.worker_bandwidth");
  RequirePositive(r.worker_tx_power, "radio.worker_tx_power");
  Require(std::isfinite(r.worker_channel_gain_db), "radio.worker_channel_gain_db", "must be finite");
  RequireNonNegative(r.cell_flight_weight, "radio.cell_flight_weight");

  const auto &g = c.game;
  Require(g.required_iterations >= 1, "game.required_iterations", "must be at least 1");
  RequireNonNegative(g.importance_threshold, "game.importance_threshold");
  RequireNonNegative(g.weight_importance, "game.weight_importance");
  RequireNonNegative(g.weight_latency, "game.weight_latency");
  RequirePositive(g.latency_scale, "game.latency_scale");
  RequirePositive(g.min_travel_time, "game.min_travel_time");

  const auto &t = c.commtime;
  RequireRange(t.worker_bandwidth, "commtime.worker_bandwidth");
  RequireRange(t.worker_tx_power, "commtime.worker_tx_power");
  RequireRange(t.worker_channel_gain_db, "commtime.worker_channel_gain_db");
  RequireRange(t.uav_bandwidth, "commtime.uav_bandwidth");
  RequireRange(t.uav_tx_power, "commtime.uav_tx_power");
  RequireRange(t.uav_channel_gain_db, "commtime.uav_channel_gain_db");
  Require(t.worker_bandwidth.min > 0.0 && t.uav_bandwidth.min > 0.0, "commtime", "bandwidth ranges must be positive");
}

namespace {

// Reads typed fields from a JSON object while tracking the field path for
// error messages.
class Reader
{
public:
  Reader(const json &node, std::string path)
    : node_(node)
    , path_(std::move(path))
  {
    if (!node_.is_object())
    {
      throw ScenarioError(path_, "expected an object");
    }
  }

  std::string field(std::string_view key) const
  {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  bool has(std::string_view key) const
  {
    return node_.contains(key);
  }

  const json &at(std::string_view key) const
  {
    if (!node_.contains(key))
    {
      throw ScenarioError(field(key), "missing required field");
    }
    return node_.at(key);
  }

  double number(std::string_view key) const
  {
    const auto &v = at(key);
    if (!v.is_number())
    {
      throw ScenarioError(field(key), "expected a number");
    }
    return v.get<double>();
  }

  double number(std::string_view key, double fallback) const
  {
    return has(key) ? number(key) : fallback;
  }

  long long integer(std::string_view key) const
  {
    const auto &v = at(key);
    if (!v.is_number_integer())
    {
      throw ScenarioError(field(key), "expected an integer");
    }
    return v.get<long long>();
  }

  Point point(std::string_view key) const
  {
    const auto &v = at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    {
      throw ScenarioError(field(key), "expected [x, y]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
  }

  Range range(std::string_view key, Range fallback) const
  {
    if (!has(key))
    {
      return fallback;
    }
    const auto &v = at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    {
      throw ScenarioError(field(key), "expected [min, max]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
  }

private:
  const json &node_;
  std::string path_;
};

std::size_t LineOf(std::string_view document, std::size_t byte)
{
  byte = std::min(byte, document.size());
  return 1 + static_cast<std::size_t>(std::count(document.begin(), document.begin() + byte, '\n'));
}

ScenarioConfig FromJson(const json &root)
{
  ScenarioConfig c;
  Reader         top(root, "");

  {
    Reader grid(top.at("grid"), "grid");
    c.grid_width  = grid.number("width");
    c.grid_height = grid.number("height");
  }

  const auto &cells = top.at("cells");
  if (!cells.is_array())
  {
    throw ScenarioError("cells", "expected an array");
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
  {
    Reader   r(cells[i], "cells[" + std::to_string(i) + "]");
    CellSpec cell;
    cell.id                   = static_cast<CellId>(r.integer("id"));
    cell.position             = r.point("position");
    cell.price_per_importance = r.number("price_per_importance");
    if (r.has("importance_override") && !r.at("importance_override").is_null())
    {
      cell.importance_override = r.number("importance_override");
    }
    if (r.has("workers"))
    {
      const auto &ws = r.at("workers");
      if (!ws.is_array())
      {
        throw ScenarioError(r.field("workers"), "expected an array");
      }
      for (std::size_t w = 0; w < ws.size(); ++w)
      {
        Reader     wr(ws[w], r.field("workers") + "[" + std::to_string(w) + "]");
        WorkerSpec spec;
        spec.id            = static_cast<int>(wr.integer("id"));
        spec.cell_id       = cell.id;
        spec.sampling_rate = wr.number("sampling_rate");
        cell.workers.push_back(spec);
      }
    }
    c.cells.push_back(std::move(cell));
  }

  const auto &uavs = top.at("uavs");
  if (!uavs.is_array())
  {
    throw ScenarioError("uavs", "expected an array");
  }
  for (std::size_t i = 0; i < uavs.size(); ++i)
  {
    Reader r(uavs[i], "uavs[" + std::to_string(i) + "]");
    Uav    u;
    u.id                           = static_cast<UavId>(r.integer("id"));
    u.depot                        = r.point("depot");
    u.energy_capacity              = r.number("energy_capacity");
    u.velocity                     = r.number("velocity", u.velocity);
    u.flight_power                 = r.number("flight_power", u.flight_power);
    u.flight_weight_depot          = r.number("flight_weight_depot", u.flight_weight_depot);
    u.cooperation_cost             = r.number("cooperation_cost", u.cooperation_cost);
    u.energy_price                 = r.number("energy_price", u.energy_price);
    u.cpu_cycles_per_aggregation   = r.number("cpu_cycles_per_aggregation", u.cpu_cycles_per_aggregation);
    u.cpu_frequency                = r.number("cpu_frequency", u.cpu_frequency);
    u.cpu_coefficient              = r.number("cpu_coefficient", u.cpu_coefficient);
    u.bandwidth                    = r.number("bandwidth");
    u.tx_power                     = r.number("tx_power");
    u.rx_power                     = r.number("rx_power");
    u.channel_gain_db              = r.number("channel_gain_db");
    u.hover_energy_per_iteration   = r.number("hover_energy_per_iteration", u.hover_energy_per_iteration);
    u.circuit_energy_per_iteration = r.number("circuit_energy_per_iteration", u.circuit_energy_per_iteration);
    c.uavs.push_back(u);
  }

  if (top.has("radio"))
  {
    Reader r(top.at("radio"), "radio");
    auto  &e                 = c.radio;
    e.noise_psd_dbm_per_hz   = r.number("noise_psd_dbm_per_hz", e.noise_psd_dbm_per_hz);
    e.uplink_interference    = r.number("uplink_interference", e.uplink_interference);
    e.owner_bandwidth        = r.number("owner_bandwidth", e.owner_bandwidth);
    e.owner_tx_power         = r.number("owner_tx_power", e.owner_tx_power);
    e.global_model_size      = r.number("global_model_size_mb", e.global_model_size / kBitsPerMegabyte) * kBitsPerMegabyte;
    e.cell_aggregate_size    = r.number("cell_aggregate_size_mb", e.cell_aggregate_size / kBitsPerMegabyte) * kBitsPerMegabyte;
    e.worker_update_size     = r.number("worker_update_size_mb", e.worker_update_size / kBitsPerMegabyte) * kBitsPerMegabyte;
    e.worker_bandwidth       = r.number("worker_bandwidth", e.worker_bandwidth);
    e.worker_tx_power        = r.number("worker_tx_power", e.worker_tx_power);
    e.worker_channel_gain_db = r.number("worker_channel_gain_db", e.worker_channel_gain_db);
    e.cell_flight_weight     = r.number("cell_flight_weight", e.cell_flight_weight);
  }

  if (top.has("game"))
  {
    Reader r(top.at("game"), "game");
    auto  &g = c.game;
    if (r.has("required_iterations"))
    {
      g.required_iterations = static_cast<int>(r.integer("required_iterations"));
    }
    g.importance_threshold = r.number("importance_threshold", g.importance_threshold);
    g.weight_importance    = r.number("weight_importance", g.weight_importance);
    g.weight_latency       = r.number("weight_latency", g.weight_latency);
    g.latency_scale        = r.number("latency_scale", g.latency_scale);
    g.min_travel_time      = r.number("min_travel_time", g.min_travel_time);
    if (r.has("payment_rule"))
    {
      const auto &v = r.at("payment_rule");
      if (!v.is_string())
      {
        throw ScenarioError("game.payment_rule", "expected a string");
      }
      g.payment_rule = ParsePaymentRule(v.get<std::string>());
    }
    if (r.has("rng_seed"))
    {
      const auto &v = r.at("rng_seed");
      if (!v.is_number_unsigned())
      {
        throw ScenarioError("game.rng_seed", "expected a nonnegative integer");
      }
      g.rng_seed = v.get<std::uint64_t>();
    }
  }

  if (top.has("commtime"))
  {
    Reader r(top.at("commtime"), "commtime");
    auto  &t                = c.commtime;
    t.worker_bandwidth      = r.range("worker_bandwidth", t.worker_bandwidth);
    t.worker_tx_power       = r.range("worker_tx_power", t.worker_tx_power);
    t.worker_channel_gain_db = r.range("worker_channel_gain_db", t.worker_channel_gain_db);
    t.uav_bandwidth         = r.range("uav_bandwidth", t.uav_bandwidth);
    t.uav_tx_power          = r.range("uav_tx_power", t.uav_tx_power);
    t.uav_channel_gain_db   = r.range("uav_channel_gain_db", t.uav_channel_gain_db);
  }

  return c;
}

json ToJson(Point p)
{
  return json::array({p.x, p.y});
}

json ToJson(Range r)
{
  return json::array({r.min, r.max});
}

}  // namespace

ScenarioConfig LoadScenario(std::string_view document)
{
  json root;
  try
  {
    root = json::parse(document.begin(), document.end());
  }
  catch (const json::parse_error &e)
  {
    std::ostringstream msg;
    msg << "parse error at line " << LineOf(document, e.byte) << ": " << e.what();
    throw ScenarioError("", msg.str());
  }
  ScenarioConfig config = FromJson(root);
  Validate(config);
  return config;
}

ScenarioConfig LoadScenarioFile(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw std::runtime_error("cannot open scenario file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return LoadScenario(buffer.str());
}

std::string SerializeScenario(const ScenarioConfig &c)
{
  json root;
  root["grid"] = {{"width", c.grid_width}, {"height", c.grid_height}};

  json cells = json::array();
  for (const auto &cell : c.cells)
  {
    json j;
    j["id"]                   = cell.id;
    j["position"]             = ToJson(cell.position);
    j["price_per_importance"] = cell.price_per_importance;
    if (cell.importance_override)
    {
      j["importance_override"] = *cell.importance_override;
    }
    json workers = json::array();
    for (const auto &w : cell.workers)
    {
      workers.push_back({{"id", w.id}, {"sampling_rate", w.sampling_rate}});
    }
    j["workers"] = std::move(workers);
    cells.push_back(std::move(j));
  }
  root["cells"] = std::move(cells);

  json uavs = json::array();
  for (const auto &u : c.uavs)
  {
    uavs.push_back({
      {"id", u.id},
      {"depot", ToJson(u.depot)},
      {"energy_capacity", u.energy_capacity},
      {"velocity", u.velocity},
      {"flight_power", u.flight_power},
      {"flight_weight_depot", u.flight_weight_depot},
      {"cooperation_cost", u.cooperation_cost},
      {"energy_price", u.energy_price},
      {"cpu_cycles_per_aggregation", u.cpu_cycles_per_aggregation},
      {"cpu_frequency", u.cpu_frequency},
      {"cpu_coefficient", u.cpu_coefficient},
      {"bandwidth", u.bandwidth},
      {"tx_power", u.tx_power},
      {"rx_power", u.rx_power},
      {"channel_gain_db", u.channel_gain_db},
      {"hover_energy_per_iteration", u.hover_energy_per_iteration},
      {"circuit_energy_per_iteration", u.circuit_energy_per_iteration},
    });
  }
  root["uavs"] = std::move(uavs);

  const auto &e = c.radio;
  root["radio"] = {
    {"noise_psd_dbm_per_hz", e.noise_psd_dbm_per_hz},
    {"uplink_interference", e.uplink_interference},
    {"owner_bandwidth", e.owner_bandwidth},
    {"owner_tx_power", e.owner_tx_power},
    {"global_model_size_mb", e.global_model_size / kBitsPerMegabyte},
    {"cell_aggregate_size_mb", e.cell_aggregate_size / kBitsPerMegabyte},
    {"worker_update_size_mb", e.worker_update_size / kBitsPerMegabyte},
    {"worker_bandwidth", e.worker_bandwidth},
    {"worker_tx_power", e.worker_tx_power},
    {"worker_channel_gain_db", e.worker_channel_gain_db},
    {"cell_flight_weight", e.cell_flight_weight},
  };

  const auto &g = c.game;
  root["game"] = {
    {"required_iterations", g.required_iterations},
    {"importance_threshold", g.importance_threshold},
    {"weight_importance", g.weight_importance},
    {"weight_latency", g.weight_latency},
    {"latency_scale", g.latency_scale},
    {"min_travel_time", g.min_travel_time},
    {"payment_rule", std::string(ToString(g.payment_rule))},
    {"rng_seed", g.rng_seed},
  };

  const auto &t = c.commtime;
  root["commtime"] = {
    {"worker_bandwidth", ToJson(t.worker_bandwidth)},
    {"worker_tx_power", ToJson(t.worker_tx_power)},
    {"worker_channel_gain_db", ToJson(t.worker_channel_gain_db)},
    {"uav_bandwidth", ToJson(t.uav_bandwidth)},
    {"uav_tx_power", ToJson(t.uav_tx_power)},
    {"uav_channel_gain_db", ToJson(t.uav_channel_gain_db)},
  };

  return root.dump(2) + "\n";
}

}  // namespace uavfl
