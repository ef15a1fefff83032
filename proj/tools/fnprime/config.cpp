// Copyright 2026 The fnprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "config.hpp"

#include <algorithm>
#include <set>

#include "fnprime/io.hpp"

namespace fnprime::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& known) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) {
      throw ConfigError("config field '" + where + key + "': unknown key");
    }
  }
}

double number(const json& obj, const std::string& where, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("config field '" + where + key + "': expected a number");
  return v.get<double>();
}

std::int64_t integer(const json& obj, const std::string& where, const char* key,
                     std::int64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError("config field '" + where + key + "': expected an integer");
  }
  return v.get<std::int64_t>();
}

std::string text(const json& obj, const std::string& where, const char* key, std::string fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError("config field '" + where + key + "': expected a string");
  return v.get<std::string>();
}

void require(bool ok, const std::string& field, const std::string& rule) {
  if (!ok) throw ConfigError("config field '" + field + "': " + rule);
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  const std::string content = io::read_text(path);
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, content.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (content[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": JSON parse error: " + e.what());
  }
}

SimulateConfig parse_simulate_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  reject_unknown(j, "", {"mode", "alpha", "beta", "capacitance_F", "t_ox_m", "v_init_V", "dt_s",
                         "duration_s", "stepping", "samples_per_decade", "growth",
                         "max_step_dv_V", "prune_floor_A", "prune_fraction", "grid"});
  SimulateConfig c;
  const std::string mode = text(j, "", "mode", "grid");
  require(mode == "grid" || mode == "single", "mode", "must be \"grid\" or \"single\"");
  c.grid_mode = mode == "grid";

  DeviceParams& d = c.device;
  d.alpha = number(j, "", "alpha", d.alpha);
  d.beta = number(j, "", "beta", d.beta);
  d.capacitance = number(j, "", "capacitance_F", d.capacitance);
  d.t_ox = number(j, "", "t_ox_m", d.t_ox);
  d.v_init = number(j, "", "v_init_V", d.v_init);
  d.dt = number(j, "", "dt_s", d.dt);
  require(d.alpha > 0, "alpha", "must be positive");
  require(d.beta > 0, "beta", "must be positive");
  require(d.capacitance > 0, "capacitance_F", "must be positive");
  require(d.t_ox > 0, "t_ox_m", "must be positive");
  require(d.v_init > 0, "v_init_V", "must be positive");
  require(d.dt > 0, "dt_s", "must be positive");

  McConfig& m = c.mc;
  m.duration = number(j, "", "duration_s", m.duration);
  require(m.duration > 0, "duration_s", "must be positive");
  const std::string stepping = text(j, "", "stepping", "geometric");
  require(stepping == "fixed" || stepping == "geometric", "stepping",
          "must be \"fixed\" or \"geometric\"");
  m.integration.stepping = stepping == "fixed" ? Stepping::Fixed : Stepping::Geometric;
  const auto spd = integer(j, "", "samples_per_decade", m.integration.samples_per_decade);
  require(spd >= 1 && spd <= 100000, "samples_per_decade", "must be in [1, 100000]");
  m.integration.samples_per_decade = static_cast<int>(spd);
  m.integration.growth = number(j, "", "growth", m.integration.growth);
  require(m.integration.growth >= 1.0, "growth", "must be >= 1");
  m.integration.max_step_dv = number(j, "", "max_step_dv_V", m.integration.max_step_dv);
  require(m.integration.max_step_dv > 0, "max_step_dv_V", "must be positive");
  m.prune_floor = number(j, "", "prune_floor_A", m.prune_floor);
  m.prune_fraction = number(j, "", "prune_fraction", m.prune_fraction);
  require(m.prune_floor >= 0, "prune_floor_A", "must be non-negative");
  require(m.prune_fraction >= 0, "prune_fraction", "must be non-negative");

  json grid = json::object();
  if (j.contains("grid")) {
    grid = j.at("grid");
    require(grid.is_object(), "grid", "expected an object");
  }
  reject_unknown(grid, "grid.", {"nx", "ny", "rel_std", "seed", "area_m2"});
  const auto nx = integer(grid, "grid.", "nx", m.nx);
  const auto ny = integer(grid, "grid.", "ny", m.ny);
  require(nx >= 1 && nx <= 100000, "grid.nx", "must be in [1, 100000]");
  require(ny >= 1 && ny <= 100000, "grid.ny", "must be in [1, 100000]");
  m.nx = static_cast<int>(nx);
  m.ny = static_cast<int>(ny);
  m.rel_std = number(grid, "grid.", "rel_std", m.rel_std);
  require(m.rel_std >= 0 && m.rel_std < 0.5, "grid.rel_std", "must lie in [0, 0.5)");
  if (grid.contains("seed")) {
    require(grid.at("seed").is_number_unsigned(), "grid.seed", "expected a non-negative integer");
    m.seed = grid.at("seed").get<std::uint64_t>();
  }
  c.area = number(grid, "grid.", "area_m2", c.area);
  require(c.area > 0, "grid.area_m2", "must be positive");

  m.mean_thickness = d.t_ox;
  m.tile_area = c.area / (static_cast<double>(m.nx) * static_cast<double>(m.ny));
  m.capacitance = d.capacitance;
  m.alpha = d.alpha / c.area;
  m.beta = d.beta;
  m.v_init = d.v_init;
  m.dt = d.dt;
  return c;
}

json echo(const SimulateConfig& c) {
  const McConfig& m = c.mc;
  const DeviceParams& d = c.device;
  json j = {{"mode", c.grid_mode ? "grid" : "single"},
            {"alpha", d.alpha},
            {"beta", d.beta},
            {"capacitance_F", d.capacitance},
            {"t_ox_m", d.t_ox},
            {"v_init_V", d.v_init},
            {"dt_s", d.dt},
            {"duration_s", m.duration},
            {"stepping", m.integration.stepping == Stepping::Fixed ? "fixed" : "geometric"},
            {"samples_per_decade", m.integration.samples_per_decade},
            {"growth", m.integration.growth},
            {"max_step_dv_V", m.integration.max_step_dv}};
  if (c.grid_mode) {
    j["grid"] = {{"nx", m.nx},
                 {"ny", m.ny},
                 {"rel_std", m.rel_std},
                 {"seed", m.seed},
                 {"area_m2", c.area},
                 {"tile_area_m2", m.tile_area},
                 {"mean_thickness_m", m.mean_thickness},
                 {"alpha_per_area", m.alpha},
                 {"distribution", "uniform, half-width sqrt(3) * rel_std * mean"}};
    j["prune_floor_A"] = m.prune_floor;
    j["prune_fraction"] = m.prune_fraction;
  }
  return j;
}

StitchConfig parse_stitch_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("stitch config: top level must be a JSON object");
  reject_unknown(j, "", {"regions", "reference"});
  require(j.contains("regions") && j.at("regions").is_array() && !j.at("regions").empty(),
          "regions", "expected a non-empty array of CSV paths");
  StitchConfig c;
  auto resolve = [&](const std::filesystem::path& p) { return p.is_absolute() ? p : base_dir / p; };
  for (std::size_t i = 0; i < j.at("regions").size(); ++i) {
    const json& r = j.at("regions")[i];
    require(r.is_string(), "regions[" + std::to_string(i) + "]", "expected a string path");
    c.regions.push_back(resolve(r.get<std::string>()));
  }
  if (j.contains("reference")) {
    require(j.at("reference").is_string(), "reference", "expected a string path");
    c.reference = resolve(j.at("reference").get<std::string>());
  }
  return c;
}

}  // namespace fnprime::cli
