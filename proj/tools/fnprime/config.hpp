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
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fnprime/fn_physics.hpp"
#include "fnprime/mc_sim.hpp"

namespace fnprime::cli {

/// Malformed or invalid configuration; the message names the file position or field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a JSON file. Syntax errors report "path:line:column".
nlohmann::json load_json(const std::filesystem::path& path);

struct SimulateConfig {
  bool grid_mode = true;
  DeviceParams device;   // single-barrier view, alpha absorbs the full junction area
  double area = defaults::kJunctionArea;
  McConfig mc;           // grid view, alpha per unit area
};

/// Keys: mode, alpha, beta, capacitance_F, t_ox_m, v_init_V, dt_s, duration_s,
/// stepping, samples_per_decade, growth, max_step_dv_V, prune_floor_A,
/// prune_fraction, grid{nx, ny, rel_std, seed, area_m2}. Unknown keys are errors.
SimulateConfig parse_simulate_config(const nlohmann::json& j);
nlohmann::json echo(const SimulateConfig& c);

struct StitchConfig {
  std::vector<std::filesystem::path> regions;
  std::optional<std::filesystem::path> reference;  // fit JSON; region 1 is fitted when absent
};

/// Keys: regions (array of trace CSV paths), reference (optional fit JSON).
/// Relative paths resolve against base_dir.
StitchConfig parse_stitch_config(const nlohmann::json& j, const std::filesystem::path& base_dir);

}  // namespace fnprime::cli
