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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fnprime/fit.hpp"
#include "fnprime/mc_sim.hpp"
#include "fnprime/prime.hpp"
#include "fnprime/series.hpp"
#include "fnprime/spectral.hpp"

namespace fnprime::io {

/// Shortest text that reads back to the same double (17 significant digits).
std::string format_double(double v);

std::string trace_csv(const TimeSeries& s);  // t_seconds,v_volts
std::string series_csv(const TimeSeries& s, std::string_view time_col, std::string_view value_col);
std::string density_csv(const DensitySeries& d);  // n,pi_n,density
std::string primes_csv(const PrimeTable& t);      // prime
std::string grid_csv(const OxideGrid& g);         // x,y,thickness_m
std::string dominance_csv(const DominanceSeries& d);  // t_seconds,share
std::string spectrogram_csv(const Spectrogram& sg);   // col,freq_bin,magnitude

/// Numeric CSV with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  /// Column by name; throws SchemaError naming the missing column.
  const std::vector<double>& column(std::string_view name) const;
};

/// Throws IoError if unreadable and std::invalid_argument naming the line for
/// malformed rows.
CsvTable read_csv(const std::filesystem::path& path);

TimeSeries read_trace_csv(const std::filesystem::path& path);
DensitySeries read_density_csv(const std::filesystem::path& path);

nlohmann::json to_json(const LogFitModel& m);
LogFitModel fit_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlignmentMap& m);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view content);

std::string sha256_hex(std::string_view data);

/// Writes artifacts into one directory and records their digests; finish()
/// adds manifest.json.
class OutputDir {
 public:
  OutputDir(std::filesystem::path dir, std::string command);

  void write(const std::string& name, std::string_view content);
  void write_json(const std::string& name, const nlohmann::json& j);
  void finish(const nlohmann::json& config_echo, const nlohmann::json& extra = nlohmann::json::object());

  const std::filesystem::path& path() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string command_;
  nlohmann::json artifacts_ = nlohmann::json::array();
};

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace fnprime::io
