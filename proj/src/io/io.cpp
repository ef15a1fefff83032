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
#include "fnprime/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fnprime/error.hpp"
#include "fnprime/rng.hpp"
#include "fnprime/simd/kernels.hpp"

namespace fnprime::io {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string series_csv(const TimeSeries& s, std::string_view time_col, std::string_view value_col) {
  std::string out;
  out.reserve(40 * (s.size() + 1));
  out.append(time_col).append(",").append(value_col).append("\n");
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += format_double(s.times[i]);
    out += ',';
    out += format_double(s.values[i]);
    out += '\n';
  }
  return out;
}

std::string trace_csv(const TimeSeries& s) { return series_csv(s, "t_seconds", "v_volts"); }

std::string density_csv(const DensitySeries& d) {
  std::string out = "n,pi_n,density\n";
  for (const auto& p : d.points) {
    out += std::to_string(p.n) + ',' + std::to_string(p.pi_n) + ',' + format_double(p.value) + '\n';
  }
  return out;
}

std::string primes_csv(const PrimeTable& t) {
  std::string out = "prime\n";
  out.reserve(out.size() + 10 * t.size());
  for (const auto p : t.primes()) {
    out += std::to_string(p);
    out += '\n';
  }
  return out;
}

std::string grid_csv(const OxideGrid& g) {
  std::string out = "x,y,thickness_m\n";
  for (int x = 0; x < g.nx; ++x) {
    for (int y = 0; y < g.ny; ++y) {
      out += std::to_string(x) + ',' + std::to_string(y) + ',' + format_double(g.at(x, y)) + '\n';
    }
  }
  return out;
}

std::string dominance_csv(const DominanceSeries& d) {
  std::string out = "t_seconds,share\n";
  for (std::size_t i = 0; i < d.times.size(); ++i) {
    out += format_double(d.times[i]) + ',' + format_double(d.share[i]) + '\n';
  }
  return out;
}

std::string spectrogram_csv(const Spectrogram& sg) {
  std::string out = "col,freq_bin,magnitude\n";
  for (std::size_t c = 0; c < sg.columns(); ++c) {
    for (std::size_t k = 0; k < sg.bins(); ++k) {
      out += std::to_string(c) + ',' + std::to_string(k) + ',' + format_double(sg.at(c, k)) + '\n';
    }
  }
  return out;
}

const std::vector<double>& CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw SchemaError("missing CSV column", std::string(name));
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file", path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(path.string() + ": missing header row");
  table.header = split(line);
  table.columns.resize(table.header.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.header.size()) + " fields, got " +
                                  std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double v = 0.0;
      const char* first = cells[c].data();
      const char* last = first + cells[c].size();
      const auto res = std::from_chars(first, last, v);
      if (res.ec != std::errc() || res.ptr != last) {
        throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                    ": column '" + table.header[c] + "' is not a number: '" +
                                    cells[c] + "'");
      }
      table.columns[c].push_back(v);
    }
  }
  return table;
}

TimeSeries read_trace_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  TimeSeries s;
  s.times = t.column("t_seconds");
  s.values = t.column("v_volts");
  validate(s);
  return s;
}

DensitySeries read_density_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  const auto& n = t.column("n");
  const auto& pi = t.column("pi_n");
  const auto& dens = t.column("density");
  DensitySeries d;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] >= 1.0) || (i > 0 && !(n[i] > n[i - 1]))) {
      throw SchemaError(path.string() + ": values must be positive and strictly ascending", "n");
    }
    d.points.push_back({static_cast<std::uint64_t>(n[i]), static_cast<std::uint64_t>(pi[i]), dens[i]});
  }
  if (d.points.size() >= 2) d.stride = d.points[1].n - d.points[0].n;
  return d;
}

nlohmann::json to_json(const LogFitModel& m) {
  return {{"c1", m.c1},
          {"c2", m.c2},
          {"c3", m.c3},
          {"c4", m.c4},
          {"residual_rms", m.residual_rms},
          {"domain", {m.t_min, m.t_max}},
          {"iterations", m.iterations},
          {"converged", m.converged}};
}

LogFitModel fit_from_json(const nlohmann::json& j) {
  LogFitModel m;
  m.c1 = j.at("c1").get<double>();
  m.c2 = j.at("c2").get<double>();
  m.c3 = j.at("c3").get<double>();
  m.c4 = j.at("c4").get<double>();
  m.residual_rms = j.value("residual_rms", 0.0);
  if (j.contains("domain")) {
    m.t_min = j.at("domain").at(0).get<double>();
    m.t_max = j.at("domain").at(1).get<double>();
  }
  m.iterations = j.value("iterations", std::size_t{0});
  m.converged = j.value("converged", true);
  return m;
}

nlohmann::json to_json(const AlignmentMap& m) {
  return {{"scale", m.scale}, {"offset", m.offset}, {"t0", m.t0}};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file", path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed", path.string());
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

OutputDir::OutputDir(std::filesystem::path dir, std::string command)
    : dir_(std::move(dir)), command_(std::move(command)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    throw IoError("cannot create output directory", dir_.string());
  }
}

void OutputDir::write(const std::string& name, std::string_view content) {
  write_text(dir_ / name, content);
  artifacts_.push_back({{"path", name}, {"bytes", content.size()}, {"sha256", sha256_hex(content)}});
}

void OutputDir::write_json(const std::string& name, const nlohmann::json& j) {
  write(name, j.dump(2) + "\n");
}

void OutputDir::finish(const nlohmann::json& config_echo, const nlohmann::json& extra) {
  nlohmann::json m = {{"tool", "fnprime"},
                      {"version", kToolVersion},
                      {"command", command_},
                      {"config", config_echo},
                      {"rng", Philox4x32::kAlgorithm},
                      {"artifacts", artifacts_}};
  for (const auto& [k, v] : extra.items()) m[k] = v;
  write_text(dir_ / "manifest.json", m.dump(2) + "\n");
}

}  // namespace fnprime::io
