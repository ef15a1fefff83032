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
#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>

#include "config.hpp"
#include "fnprime/error.hpp"
#include "fnprime/fit.hpp"
#include "fnprime/fn_physics.hpp"
#include "fnprime/io.hpp"
#include "fnprime/mc_sim.hpp"
#include "fnprime/prime.hpp"
#include "fnprime/rng.hpp"
#include "fnprime/simd/kernels.hpp"
#include "fnprime/spectral.hpp"

namespace fnprime::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct SpectralOptions {
  std::size_t window = 100;
  std::size_t hop = 50;
  double threshold = 0.1;
};

json input_echo(const fs::path& p) {
  return {{"file", p.filename().string()}, {"sha256", io::sha256_hex(io::read_text(p))}};
}

// Device-side input: a trace CSV, or a density CSV read as (n, pi(n)/n).
struct DeviceInput {
  TimeSeries series;
  bool is_density = false;
};

DeviceInput read_series_input(const fs::path& p) {
  const io::CsvTable t = io::read_csv(p);
  const auto has = [&](const char* name) {
    return std::find(t.header.begin(), t.header.end(), name) != t.header.end();
  };
  DeviceInput in;
  if (has("t_seconds") || !has("n")) {
    in.series = io::read_trace_csv(p);
  } else {
    in.series = io::read_density_csv(p).as_time_series();
    in.is_density = true;
  }
  return in;
}

bool non_increasing(const TimeSeries& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.values[i] > s.values[i - 1]) return false;
  }
  return true;
}

// Strict check for clean traces; trend check for noisy or density data.
LogFitModel fit_any(const TimeSeries& s, json* note = nullptr) {
  FitOptions opt;
  opt.monotone = non_increasing(s) ? MonotoneCheck::NonIncreasing : MonotoneCheck::Trend;
  if (note) (*note)["monotone_check"] = opt.monotone == MonotoneCheck::NonIncreasing ? "non-increasing" : "trend";
  return fit_log_model(s, opt);
}

json fit_report(const LogFitModel& m, const json& note) {
  json j = io::to_json(m);
  for (const auto& [k, v] : note.items()) j[k] = v;
  return j;
}

json spectral_outputs(io::OutputDir& out, const std::string& name, const TimeSeries& s,
                      const SpectralOptions& opt) {
  json meta = {{"series", name}, {"samples", s.size()}};
  if (s.size() < opt.window) {
    meta["skipped"] = "series shorter than window";
    return meta;
  }
  const Spectrogram sg = spectrogram(s.values, opt.window, opt.hop);
  const auto gaps = detect_gaps(sg, opt.threshold);
  out.write("spectrogram_" + name + ".csv", io::spectrogram_csv(sg));
  std::string g = "start_col,end_col,start_sample,end_sample\n";
  for (const auto& gap : gaps) {
    g += std::to_string(gap.start_col) + ',' + std::to_string(gap.end_col) + ',' +
         std::to_string(gap.start_col * sg.hop) + ',' +
         std::to_string(gap.end_col * sg.hop + sg.window_len - 1) + '\n';
  }
  out.write("gaps_" + name + ".csv", g);
  meta["columns"] = sg.columns();
  meta["gap_runs"] = gaps.size();
  return meta;
}

json spectral_metadata(const SpectralOptions& opt) {
  return {{"window", opt.window},
          {"window_shape", "rectangular"},
          {"hop", opt.hop},
          {"fft_len", next_pow2(opt.window)},
          {"padding", "zero-padded to the next power of two"},
          {"detrending", "per-window mean removal"},
          {"dft", "unnormalized forward, one-sided magnitudes, bins 0..fft_len/2"},
          {"threshold", opt.threshold},
          {"gap_rule", "column energy (DC excluded) < threshold * median column energy"}};
}

int cmd_primes(std::uint64_t limit, std::uint64_t stride, const fs::path& out_dir) {
  if (stride < 1) throw ConfigError("--stride must be >= 1");
  const PrimeTable table = sieve_primes(limit);
  const DensitySeries density = density_series(table, stride);
  io::OutputDir out(out_dir, "primes");
  out.write("primes.csv", io::primes_csv(table));
  out.write("density.csv", io::density_csv(density));
  out.finish({{"limit", limit}, {"stride", stride}}, {{"prime_count", table.size()}});
  return kOk;
}

int cmd_simulate(const fs::path& config_path, const fs::path& out_dir,
                 std::optional<std::uint64_t> seed) {
  SimulateConfig cfg = parse_simulate_config(load_json(config_path));
  if (seed) cfg.mc.seed = *seed;
  json config = echo(cfg);
  config["rng"] = Philox4x32::kAlgorithm;
  config["simd"] = simd::isa_name(simd::kernels().isa);

  io::OutputDir out(out_dir, "simulate");
  if (cfg.grid_mode) {
    const McResult r = simulate_mc(cfg.mc);
    config["steps"] = r.steps;
    config["charge_C"] = r.charge;
    config["pruned_tile_evaluations"] = r.pruned_tiles;
    config["thinnest_tile"] = r.dominance.min_tile;
    out.write_json("config.json", config);
    out.write("trace.csv", io::trace_csv(r.trace));
    out.write("dominance.csv", io::dominance_csv(r.dominance));
    out.write("grid.csv", io::grid_csv(r.grid));
  } else {
    const IntegrationResult r = integrate_fg(cfg.device, cfg.mc.duration, cfg.mc.integration);
    config["steps"] = r.steps;
    config["charge_C"] = r.charge;
    out.write_json("config.json", config);
    out.write("trace.csv", io::trace_csv(r.trace));
  }
  out.finish(echo(cfg));
  return kOk;
}

int cmd_fit(const fs::path& input, const fs::path& out_dir) {
  const DeviceInput in = read_series_input(input);
  json note = {{"input_schema", in.is_density ? "density" : "trace"}};
  const LogFitModel m = fit_any(in.series, &note);
  io::OutputDir out(out_dir, "fit");
  out.write_json("fit.json", fit_report(m, note));
  out.write("residuals.csv", io::series_csv(model_residuals(in.series, m), "t", "residual"));
  out.finish({{"input", input_echo(input)}});
  return kOk;
}

int cmd_align(const fs::path& device_fit, const fs::path& prime_fit, const fs::path& out_dir) {
  const LogFitModel dev = io::fit_from_json(load_json(device_fit));
  const LogFitModel pri = io::fit_from_json(load_json(prime_fit));
  const AlignmentMap map = derive_alignment(dev, pri);
  io::OutputDir out(out_dir, "align");
  out.write_json("alignment.json", io::to_json(map));
  out.finish({{"device_fit", input_echo(device_fit)}, {"prime_fit", input_echo(prime_fit)}});
  return kOk;
}

struct Stitched {
  StitchResult result;
  LogFitModel reference;
  std::vector<TimeSeries> regions;
};

Stitched run_stitch(const StitchConfig& sc) {
  Stitched s;
  for (const auto& p : sc.regions) s.regions.push_back(io::read_trace_csv(p));
  s.reference = sc.reference ? io::fit_from_json(load_json(*sc.reference)) : fit_any(s.regions.front());
  s.result = stitch_regions(s.regions, s.reference);
  return s;
}

json stitch_report(const Stitched& s, const LogFitModel* overall = nullptr) {
  json regions = json::array();
  std::size_t offset = 0;
  for (std::size_t r = 0; r < s.regions.size(); ++r) {
    const std::size_t len = s.regions[r].size();
    auto rms_against = [&](const LogFitModel& m) {
      double ss = 0.0;
      for (std::size_t i = 0; i < len; ++i) {
        const double d = s.result.series.values[offset + i] -
                         closed_form_model(s.result.series.times[offset + i], m);
        ss += d * d;
      }
      return std::sqrt(ss / static_cast<double>(len));
    };
    json row = {{"samples", len},
                {"offset", s.result.offsets[r]},
                {"midpoint_index", s.result.midpoints[r]},
                {"residual_rms_reference", rms_against(s.reference)}};
    if (overall) row["residual_rms_stitched_fit"] = rms_against(*overall);
    regions.push_back(row);
    offset += len;
  }
  return {{"reference", io::to_json(s.reference)}, {"regions", regions}};
}

json stitch_echo(const StitchConfig& sc) {
  json regions = json::array();
  for (const auto& p : sc.regions) regions.push_back(input_echo(p));
  json j = {{"regions", regions}};
  if (sc.reference) j["reference"] = input_echo(*sc.reference);
  return j;
}

int cmd_stitch(const fs::path& config_path, const fs::path& out_dir) {
  const StitchConfig sc = parse_stitch_config(load_json(config_path), config_path.parent_path());
  const Stitched s = run_stitch(sc);
  json note;
  const LogFitModel all = fit_any(s.result.series, &note);
  io::OutputDir out(out_dir, "stitch");
  out.write("stitched.csv", io::trace_csv(s.result.series));
  out.write_json("stitch.json", stitch_report(s, &all));
  out.write_json("reference_fit.json", io::to_json(s.reference));
  out.write_json("stitched_fit.json", fit_report(all, note));
  out.finish(stitch_echo(sc));
  return kOk;
}

int cmd_spectrogram(const fs::path& input, const std::string& column, const SpectralOptions& opt,
                    const fs::path& out_dir) {
  const io::CsvTable t = io::read_csv(input);
  if (t.header.empty()) throw SchemaError("no columns", input.string());
  const std::string name = column.empty() ? t.header.back() : column;
  TimeSeries s;
  s.values = t.column(name);
  s.times.resize(s.values.size());
  io::OutputDir out(out_dir, "spectrogram");
  json meta = spectral_metadata(opt);
  meta["outputs"] = spectral_outputs(out, "input", s, opt);
  if (meta["outputs"].contains("skipped")) {
    throw std::invalid_argument("spectrogram: series length " + std::to_string(s.size()) +
                                " is shorter than the window " + std::to_string(opt.window));
  }
  out.write_json("spectrogram.json", meta);
  out.finish({{"input", input_echo(input)}, {"column", name}, {"spectral", spectral_metadata(opt)}});
  return kOk;
}

int cmd_compare(const std::optional<fs::path>& trace_path, const fs::path& density_path,
                const std::optional<fs::path>& stitch_config, const SpectralOptions& opt,
                const fs::path& out_dir) {
  json echo_cfg = {{"density", input_echo(density_path)}, {"spectral", spectral_metadata(opt)}};
  io::OutputDir out(out_dir, "compare");

  TimeSeries device;
  std::optional<Stitched> stitched;
  if (stitch_config) {
    const StitchConfig sc = parse_stitch_config(load_json(*stitch_config), stitch_config->parent_path());
    stitched = run_stitch(sc);
    device = stitched->result.series;
    out.write("stitched.csv", io::trace_csv(device));
    echo_cfg["stitch"] = stitch_echo(sc);
  } else {
    device = read_series_input(*trace_path).series;
    echo_cfg["trace"] = input_echo(*trace_path);
  }
  const DensitySeries density = io::read_density_csv(density_path);

  json dev_note, pri_note;
  const LogFitModel dev_fit = fit_any(device, &dev_note);
  if (stitched) out.write_json("stitch.json", stitch_report(*stitched, &dev_fit));
  const TimeSeries density_series = density.as_time_series();
  const LogFitModel pri_fit = fit_any(density_series, &pri_note);
  const AlignmentMap map = derive_alignment(dev_fit, pri_fit);
  const AlignedPairs pairs = pair_aligned(device, dev_fit, density, map);
  if (pairs.size() < 3) {
    throw std::invalid_argument("compare: only " + std::to_string(pairs.size()) +
                                " device samples map inside the density range");
  }
  const RegressionReport vs_that = regress_linear(pairs.that, pairs.density, true, pairs.times);
  const RegressionReport vs_raw = regress_linear(pairs.device, pairs.density, false, pairs.times);

  out.write_json("device_fit.json", fit_report(dev_fit, dev_note));
  out.write_json("prime_fit.json", fit_report(pri_fit, pri_note));
  out.write_json("alignment.json", io::to_json(map));

  auto linear = [](const RegressionReport& r) {
    return json{{"slope", r.slope}, {"intercept", r.intercept}, {"r_squared", r.r_squared}};
  };
  json reg = {{"aligned_samples", pairs.size()},
              {"that", linear(vs_that)},
              {"raw", linear(vs_raw)},
              {"that_definition", "(value - c4) / c1 of the device fit"}};
  reg["that"]["higher_order"] = {{"basis", "1, that, that^2, that^3"},
                                 {"coeffs", vs_that.higher_order->coeffs},
                                 {"r_squared", vs_that.higher_order->r_squared}};
  out.write_json("regression.json", reg);

  std::string csv = "index,t_seconds,n,device,that,density,residual\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    csv += std::to_string(i) + ',' + io::format_double(pairs.times[i]) + ',' +
           io::format_double(pairs.index[i]) + ',' + io::format_double(pairs.device[i]) + ',' +
           io::format_double(pairs.that[i]) + ',' + io::format_double(pairs.density[i]) + ',' +
           io::format_double(vs_that.residuals.values[i]) + '\n';
  }
  out.write("residuals.csv", csv);

  json meta = spectral_metadata(opt);
  meta["outputs"] = json::array({
      spectral_outputs(out, "regression_residuals", vs_that.residuals, opt),
      spectral_outputs(out, "device_fit_residuals", model_residuals(device, dev_fit), opt),
      spectral_outputs(out, "prime_fit_residuals", model_residuals(density_series, pri_fit), opt),
  });
  out.write_json("spectral.json", meta);
  out.finish(echo_cfg);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Floating-gate FN tunneling and prime density toolkit", "fnprime"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  std::string out_dir;
  std::string config_path;
  std::uint64_t seed = 0;
  std::uint64_t limit = 50000000;
  std::uint64_t stride = 1000;
  SpectralOptions spectral;
  std::string in1, in2, column;

  auto* primes = app.add_subcommand("primes", "Sieve primes and write pi(n)/n");
  primes->add_option("--limit", limit, "Inclusive upper bound")->capture_default_str();
  primes->add_option("--stride", stride, "Density sampling stride")->capture_default_str();
  primes->add_option("--config", config_path, "JSON with optional limit and stride");
  primes->add_option("--out", out_dir, "Output directory")->required();

  auto* simulate = app.add_subcommand("simulate", "Integrate the floating-gate dynamics");
  simulate->add_option("--config", config_path, "Simulation config JSON")->required();
  simulate->add_option("--out", out_dir, "Output directory")->required();
  auto* seed_opt = simulate->add_option("--seed", seed, "Override grid.seed");

  auto* fit = app.add_subcommand("fit", "Fit c1 / ln(c2 t + c3) + c4 to a trace or density CSV");
  fit->add_option("input", in1, "Trace or density CSV")->required();
  fit->add_option("--out", out_dir, "Output directory")->required();

  auto* align = app.add_subcommand("align", "Derive the time-to-index map from two fits");
  align->add_option("device_fit", in1, "Device fit JSON")->required();
  align->add_option("prime_fit", in2, "Prime fit JSON")->required();
  align->add_option("--out", out_dir, "Output directory")->required();

  auto* stitch = app.add_subcommand("stitch", "Stitch region traces onto one reference model");
  stitch->add_option("--config", config_path, "Stitch config JSON")->required();
  stitch->add_option("--out", out_dir, "Output directory")->required();

  auto add_spectral = [&](CLI::App* sub) {
    sub->add_option("--window", spectral.window, "Window length, samples")->capture_default_str();
    sub->add_option("--hop", spectral.hop, "Hop, samples")->capture_default_str();
    sub->add_option("--threshold", spectral.threshold, "Gap threshold relative to median energy")
        ->capture_default_str();
  };
  auto* spectro = app.add_subcommand("spectrogram", "Spectrogram and gap runs of one CSV column");
  spectro->add_option("input", in1, "CSV file")->required();
  spectro->add_option("--column", column, "Column name (default: last)");
  spectro->add_option("--out", out_dir, "Output directory")->required();
  add_spectral(spectro);

  auto* compare = app.add_subcommand("compare", "Fit, align, regress and analyse a trace against a density");
  std::vector<std::string> compare_inputs;
  compare->add_option("inputs", compare_inputs, "<trace.csv> <density.csv>, or <density.csv> with --config")
      ->required()
      ->expected(1, 2);
  compare->add_option("--config", config_path, "Stitch config JSON used instead of a trace");
  compare->add_option("--out", out_dir, "Output directory")->required();
  add_spectral(compare);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*primes) {
      if (!config_path.empty()) {
        const json j = load_json(config_path);
        if (j.contains("limit")) limit = j.at("limit").get<std::uint64_t>();
        if (j.contains("stride")) stride = j.at("stride").get<std::uint64_t>();
      }
      return cmd_primes(limit, stride, out_dir);
    }
    if (*simulate) {
      return cmd_simulate(config_path, out_dir,
                          *seed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt);
    }
    if (*fit) return cmd_fit(in1, out_dir);
    if (*align) return cmd_align(in1, in2, out_dir);
    if (*stitch) return cmd_stitch(config_path, out_dir);
    if (*spectro) {
      if (spectral.window < 1 || spectral.hop < 1 || !(spectral.threshold > 0.0)) {
        throw ConfigError("--window and --hop must be >= 1 and --threshold > 0");
      }
      return cmd_spectrogram(in1, column, spectral, out_dir);
    }
    if (*compare) {
      if (compare_inputs.size() != (config_path.empty() ? 2u : 1u)) {
        throw ConfigError("compare: expected <trace.csv> <density.csv>, or <density.csv> with --config");
      }
      in2 = compare_inputs.back();
      if (compare_inputs.size() == 2) in1 = compare_inputs.front();
      if (spectral.window < 1 || spectral.hop < 1 || !(spectral.threshold > 0.0)) {
        throw ConfigError("--window and --hop must be >= 1 and --threshold > 0");
      }
      return cmd_compare(in1.empty() ? std::nullopt : std::optional<fs::path>(in1), in2,
                         config_path.empty() ? std::nullopt : std::optional<fs::path>(config_path),
                         spectral, out_dir);
    }
  } catch (const IoError& e) {
    std::cerr << "fnprime: " << e.what() << '\n';
    return kRuntime;
  } catch (const NumericalError& e) {
    std::cerr << "fnprime: " << e.what() << '\n';
    return kRuntime;
  } catch (const ConvergenceError& e) {
    std::cerr << "fnprime: " << e.what() << '\n';
    return kRuntime;
  } catch (const StitchError& e) {
    std::cerr << "fnprime: " << e.what() << '\n';
    return kRuntime;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "fnprime: config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fnprime: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fnprime: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace fnprime::cli
