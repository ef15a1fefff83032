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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnprime/log_model.hpp"
#include "fnprime/prime.hpp"
#include "fnprime/series.hpp"

namespace fnprime {

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, LogFitModel best)
      : std::runtime_error(what), best_(best) {}
  const LogFitModel& best() const noexcept { return best_; }

 private:
  LogFitModel best_;
};

enum class MonotoneCheck {
  NonIncreasing,  // reject any rise between consecutive samples
  Trend,          // reject unless the last tenth sits below the first tenth (noisy data)
};

struct FitOptions {
  int max_iterations = 200;
  double tolerance = 1e-12;  // relative cost change on an accepted step
  MonotoneCheck monotone = MonotoneCheck::NonIncreasing;
};

/// Least-squares fit of c1 / ln(c2 t + c3) + c4.
///
/// Needs >= 8 samples spanning at least a decade (t_last >= 10 t_first, or
/// t_first <= 0). A constant series yields c1 = 0, c4 = constant.
/// Throws std::invalid_argument on bad input and ConvergenceError (carrying
/// the best parameters seen) when the iteration cap is hit.
LogFitModel fit_log_model(const TimeSeries& series, const FitOptions& options = {});

/// value - model at each sample.
TimeSeries model_residuals(const TimeSeries& series, const LogFitModel& model);

/// Affine map n = scale * t + offset between device time and prime index.
struct AlignmentMap {
  double scale = 1.0;
  double offset = 0.0;
  double t0 = 1.0;  // seconds per integer tick, 1 / scale

  double to_index(double t) const noexcept { return scale * t + offset; }
  double to_time(double n) const noexcept { return (n - offset) / scale; }
};

/// Matches the log arguments: lambda2 n + lambda3 = gamma2 t + gamma3.
/// Throws DegenerateError when lambda2 == 0 or the resulting scale is not positive.
AlignmentMap derive_alignment(const LogFitModel& device, const LogFitModel& prime);

struct PolyFit {
  std::array<double, 4> coeffs{};  // y ~ c0 + c1 x + c2 x^2 + c3 x^3
  double r_squared = 0.0;
};

struct RegressionReport {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  TimeSeries residuals;  // times are the supplied sample times or the index
  std::optional<PolyFit> higher_order;
};

/// Ordinary least squares y ~ slope x + intercept. With higher_order set,
/// also fits the cubic basis (x, x^2, x^3). Throws DegenerateError for
/// constant x and std::invalid_argument for mismatched or short input.
RegressionReport regress_linear(std::span<const double> x, std::span<const double> y,
                                bool higher_order = false, std::span<const double> times = {});

/// Device samples paired with the prime density at their mapped index.
struct AlignedPairs {
  std::vector<double> times;    // device time, s
  std::vector<double> index;    // mapped n
  std::vector<double> device;   // raw trace value
  std::vector<double> that;     // (value - c4) / c1 of the device fit
  std::vector<double> density;  // pi(n)/n, linearly interpolated between samples

  std::size_t size() const noexcept { return times.size(); }
};

/// Keeps the device samples whose mapped index falls inside the density
/// series. Throws std::invalid_argument when none do.
AlignedPairs pair_aligned(const TimeSeries& trace, const LogFitModel& device_fit,
                          const DensitySeries& density, const AlignmentMap& map);

struct StitchResult {
  TimeSeries series;
  std::vector<double> offsets;        // per region, 0 for the first
  std::vector<std::size_t> midpoints;  // per region, sample index inside the region
};

/// Sample nearest the mean of the first and last times, ties to the earlier.
std::size_t region_midpoint(const TimeSeries& region);

/// Region 1 is kept as is; each later region is shifted so its midpoint
/// sample equals reference at that time. Throws StitchError when regions
/// overlap or are out of order.
StitchResult stitch_regions(std::span<const TimeSeries> regions, const LogFitModel& reference);

}  // namespace fnprime
