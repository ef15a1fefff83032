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

#include <cstddef>
#include <functional>

#include "fnprime/log_model.hpp"
#include "fnprime/series.hpp"

namespace fnprime {

namespace defaults {
// Fowler-Nordheim constants for a 3.2 eV barrier and m*/m0 = 0.42.
inline constexpr double kFnPrefactor = 1.1469002030666241e-6;  // A / V^2
inline constexpr double kFnBeta = 2.5341182741858063e10;       // V / m
inline constexpr double kJunctionArea = 36e-12;                // 6 um x 6 um
inline constexpr double kAlpha = 4.128840731039847e-17;        // kFnPrefactor * kJunctionArea
inline constexpr double kCapacitance = 2e-12;
inline constexpr double kOxideThickness = 13e-9;
inline constexpr double kInitialVoltage = 8.0;
inline constexpr double kTimeStep = 1.0;
}  // namespace defaults

/// Single-barrier floating-gate device. alpha absorbs the junction area, so
/// alpha * (V / t_ox)^2 * exp(-beta * t_ox / V) is a current in amperes.
struct DeviceParams {
  double alpha = defaults::kAlpha;
  double beta = defaults::kFnBeta;
  double capacitance = defaults::kCapacitance;
  double t_ox = defaults::kOxideThickness;
  double v_init = defaults::kInitialVoltage;
  double dt = defaults::kTimeStep;

  /// Throws std::invalid_argument naming the first non-positive field.
  void validate() const;
};

/// alpha * E^2 * exp(-beta / E). Throws std::domain_error for E <= 0.
double fn_current_density(double field, double alpha, double beta);

/// Tunneling current through the uniform barrier at voltage v.
double fg_current(double v, const DeviceParams& p);

/// dV/dt = -(alpha / C) (v / t_ox)^2 exp(-beta t_ox / v). Throws std::domain_error for v <= 0.
double fg_ode_rhs(double v, const DeviceParams& p);

/// Exact solution of the single-barrier dynamics as a member of the log
/// family: V(t) = beta t_ox / ln(K t + exp(beta t_ox / v_init)),
/// K = alpha beta / (C t_ox).
LogFitModel fg_closed_form(const DeviceParams& p);

enum class Stepping { Fixed, Geometric };

struct IntegrationOptions {
  Stepping stepping = Stepping::Fixed;
  int samples_per_decade = 512;
  double growth = 1.01;       // geometric: nominal step multiplier
  double max_step_dv = 1e-5;  // geometric: cap on |dv| per step, volts
};

struct IntegrationResult {
  TimeSeries trace;        // t = 0 first, then log-spaced samples, last at the end time
  double charge = 0.0;     // sum of I * dt over all steps, coulombs
  std::size_t steps = 0;
};

/// Current drawn from the floating gate at voltage v, amperes.
using CurrentFn = std::function<double(double v)>;
/// Called at every recorded sample.
using SampleFn = std::function<void(double t, double v)>;

/// Explicit Euler on C dv/dt = -current(v) from v_init over [0, duration].
///
/// Fixed stepping takes steps of exactly dt and records the state at the
/// first step reaching each target dt * 10^(j / samples_per_decade); the
/// targets are compared in step units so a uniform rescaling of time and
/// current reproduces the same steps. Geometric stepping grows the nominal
/// step by options.growth, caps it so |dv| <= max_step_dv, and shortens steps
/// to land exactly on sample targets and on duration.
///
/// Throws NumericalError when the state becomes non-finite or non-positive.
IntegrationResult integrate(const CurrentFn& current, double capacitance, double v_init,
                            double dt, double duration, const IntegrationOptions& options,
                            const SampleFn& on_sample = {});

IntegrationResult integrate_fg(const DeviceParams& p, double duration,
                               const IntegrationOptions& options = {});

}  // namespace fnprime
