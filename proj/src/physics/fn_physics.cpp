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
#include "fnprime/fn_physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fnprime/error.hpp"

namespace fnprime {

void DeviceParams::validate() const {
  auto check = [](double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument(std::string("device params: ") + name +
                                  " must be positive and finite");
    }
  };
  check(alpha, "alpha");
  check(beta, "beta");
  check(capacitance, "capacitance");
  check(t_ox, "t_ox");
  check(v_init, "v_init");
  check(dt, "dt");
}

double fn_current_density(double field, double alpha, double beta) {
  if (!(field > 0.0)) throw std::domain_error("fn_current_density: field must be positive");
  return alpha * field * field * std::exp(-beta / field);
}

double fg_current(double v, const DeviceParams& p) {
  if (!(v > 0.0)) throw std::domain_error("fg_current: voltage must be positive");
  const double q = v / p.t_ox;
  return (p.alpha * (q * q)) * std::exp((-p.beta * p.t_ox) / v);
}

double fg_ode_rhs(double v, const DeviceParams& p) {
  if (!(v > 0.0)) throw std::domain_error("fg_ode_rhs: voltage must be positive");
  return -fg_current(v, p) / p.capacitance;
}

LogFitModel fg_closed_form(const DeviceParams& p) {
  p.validate();
  LogFitModel m;
  m.c1 = p.beta * p.t_ox;
  m.c2 = p.alpha * p.beta / (p.capacitance * p.t_ox);
  m.c3 = std::exp(p.beta * p.t_ox / p.v_init);
  m.c4 = 0.0;
  m.residual_rms = 0.0;
  m.t_min = 0.0;
  m.t_max = std::numeric_limits<double>::infinity();
  return m;
}

namespace {

void check_state(double v, std::size_t step) {
  if (!std::isfinite(v)) throw NumericalError("integrate: non-finite voltage", step);
  if (!(v > 0.0)) throw NumericalError("integrate: voltage left the positive range", step);
}

double target_factor(std::size_t j, int per_decade) {
  return std::pow(10.0, static_cast<double>(j) / per_decade);
}

}  // namespace

IntegrationResult integrate(const CurrentFn& current, double capacitance, double v_init,
                            double dt, double duration, const IntegrationOptions& options,
                            const SampleFn& on_sample) {
  if (!(duration > 0.0)) throw std::invalid_argument("integrate: duration must be positive");
  if (!(dt > 0.0) || !(capacitance > 0.0) || !(v_init > 0.0)) {
    throw std::invalid_argument("integrate: dt, capacitance and v_init must be positive");
  }
  if (options.samples_per_decade < 1) {
    throw std::invalid_argument("integrate: samples_per_decade must be >= 1");
  }

  IntegrationResult out;
  auto record = [&](double t, double v) {
    out.trace.push_back(t, v);
    if (on_sample) on_sample(t, v);
  };

  double v = v_init;
  record(0.0, v);
  std::size_t j = 0;  // next sample target index

  if (options.stepping == Stepping::Fixed) {
    const auto n_steps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(duration / dt - 1e-9)));
    for (std::size_t n = 1; n <= n_steps; ++n) {
      const double i = current(v);
      out.charge += i * dt;
      v -= i * dt / capacitance;
      check_state(v, n);
      const auto steps = static_cast<double>(n);
      bool due = n == n_steps;
      while (target_factor(j, options.samples_per_decade) <= steps) {
        due = true;
        ++j;
      }
      if (due) record(steps * dt, v);
    }
    out.steps = n_steps;
    return out;
  }

  if (!(options.growth >= 1.0) || !(options.max_step_dv > 0.0)) {
    throw std::invalid_argument("integrate: geometric stepping needs growth >= 1, max_step_dv > 0");
  }
  double t = 0.0;
  double nominal = dt;
  std::size_t step = 0;
  while (t < duration) {
    double target = std::min(dt * target_factor(j, options.samples_per_decade), duration);
    while (target <= t) {
      ++j;
      target = std::min(dt * target_factor(j, options.samples_per_decade), duration);
    }
    const double i = current(v);
    const double rate = i / capacitance;
    const double cap = rate > 0.0 ? options.max_step_dv / rate : nominal;
    const double free_step = std::min(nominal, cap);
    const double h = std::min(free_step, target - t);
    nominal = free_step * options.growth;

    out.charge += i * h;
    v -= rate * h;
    ++step;
    check_state(v, step);
    t += h;
    if (t >= target * (1.0 - 1e-15)) {
      t = target;
      record(t, v);
      ++j;
    }
  }
  out.steps = step;
  return out;
}

IntegrationResult integrate_fg(const DeviceParams& p, double duration,
                               const IntegrationOptions& options) {
  p.validate();
  return integrate([&p](double v) { return fg_current(v, p); }, p.capacitance, p.v_init, p.dt,
                   duration, options);
}

}  // namespace fnprime
