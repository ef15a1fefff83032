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
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fnprime/error.hpp"
#include "fnprime/fn_physics.hpp"
#include "fnprime/log_model.hpp"
#include "support.hpp"

using namespace fnprime;
using fnprime::testing::Gen;

// Reference values computed at 40 significant digits with mpmath.
TEST_CASE("fn current against high-precision reference") {
  CHECK(fn_current_density(2e8, 1.0, 1e9) / fn_current_density(1e8, 1.0, 1e9) ==
        doctest::Approx(593.65263641030641368).epsilon(1e-13));
  const DeviceParams p;
  CHECK(fg_ode_rhs(8.0, p) == doctest::Approx(-1.0211644350543669482e-5).epsilon(1e-13));
  CHECK(fg_current(8.0, p) == doctest::Approx(1.0211644350543669482e-5 * p.capacitance).epsilon(1e-13));
  const LogFitModel m = fg_closed_form(p);
  CHECK(m.c1 == doctest::Approx(p.beta * p.t_ox).epsilon(1e-15));
  CHECK(m.c2 == doctest::Approx(4.0242195183579846e13).epsilon(1e-13));
  CHECK(m.c3 == doctest::Approx(7.6558906766982720e17).epsilon(1e-12));
  CHECK(m.c4 == 0.0);
}

TEST_CASE("closed form solves the device ode") {
  Gen g(5);
  const DeviceParams p;
  const LogFitModel m = fg_closed_form(p);
  for (int i = 0; i < 50; ++i) {
    const double t = g.log_uniform(1.0, 1e9);
    const double h = 1e-5 * t;
    const double deriv = (closed_form_model(t + h, m) - closed_form_model(t - h, m)) / (2 * h);
    REQUIRE(deriv == doctest::Approx(fg_ode_rhs(closed_form_model(t, m), p)).epsilon(1e-6));
  }
  CHECK(closed_form_model(0.0, m) == doctest::Approx(p.v_init).epsilon(1e-14));
}

TEST_CASE("normalized time variable solves its ode") {
  // -dT/dt = (T^2 / t0) exp(-1/T) for T = 1 / ln(t / t0)
  Gen g(9);
  for (int i = 0; i < 50; ++i) {
    const double t0 = g.log_uniform(1e-3, 1e3);
    const double t = t0 * g.log_uniform(1.5, 1e12);
    const double h = 1e-6 * t;
    const double deriv = (analytic_that(t + h, t0) - analytic_that(t - h, t0)) / (2 * h);
    const double T = analytic_that(t, t0);
    const double rhs = T * T / t0 * std::exp(-1.0 / T);
    REQUIRE(-deriv == doctest::Approx(rhs).epsilon(1e-6));
  }
  CHECK_THROWS_AS(analytic_that(1.0, 1.0), std::domain_error);
}

TEST_CASE("fixed-step euler tracks the exact solution") {
  DeviceParams p;
  const auto r = integrate_fg(p, 1e6);
  const LogFitModel m = fg_closed_form(p);
  CHECK(r.trace.times.front() == 0.0);
  CHECK(r.trace.values.front() == p.v_init);
  CHECK(r.trace.times.back() == 1e6);
  CHECK(r.steps == 1000000);
  double ss = 0.0;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const double d = r.trace.values[i] - closed_form_model(r.trace.times[i], m);
    ss += d * d;
  }
  CHECK(std::sqrt(ss / r.trace.size()) < 1e-5);
  // Charge conservation: C * dV equals the integrated current.
  CHECK(r.charge == doctest::Approx(p.capacitance * (p.v_init - r.trace.values.back())).epsilon(1e-12));
  for (std::size_t i = 1; i < r.trace.size(); ++i) REQUIRE(r.trace.values[i] < r.trace.values[i - 1]);
}

TEST_CASE("geometric stepping lands on the horizon") {
  DeviceParams p;
  IntegrationOptions o;
  o.stepping = Stepping::Geometric;
  o.max_step_dv = 1e-4;
  std::size_t callbacks = 0;
  const auto r = integrate([&](double v) { return fg_current(v, p); }, p.capacitance, p.v_init, p.dt,
                           1e8, o, [&](double, double) { ++callbacks; });
  CHECK(callbacks == r.trace.size());
  CHECK(r.trace.times.back() == 1e8);
  CHECK(r.steps < 200000);
  CHECK(r.charge == doctest::Approx(p.capacitance * (p.v_init - r.trace.values.back())).epsilon(1e-4));
  for (std::size_t i = 1; i < r.trace.size(); ++i) REQUIRE(r.trace.values[i] < r.trace.values[i - 1]);
  const LogFitModel m = fg_closed_form(p);
  CHECK(r.trace.values.back() == doctest::Approx(closed_form_model(1e8, m)).epsilon(1e-4));
}

TEST_CASE("fixed stepping is covariant under a joint time and capacitance scale") {
  // Scaling C and dt by k leaves the step map unchanged; times scale by k.
  DeviceParams a;
  DeviceParams b = a;
  b.capacitance *= 10.0;
  b.dt *= 10.0;
  const auto ra = integrate_fg(a, 1e5);
  const auto rb = integrate_fg(b, 1e6);
  REQUIRE(ra.trace.size() == rb.trace.size());
  for (std::size_t i = 0; i < ra.trace.size(); ++i) {
    REQUIRE(rb.trace.times[i] == doctest::Approx(10.0 * ra.trace.times[i]).epsilon(1e-12));
    REQUIRE(rb.trace.values[i] == doctest::Approx(ra.trace.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("fixed stepping is covariant under a prefactor scale") {
  // alpha * k with dt / k and duration / k: same values at times / k.
  DeviceParams a;
  DeviceParams b = a;
  b.alpha *= 8.0;
  b.dt /= 8.0;
  const auto ra = integrate_fg(a, 8e5);
  const auto rb = integrate_fg(b, 1e5);
  REQUIRE(ra.trace.size() == rb.trace.size());
  for (std::size_t i = 0; i < ra.trace.size(); ++i) {
    REQUIRE(rb.trace.times[i] == doctest::Approx(ra.trace.times[i] / 8.0).epsilon(1e-12));
    REQUIRE(rb.trace.values[i] == doctest::Approx(ra.trace.values[i]).epsilon(1e-9));
  }
}

TEST_CASE("invalid parameters and numerical failures") {
  DeviceParams p;
  p.capacitance = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_THROWS_AS(fn_current_density(0.0, 1.0, 1.0), std::domain_error);
  // A huge step overshoots zero volts.
  CHECK_THROWS_AS(integrate([](double v) { return v; }, 1.0, 1.0, 2.0, 10.0, {}), NumericalError);
}
