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
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnprime/fit.hpp"

namespace fnprime {
namespace {

// The optimizer works on theta = (c1, c4, q, w) with
//   ln(c2 t + c3) = A0 + ln(1 + (t - t_ref) / s),  A0 = exp(q),  s = exp(w),
// which keeps the log argument above 1 on [t_ref, inf) for every theta and
// puts the two stiff coefficients on a log scale. c1 and c4 enter linearly
// and are eliminated (variable projection); Levenberg-Marquardt runs on (q, w).
struct Theta {
  double c1;
  double c4;
  double q;
  double w;
};

constexpr double kMaxA0 = 700.0;

double log_arg(double t, double t_ref, double a0, double s) {
  return a0 + std::log1p((t - t_ref) / s);
}

LogFitModel to_model(const Theta& th, double t_ref) {
  const double a0 = std::min(std::exp(th.q), kMaxA0);
  const double s = std::exp(th.w);
  const double ea = std::exp(a0);
  LogFitModel m;
  m.c1 = th.c1;
  m.c2 = ea / s;
  m.c3 = ea * (1.0 - t_ref / s);
  m.c4 = th.c4;
  return m;
}

// Variable projection over a (A0, s) grid: c1 and c4 enter linearly, so each
// grid point is a 2x2 least-squares solve.
Theta initial_guess(const std::vector<double>& t, const std::vector<double>& y, double t_ref) {
  const std::size_t n = t.size();
  const std::size_t stride = std::max<std::size_t>(1, n / 2000);
  std::vector<double> ts, ys;
  for (std::size_t i = 0; i < n; i += stride) {
    ts.push_back(t[i]);
    ys.push_back(y[i]);
  }
  if ((n - 1) % stride != 0) {
    ts.push_back(t.back());
    ys.push_back(y.back());
  }
  const double span = t.back() - t.front();

  Theta best{0.0, y.back(), 0.0, std::log(span)};
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<double> b(ts.size());
  for (int ia = 0; ia <= 120; ++ia) {
    const double a0 = std::pow(10.0, -2.0 + 5.0 * ia / 120.0);  // 1e-2 .. 1e3
    if (a0 >= kMaxA0) break;
    for (int is = 0; is <= 120; ++is) {
      const double s = span * std::pow(10.0, -8.0 + 11.0 * is / 120.0);  // span * [1e-8, 1e3]
      double bm = 0.0, ym = 0.0;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        b[i] = 1.0 / log_arg(ts[i], t_ref, a0, s);
        bm += b[i];
        ym += ys[i];
      }
      bm /= ts.size();
      ym /= ts.size();
      double sbb = 0.0, sby = 0.0;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        sbb += (b[i] - bm) * (b[i] - bm);
        sby += (b[i] - bm) * (ys[i] - ym);
      }
      if (!(sbb > 0.0)) continue;
      const double c1 = sby / sbb;
      const double c4 = ym - c1 * bm;
      double c = 0.0;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const double r = c1 * b[i] + c4 - ys[i];
        c += r * r;
      }
      if (c < best_cost) {
        best_cost = c;
        best = {c1, c4, std::log(a0), std::log(s)};
      }
    }
  }
  return best;
}

void check_input(const TimeSeries& s, MonotoneCheck monotone) {
  validate(s);
  if (s.size() < 8) throw std::invalid_argument("fit_log_model: need at least 8 samples");
  const double t0 = s.times.front();
  const double t1 = s.times.back();
  if (t0 > 0.0 && t1 < 10.0 * t0) {
    throw std::invalid_argument("fit_log_model: samples must span at least one decade in time");
  }
  for (double v : s.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("fit_log_model: non-finite value");
  }
  if (monotone == MonotoneCheck::NonIncreasing) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s.values[i] > s.values[i - 1]) {
        throw std::invalid_argument("fit_log_model: values rise at index " + std::to_string(i) +
                                    "; series must be non-increasing");
      }
    }
  } else {
    const std::size_t k = std::max<std::size_t>(1, s.size() / 10);
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      head += s.values[i];
      tail += s.values[s.size() - 1 - i];
    }
    if (!(tail < head)) {
      throw std::invalid_argument("fit_log_model: series does not trend downward");
    }
  }
}

}  // namespace

LogFitModel fit_log_model(const TimeSeries& series, const FitOptions& options) {
  check_input(series, options.monotone);
  const auto& t = series.times;
  const auto& y = series.values;
  const std::size_t n = t.size();
  const double t_ref = t.front();

  if (y.front() == y.back() && options.monotone == MonotoneCheck::NonIncreasing) {
    LogFitModel m;
    m.c1 = 0.0;
    m.c2 = 1.0 / (t.back() - t.front());
    m.c3 = std::max(std::exp(1.0), std::exp(1.0) - m.c2 * t_ref);
    m.c4 = y.front();
    m.t_min = t.front();
    m.t_max = t.back();
    return m;
  }

  Theta th = initial_guess(t, y, t_ref);
  std::vector<double> basis(n), res(n), dq(n), dw(n);

  // Solves the linear pair (c1, c4) for fixed (q, w); returns the cost.
  auto project = [&](Theta& cand) {
    const double a0 = std::exp(cand.q);
    const double s = std::exp(cand.w);
    if (!(a0 < kMaxA0) || !std::isfinite(s) || !(s > 0.0)) {
      return std::numeric_limits<double>::infinity();
    }
    double bm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      basis[i] = 1.0 / log_arg(t[i], t_ref, a0, s);
      bm += basis[i];
      ym += y[i];
    }
    bm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double sbb = 0.0, sby = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sbb += (basis[i] - bm) * (basis[i] - bm);
      sby += (basis[i] - bm) * (y[i] - ym);
    }
    if (!(sbb > 0.0)) return std::numeric_limits<double>::infinity();
    cand.c1 = sby / sbb;
    cand.c4 = ym - cand.c1 * bm;
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = cand.c1 * basis[i] + cand.c4 - y[i];
      c += r * r;
    }
    return std::isfinite(c) ? c : std::numeric_limits<double>::infinity();
  };

  // Removes the components along the linear basis [1/L, 1] (Kaufman's
  // variable-projection Jacobian).
  auto deflate = [&](std::vector<double>& d) {
    double bm = 0.0, dm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      bm += basis[i];
      dm += d[i];
    }
    bm /= static_cast<double>(n);
    dm /= static_cast<double>(n);
    double sbb = 0.0, sbd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sbb += (basis[i] - bm) * (basis[i] - bm);
      sbd += (basis[i] - bm) * (d[i] - dm);
    }
    const double k = sbb > 0.0 ? sbd / sbb : 0.0;
    for (std::size_t i = 0; i < n; ++i) d[i] = (d[i] - dm) - k * (basis[i] - bm);
  };

  double cost = project(th);
  double lambda = 1e-3;
  bool converged = !std::isfinite(cost) ? false : cost == 0.0;
  if (!std::isfinite(cost)) throw std::invalid_argument("fit_log_model: no finite starting point");
  int iter = 0;

  for (; iter < options.max_iterations && !converged; ++iter) {
    project(th);  // refresh basis for the current point
    const double a0 = std::exp(th.q);
    const double s = std::exp(th.w);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (t[i] - t_ref) / s;
      const double inv_l = basis[i];
      res[i] = th.c1 * inv_l + th.c4 - y[i];
      dq[i] = -th.c1 * inv_l * inv_l * a0;
      dw[i] = th.c1 * inv_l * inv_l * u / (1.0 + u);
    }
    deflate(dq);
    deflate(dw);

    Eigen::Matrix2d jtj;
    Eigen::Vector2d jtr;
    jtj(0, 0) = std::inner_product(dq.begin(), dq.end(), dq.begin(), 0.0);
    jtj(1, 1) = std::inner_product(dw.begin(), dw.end(), dw.begin(), 0.0);
    jtj(0, 1) = jtj(1, 0) = std::inner_product(dq.begin(), dq.end(), dw.begin(), 0.0);
    jtr(0) = std::inner_product(dq.begin(), dq.end(), res.begin(), 0.0);
    jtr(1) = std::inner_product(dw.begin(), dw.end(), res.begin(), 0.0);
    Eigen::Vector2d scale(std::sqrt(jtj(0, 0)), std::sqrt(jtj(1, 1)));
    for (int k = 0; k < 2; ++k) {
      if (!(scale(k) > 0.0)) scale(k) = 1.0;
    }
    // Scaled normal equations: (S^-1 J^T J S^-1 + lambda I) z = -S^-1 J^T r, step = S^-1 z.
    const Eigen::Matrix2d a = scale.cwiseInverse().asDiagonal() * jtj * scale.cwiseInverse().asDiagonal();
    const Eigen::Vector2d g = -jtr.cwiseQuotient(scale);

    bool accepted = false;
    while (!accepted) {
      const Eigen::Matrix2d damped = a + lambda * Eigen::Matrix2d::Identity();
      const Eigen::Vector2d step = damped.ldlt().solve(g).cwiseQuotient(scale);
      Theta trial{0.0, 0.0, th.q + step(0), th.w + step(1)};
      const double trial_cost = project(trial);
      if (trial_cost < cost) {
        const double drop = (cost - trial_cost) / cost;
        th = trial;
        cost = trial_cost;
        lambda = std::max(lambda * 0.3, 1e-15);
        accepted = true;
        if (drop < options.tolerance || cost == 0.0) converged = true;
      } else {
        lambda *= 10.0;
        if (lambda > 1e16) {
          // No descent left at working precision.
          converged = true;
          break;
        }
      }
    }
  }
  project(th);

  LogFitModel m = to_model(th, t_ref);
  m.t_min = t.front();
  m.t_max = t.back();
  m.iterations = static_cast<std::size_t>(iter);
  m.converged = converged;
  m.residual_rms = std::sqrt(cost / static_cast<double>(n));
  if (!converged) {
    throw ConvergenceError("fit_log_model: no convergence after " +
                               std::to_string(options.max_iterations) + " iterations",
                           m);
  }
  return m;
}

TimeSeries model_residuals(const TimeSeries& series, const LogFitModel& model) {
  TimeSeries out;
  out.times = series.times;
  out.values.resize(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    out.values[i] = series.values[i] - closed_form_model(series.times[i], model);
  }
  return out;
}

}  // namespace fnprime
