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
#include <stdexcept>

#include "fnprime/error.hpp"
#include "fnprime/fit.hpp"
#include "fnprime/simd/kernels.hpp"

namespace fnprime {
namespace {

double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double r_squared(double ssr, double sst) {
  if (!(sst > 0.0)) return ssr == 0.0 ? 1.0 : 0.0;
  return std::clamp(1.0 - ssr / sst, 0.0, 1.0);
}

PolyFit cubic_fit(std::span<const double> x, std::span<const double> y, double sst) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const double mu = mean(x);
  double var = 0.0;
  for (double v : x) var += (v - mu) * (v - mu);
  const double sigma = std::sqrt(var / static_cast<double>(x.size()));

  Eigen::MatrixXd basis(n, 4);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = (x[i] - mu) / sigma;
    basis(i, 0) = 1.0;
    basis(i, 1) = z;
    basis(i, 2) = z * z;
    basis(i, 3) = z * z * z;
    rhs(i) = y[i];
  }
  const Eigen::Vector4d a = basis.colPivHouseholderQr().solve(rhs);
  const Eigen::VectorXd r = rhs - basis * a;

  // Expand sum a_k ((x - mu) / sigma)^k into powers of x.
  PolyFit fit;
  const double binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  for (int k = 0; k < 4; ++k) {
    const double ak = a(k) / std::pow(sigma, k);
    for (int j = 0; j <= k; ++j) {
      fit.coeffs[j] += ak * binom[k][j] * std::pow(-mu, k - j);
    }
  }
  fit.r_squared = r_squared(r.squaredNorm(), sst);
  return fit;
}

}  // namespace

RegressionReport regress_linear(std::span<const double> x, std::span<const double> y,
                                bool higher_order, std::span<const double> times) {
  if (x.size() != y.size()) throw std::invalid_argument("regress_linear: x and y differ in length");
  if (x.size() < 3) throw std::invalid_argument("regress_linear: need at least 3 samples");
  if (!times.empty() && times.size() != x.size()) {
    throw std::invalid_argument("regress_linear: times length differs from x");
  }
  const double mx = mean(x);
  const double my = mean(y);
  std::vector<double> dx(x.size()), dy(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    dx[i] = x[i] - mx;
    dy[i] = y[i] - my;
  }
  const auto& k = simd::kernels();
  const double sxx = k.dot(dx, dx);
  if (!(sxx > 0.0)) throw DegenerateError("regress_linear: regressor x is constant");
  const double sxy = k.dot(dx, dy);
  const double syy = k.dot(dy, dy);

  RegressionReport rep;
  rep.slope = sxy / sxx;
  rep.intercept = my - rep.slope * mx;
  rep.residuals.values.resize(x.size());
  rep.residuals.times.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    rep.residuals.values[i] = y[i] - (rep.slope * x[i] + rep.intercept);
    rep.residuals.times[i] = times.empty() ? static_cast<double>(i) : times[i];
  }
  const double ssr = k.dot(rep.residuals.values, rep.residuals.values);
  rep.r_squared = r_squared(ssr, syy);
  if (higher_order) rep.higher_order = cubic_fit(x, y, syy);
  return rep;
}

}  // namespace fnprime
