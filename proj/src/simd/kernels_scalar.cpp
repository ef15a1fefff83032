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
#include <cmath>
#include <cstddef>

#include "fnprime/simd/kernels.hpp"

namespace fnprime::simd::scalar {

double fn_tile_currents(std::span<const double> thickness, double v, double scale, double beta,
                        std::span<double> out) {
  const std::size_t n = thickness.size();
  const std::size_t body = n - n % 4;
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < body; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) {
      const double t = thickness[i + l];
      const double q = v / t;
      const double c = (scale * (q * q)) * std::exp((-beta * t) / v);
      out[i + l] = c;
      lane[l] += c;
    }
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) {
    const double t = thickness[i];
    const double q = v / t;
    const double c = (scale * (q * q)) * std::exp((-beta * t) / v);
    out[i] = c;
    sum += c;
  }
  return sum;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < body; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) lane[l] += x[i + l] * y[i + l];
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

}  // namespace fnprime::simd::scalar
