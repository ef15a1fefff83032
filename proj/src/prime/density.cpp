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
#include <stdexcept>
#include <string>

#include "fnprime/prime.hpp"

namespace fnprime {

DensitySeries density_series(const PrimeTable& table, std::uint64_t stride) {
  if (stride < 1) throw std::invalid_argument("density_series: stride must be >= 1");
  DensitySeries out;
  out.stride = stride;
  const auto ps = table.primes();
  std::size_t idx = 0;
  auto emit = [&](std::uint64_t n) {
    while (idx < ps.size() && ps[idx] <= n) ++idx;
    out.points.push_back({n, idx, static_cast<double>(idx) / static_cast<double>(n)});
  };
  const std::uint64_t limit = table.limit();
  for (std::uint64_t n = stride; n <= limit; n += stride) emit(n);
  if (limit >= 1 && limit % stride != 0) emit(limit);
  return out;
}

TimeSeries DensitySeries::as_time_series() const {
  TimeSeries s;
  s.times.reserve(points.size());
  s.values.reserve(points.size());
  for (const auto& p : points) s.push_back(static_cast<double>(p.n), p.value);
  return s;
}

double pnt_expansion(double t, double t0, double amplitude, int order) {
  if (order < 1 || order > 3) {
    throw std::invalid_argument("pnt_expansion: order must be 1, 2 or 3, got " +
                                std::to_string(order));
  }
  if (!(t0 > 0.0) || !(t > t0)) throw std::domain_error("pnt_expansion: requires t > t0 > 0");
  const double h = 1.0 / std::log(t / t0);
  double sum = h;
  if (order >= 2) sum += h * h;
  if (order >= 3) sum += 2.0 * h * h * h;
  return amplitude * sum;
}

}  // namespace fnprime
