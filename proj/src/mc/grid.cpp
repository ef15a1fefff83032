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

#include "fnprime/mc_sim.hpp"
#include "fnprime/rng.hpp"

namespace fnprime {

OxideGrid sample_grid(int nx, int ny, double mean, double rel_std, double tile_area,
                      std::uint64_t seed) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("sample_grid: nx and ny must be >= 1");
  if (!(mean > 0.0)) throw std::invalid_argument("sample_grid: mean must be positive");
  if (!(rel_std >= 0.0 && rel_std < 0.5)) {
    throw std::invalid_argument("sample_grid: rel_std must lie in [0, 0.5)");
  }
  if (!(tile_area > 0.0)) throw std::invalid_argument("sample_grid: tile_area must be positive");

  OxideGrid g;
  g.nx = nx;
  g.ny = ny;
  g.tile_area = tile_area;
  g.mean = mean;
  g.rel_std = rel_std;
  g.seed = seed;
  const std::size_t n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  g.thickness.resize(n);
  if (rel_std == 0.0) {
    g.thickness.assign(n, mean);
    return g;
  }
  const double half_width = std::sqrt(3.0) * rel_std * mean;
  const double lo = mean - half_width;
  const Philox4x32 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    g.thickness[i] = lo + 2.0 * half_width * rng.uniform(i);
  }
  return g;
}

double current_ratio(double t_min, double t, double v, double beta) {
  if (!(t_min > 0.0) || !(t >= t_min) || !(v > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("current_ratio: requires 0 < t_min <= t, v > 0, beta > 0");
  }
  const double r = t / t_min;
  return r * r * std::exp(beta * (t - t_min) / v);
}

}  // namespace fnprime
