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
#include <cstdint>
#include <string_view>
#include <vector>

#include "fnprime/fn_physics.hpp"
#include "fnprime/series.hpp"

namespace fnprime {

/// Oxide thickness per tile, row-major: index = x * ny + y.
struct OxideGrid {
  int nx = 0;
  int ny = 0;
  double tile_area = 0.0;  // m^2
  double mean = 0.0;
  double rel_std = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> thickness;  // m

  std::size_t size() const noexcept { return thickness.size(); }
  double at(int x, int y) const { return thickness.at(static_cast<std::size_t>(x) * ny + y); }
};

/// Tile thicknesses i.i.d. uniform on mean * [1 - sqrt(3) rel_std, 1 + sqrt(3) rel_std],
/// tile i drawn from Philox block i of the seed. rel_std = 0 gives exactly mean.
OxideGrid sample_grid(int nx, int ny, double mean, double rel_std, double tile_area,
                      std::uint64_t seed);

struct TileCurrents {
  double total = 0.0;
  std::vector<double> per_tile;  // amperes, grid order
};

/// Per tile alpha * (v / t)^2 * exp(-beta t / v) * tile_area; alpha is the FN
/// prefactor per unit area (A / V^2).
TileCurrents total_current(double v, const OxideGrid& grid, double alpha, double beta);

/// J(t_min) / J(t) = (t / t_min)^2 exp(beta (t - t_min) / v).
double current_ratio(double t_min, double t, double v, double beta);

struct McConfig {
  int nx = 100;
  int ny = 100;
  double mean_thickness = defaults::kOxideThickness;
  double rel_std = 0.05;
  double tile_area = defaults::kJunctionArea / 1e4;
  std::uint64_t seed = 1;

  double capacitance = defaults::kCapacitance;  // C_T
  double alpha = defaults::kFnPrefactor;        // per unit area
  double beta = defaults::kFnBeta;
  double v_init = defaults::kInitialVoltage;
  double dt = defaults::kTimeStep;
  double duration = 1e6;
  IntegrationOptions integration{Stepping::Geometric};

  // A sorted block of tiles ends the sum once its smallest current is below
  // prune_floor and (remaining tiles) * (that current) < prune_fraction * total.
  double prune_floor = 1e-30;
  double prune_fraction = 1e-9;

  void validate() const;
};

/// Share of the total current carried by the thinnest tile at each sample.
struct DominanceSeries {
  std::vector<double> times;
  std::vector<double> share;
  std::size_t min_tile = 0;  // grid index of the thinnest tile
};

struct McResult {
  OxideGrid grid;
  TimeSeries trace;
  DominanceSeries dominance;
  std::size_t steps = 0;
  double charge = 0.0;
  std::size_t pruned_tiles = 0;  // summed over all evaluations
};

/// Total-current evaluation over a fixed grid in ascending-thickness order
/// with fixed 256-tile blocks, so the reduction order is independent of
/// thread count and instruction set.
class GridCurrent {
 public:
  GridCurrent(const OxideGrid& grid, double alpha, double beta, double prune_floor = 0.0,
              double prune_fraction = 0.0);

  struct Eval {
    double total = 0.0;
    double thinnest = 0.0;  // current through the thinnest tile
    std::size_t pruned = 0;
  };

  Eval operator()(double v) const;
  std::size_t thinnest_index() const noexcept { return order_.front(); }

 private:
  std::vector<double> sorted_;
  std::vector<std::size_t> order_;
  double scale_;
  double beta_;
  double prune_floor_;
  double prune_fraction_;
  mutable std::vector<double> scratch_;
};

McResult simulate_mc(const McConfig& cfg);

/// Single-barrier parameters equivalent to a uniform grid of cfg: alpha is
/// scaled by nx * ny * tile_area and t_ox = mean_thickness.
DeviceParams equivalent_single_barrier(const McConfig& cfg);

}  // namespace fnprime
