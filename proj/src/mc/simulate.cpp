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
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fnprime/mc_sim.hpp"
#include "fnprime/simd/kernels.hpp"

namespace fnprime {
namespace {

constexpr std::size_t kBlock = 256;

}  // namespace

TileCurrents total_current(double v, const OxideGrid& grid, double alpha, double beta) {
  if (!(v > 0.0)) throw std::domain_error("total_current: voltage must be positive");
  TileCurrents out;
  out.per_tile.resize(grid.size());
  const auto& k = simd::kernels();
  for (std::size_t b = 0; b < grid.size(); b += kBlock) {
    const std::size_t len = std::min(kBlock, grid.size() - b);
    out.total += k.fn_tile_currents(std::span<const double>(grid.thickness).subspan(b, len), v,
                                    alpha * grid.tile_area, beta,
                                    std::span<double>(out.per_tile).subspan(b, len));
  }
  return out;
}

GridCurrent::GridCurrent(const OxideGrid& grid, double alpha, double beta, double prune_floor,
                         double prune_fraction)
    : order_(grid.size()),
      scale_(alpha * grid.tile_area),
      beta_(beta),
      prune_floor_(prune_floor),
      prune_fraction_(prune_fraction),
      scratch_(kBlock) {
  if (grid.size() == 0) throw std::invalid_argument("GridCurrent: empty grid");
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return grid.thickness[a] < grid.thickness[b];
  });
  sorted_.reserve(order_.size());
  for (const std::size_t i : order_) sorted_.push_back(grid.thickness[i]);
}

GridCurrent::Eval GridCurrent::operator()(double v) const {
  if (!(v > 0.0)) throw std::domain_error("GridCurrent: voltage must be positive");
  const auto& k = simd::kernels();
  Eval e;
  const std::size_t n = sorted_.size();
  for (std::size_t b = 0; b < n; b += kBlock) {
    const std::size_t len = std::min(kBlock, n - b);
    std::span<double> out(scratch_.data(), len);
    e.total += k.fn_tile_currents(std::span<const double>(sorted_).subspan(b, len), v, scale_,
                                  beta_, out);
    if (b == 0) e.thinnest = out[0];
    const double smallest = out[len - 1];
    const std::size_t remaining = n - b - len;
    if (remaining > 0 && smallest < prune_floor_ &&
        smallest * static_cast<double>(remaining) < prune_fraction_ * e.total) {
      e.pruned = remaining;
      break;
    }
  }
  return e;
}

void McConfig::validate() const {
  auto positive = [](double value, const char* name) {
    if (!(value > 0.0)) throw std::invalid_argument(std::string("mc config: ") + name + " must be positive");
  };
  if (nx < 1 || ny < 1) throw std::invalid_argument("mc config: nx and ny must be >= 1");
  positive(mean_thickness, "mean_thickness");
  if (!(rel_std >= 0.0 && rel_std < 0.5)) {
    throw std::invalid_argument("mc config: rel_std must lie in [0, 0.5)");
  }
  positive(tile_area, "tile_area");
  positive(capacitance, "capacitance");
  positive(alpha, "alpha");
  positive(beta, "beta");
  positive(v_init, "v_init");
  positive(dt, "dt");
  positive(duration, "duration");
  if (prune_floor < 0.0 || prune_fraction < 0.0) {
    throw std::invalid_argument("mc config: pruning thresholds must be non-negative");
  }
}

DeviceParams equivalent_single_barrier(const McConfig& cfg) {
  DeviceParams p;
  p.alpha = cfg.alpha * static_cast<double>(cfg.nx) * static_cast<double>(cfg.ny) * cfg.tile_area;
  p.beta = cfg.beta;
  p.capacitance = cfg.capacitance;
  p.t_ox = cfg.mean_thickness;
  p.v_init = cfg.v_init;
  p.dt = cfg.dt;
  return p;
}

McResult simulate_mc(const McConfig& cfg) {
  cfg.validate();
  McResult r;
  r.grid = sample_grid(cfg.nx, cfg.ny, cfg.mean_thickness, cfg.rel_std, cfg.tile_area, cfg.seed);
  const GridCurrent current(r.grid, cfg.alpha, cfg.beta, cfg.prune_floor, cfg.prune_fraction);
  r.dominance.min_tile = current.thinnest_index();

  double cached_v = -1.0;
  GridCurrent::Eval cached;
  auto eval = [&](double v) {
    if (v != cached_v) {
      cached = current(v);
      cached_v = v;
      r.pruned_tiles += cached.pruned;
    }
    return cached;
  };

  auto integ = integrate([&](double v) { return eval(v).total; }, cfg.capacitance, cfg.v_init,
                         cfg.dt, cfg.duration, cfg.integration, [&](double t, double v) {
                           const auto e = eval(v);
                           r.dominance.times.push_back(t);
                           r.dominance.share.push_back(e.thinnest / e.total);
                         });
  r.trace = std::move(integ.trace);
  r.steps = integ.steps;
  r.charge = integ.charge;
  return r;
}

}  // namespace fnprime
