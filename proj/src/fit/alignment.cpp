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
#include <cmath>
#include <stdexcept>

#include "fnprime/error.hpp"
#include "fnprime/fit.hpp"

namespace fnprime {

AlignmentMap derive_alignment(const LogFitModel& device, const LogFitModel& prime) {
  if (prime.c2 == 0.0) throw DegenerateError("derive_alignment: prime model has c2 = 0");
  AlignmentMap map;
  map.scale = device.c2 / prime.c2;
  map.offset = (device.c3 - prime.c3) / prime.c2;
  if (!(map.scale > 0.0) || !std::isfinite(map.scale) || !std::isfinite(map.offset)) {
    throw DegenerateError("derive_alignment: time-to-index scale must be positive and finite");
  }
  map.t0 = 1.0 / map.scale;
  return map;
}

AlignedPairs pair_aligned(const TimeSeries& trace, const LogFitModel& device_fit,
                          const DensitySeries& density, const AlignmentMap& map) {
  validate(trace);
  if (density.points.size() < 2) {
    throw std::invalid_argument("pair_aligned: density series needs at least two points");
  }
  if (device_fit.c1 == 0.0) throw DegenerateError("pair_aligned: device fit has c1 = 0");
  const auto& pts = density.points;
  const double n_lo = static_cast<double>(pts.front().n);
  const double n_hi = static_cast<double>(pts.back().n);

  AlignedPairs out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double n = map.to_index(trace.times[i]);
    if (!(n >= n_lo && n <= n_hi)) continue;
    auto hi = std::lower_bound(pts.begin(), pts.end(), n,
                               [](const DensityPoint& p, double x) { return static_cast<double>(p.n) < x; });
    double p;
    if (static_cast<double>(hi->n) == n || hi == pts.begin()) {
      p = hi->value;
    } else {
      const auto lo = hi - 1;
      const double f = (n - static_cast<double>(lo->n)) /
                       static_cast<double>(hi->n - lo->n);
      p = lo->value + f * (hi->value - lo->value);
    }
    out.times.push_back(trace.times[i]);
    out.index.push_back(n);
    out.device.push_back(trace.values[i]);
    out.that.push_back((trace.values[i] - device_fit.c4) / device_fit.c1);
    out.density.push_back(p);
  }
  if (out.size() == 0) {
    throw std::invalid_argument(
        "pair_aligned: no device sample maps inside the density range [" +
        std::to_string(pts.front().n) + ", " + std::to_string(pts.back().n) + "]");
  }
  return out;
}

}  // namespace fnprime
