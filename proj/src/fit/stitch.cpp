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
#include <string>

#include "fnprime/error.hpp"
#include "fnprime/fit.hpp"

namespace fnprime {

std::size_t region_midpoint(const TimeSeries& region) {
  if (region.empty()) throw std::invalid_argument("region_midpoint: empty region");
  const double mid = 0.5 * (region.times.front() + region.times.back());
  std::size_t best = 0;
  double best_gap = std::abs(region.times[0] - mid);
  for (std::size_t i = 1; i < region.size(); ++i) {
    const double gap = std::abs(region.times[i] - mid);
    if (gap < best_gap) {
      best = i;
      best_gap = gap;
    }
  }
  return best;
}

StitchResult stitch_regions(std::span<const TimeSeries> regions, const LogFitModel& reference) {
  if (regions.empty()) throw std::invalid_argument("stitch_regions: no regions");
  StitchResult out;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const TimeSeries& region = regions[r];
    validate(region);
    if (region.empty()) throw std::invalid_argument("stitch_regions: region " + std::to_string(r + 1) + " is empty");
    if (r > 0 && !(region.times.front() > regions[r - 1].times.back())) {
      throw StitchError("stitch_regions: region " + std::to_string(r + 1) +
                        " overlaps or precedes region " + std::to_string(r));
    }
    const std::size_t mid = region_midpoint(region);
    const double offset =
        r == 0 ? 0.0 : closed_form_model(region.times[mid], reference) - region.values[mid];
    out.offsets.push_back(offset);
    out.midpoints.push_back(mid);
    for (std::size_t i = 0; i < region.size(); ++i) {
      out.series.push_back(region.times[i], region.values[i] + offset);
    }
  }
  return out;
}

}  // namespace fnprime
