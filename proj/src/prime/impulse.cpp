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
#include <stdexcept>
#include <string>
#include <vector>

#include "fnprime/prime.hpp"
#include "fnprime/simd/kernels.hpp"

namespace fnprime {

ImpulseTrain impulse_train(const PrimeTable& table, double t0) {
  if (!(t0 > 0.0)) throw std::invalid_argument("impulse_train: t0 must be positive");
  ImpulseTrain train;
  train.t0 = t0;
  train.ticks = table.limit() + 1;
  train.events.assign(table.primes().begin(), table.primes().end());
  return train;
}

TimeSeries smooth_impulses(const ImpulseTrain& train, std::span<const double> fir,
                           std::uint64_t sample_stride) {
  if (fir.empty()) throw std::invalid_argument("smooth_impulses: empty filter");
  if (sample_stride < 1) throw std::invalid_argument("smooth_impulses: sample_stride must be >= 1");
  for (std::size_t i = 0; i < train.events.size(); ++i) {
    if (train.events[i] >= train.ticks || (i > 0 && train.events[i] <= train.events[i - 1])) {
      throw std::invalid_argument("smooth_impulses: events must ascend strictly inside the horizon");
    }
  }

  const std::uint64_t length = train.ticks + fir.size() - 1;
  std::vector<double> full(length, 0.0);
  const auto& k = simd::kernels();
  for (const std::uint64_t e : train.events) {
    k.axpy(1.0, fir, std::span<double>(full).subspan(e, fir.size()));
  }

  TimeSeries out;
  const std::uint64_t samples = (length + sample_stride - 1) / sample_stride;
  out.times.reserve(samples);
  out.values.reserve(samples);
  for (std::uint64_t i = 0; i < length; i += sample_stride) {
    out.push_back(static_cast<double>(i) * train.t0, full[i]);
  }
  return out;
}

}  // namespace fnprime
