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

#include <cstdint>
#include <span>
#include <vector>

#include "fnprime/series.hpp"

namespace fnprime {

/// All primes <= limit, ascending. Immutable once built.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

/// Segmented sieve of Eratosthenes over odd numbers. Segments are sieved on
/// up to thread_count() workers and merged in order, so the table does not
/// depend on the worker count.
PrimeTable sieve_primes(std::uint64_t limit);

/// pi(n). Throws std::out_of_range when n > table.limit().
std::uint64_t prime_count(const PrimeTable& table, std::uint64_t n);

struct DensityPoint {
  std::uint64_t n;
  std::uint64_t pi_n;
  double value;  // pi_n / n
};

struct DensitySeries {
  std::uint64_t stride = 0;
  std::vector<DensityPoint> points;

  /// (n, pi(n)/n) as a time series with time = n.
  TimeSeries as_time_series() const;
};

/// Points at n = stride, 2*stride, ... <= limit. When limit is not a multiple
/// of stride a final point at n = limit is appended so the series always ends
/// at the table limit.
DensitySeries density_series(const PrimeTable& table, std::uint64_t stride);

/// A * (T + [order>=2] T^2 + [order>=3] 2 T^3) with T = 1/ln(t/t0).
/// Throws std::domain_error for t <= t0, std::invalid_argument for order
/// outside {1, 2, 3}.
double pnt_expansion(double t, double t0, double amplitude, int order);

/// Unit impulses at integer ticks; tick k sits at time k * t0.
struct ImpulseTrain {
  double t0 = 1.0;
  std::uint64_t ticks = 0;             // horizon: ticks [0, ticks)
  std::vector<std::uint64_t> events;   // strictly ascending, < ticks
};

/// One impulse per prime, horizon limit + 1 ticks.
ImpulseTrain impulse_train(const PrimeTable& table, double t0 = 1.0);

/// Full discrete convolution of the 0/1 tick sequence with fir
/// (length ticks + fir.size() - 1), sampled every sample_stride ticks
/// starting at tick 0. Times are tick * t0.
TimeSeries smooth_impulses(const ImpulseTrain& train, std::span<const double> fir,
                           std::uint64_t sample_stride);

}  // namespace fnprime
