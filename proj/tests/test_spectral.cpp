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
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fnprime/prime.hpp"
#include "fnprime/spectral.hpp"
#include "support.hpp"

using namespace fnprime;
using fnprime::testing::Gen;

TEST_CASE("fft agrees with a direct dft") {
  Gen g(1);
  for (std::size_t n : {1u, 2u, 4u, 8u, 64u, 256u}) {
    std::vector<std::complex<double>> x(n);
    for (auto& c : x) c = {g.normal(), g.normal()};
    const auto ref = testing::naive_dft(x);
    fft_radix2(x);
    for (std::size_t k = 0; k < n; ++k) REQUIRE(std::abs(x[k] - ref[k]) < 1e-10 * std::sqrt(double(n)));
  }
  std::vector<std::complex<double>> bad(6);
  CHECK_THROWS_AS(fft_radix2(bad), std::invalid_argument);
  CHECK(next_pow2(1) == 1);
  CHECK(next_pow2(5) == 8);
  CHECK(next_pow2(64) == 64);
}

TEST_CASE("boxcar taps sum to one") {
  const auto f = boxcar_fir(5);
  double s = 0;
  for (double x : f) s += x;
  CHECK(s == doctest::Approx(1.0));
  CHECK_THROWS_AS(boxcar_fir(0), std::invalid_argument);
}

TEST_CASE("spectrogram layout and parseval per column") {
  Gen g(4);
  for (std::size_t window : {7u, 16u, 33u}) {
    const auto x = g.vector(500, -1, 1);
    const auto sg = spectrogram(x, window, 5);
    CHECK(sg.fft_len == next_pow2(window));
    CHECK(sg.bins() == sg.fft_len / 2 + 1);
    CHECK(sg.columns() == (x.size() - window) / 5 + 1);
    CHECK(sg.times[2] == 10 + window / 2);
    CHECK(sg.freqs.back() == 0.5);
    for (std::size_t c = 0; c < sg.columns(); ++c) {
      double mean = 0, ss = 0;
      for (std::size_t i = 0; i < window; ++i) mean += x[c * 5 + i];
      mean /= window;
      for (std::size_t i = 0; i < window; ++i) ss += (x[c * 5 + i] - mean) * (x[c * 5 + i] - mean);
      REQUIRE(std::abs(column_two_sided_energy(sg, c) - sg.fft_len * ss) <= 1e-9 * sg.fft_len * ss);
      REQUIRE(sg.at(c, 0) < 1e-12);  // mean removed
    }
  }
  CHECK_THROWS_AS(spectrogram(std::vector<double>(3), 4, 1), std::invalid_argument);
}

TEST_CASE("a pure tone lands in its bin") {
  std::vector<double> x(256);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::cos(2 * M_PI * 8 * i / 64.0);
  const auto sg = spectrogram(x, 64, 64);
  for (std::size_t c = 0; c < sg.columns(); ++c) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < sg.bins(); ++k) if (sg.at(c, k) > sg.at(c, best)) best = k;
    CHECK(best == 8);
  }
}

TEST_CASE("gap detection finds a quiet stretch") {
  Gen g(6);
  std::vector<double> x(1000);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i >= 400 && i < 600) ? 1.0 : g.normal();
  const auto sg = spectrogram(x, 20, 10);
  const auto gaps = detect_gaps(sg, 0.1);
  REQUIRE(gaps.size() == 1);
  CHECK(gaps[0].start_col * 10 >= 400);
  CHECK(gaps[0].end_col * 10 + 20 <= 600);
  CHECK(gaps[0].end_col - gaps[0].start_col + 1 == 19);
  CHECK_THROWS_AS(detect_gaps(sg, 0.0), std::invalid_argument);
  // A constant series has zero median energy; nothing sits below it.
  const auto flat = spectrogram(std::vector<double>(100, 3.0), 10, 10);
  CHECK(detect_gaps(flat, 0.1).empty());
}

TEST_CASE("smoothed prime train shows the gap after 1327") {
  const auto table = sieve_primes(2000);
  const auto s = smooth_impulses(impulse_train(table), boxcar_fir(4), 1);
  const auto sg = spectrogram(s.values, 16, 2);
  bool hit = false;
  for (const auto& gap : detect_gaps(sg, 0.1)) {
    const std::size_t lo = gap.start_col * 2, hi = gap.end_col * 2 + 15;
    if (lo <= 1360 && hi >= 1328) hit = true;
  }
  CHECK(hit);
}

TEST_CASE("spectrogram covariance under shift and scale") {
  Gen g(13);
  const std::size_t window = 24, hop = 6;
  auto x = g.vector(600, -1, 1);
  const auto sg = spectrogram(x, window, hop);
  std::vector<double> delayed(hop, 0.0);
  delayed.insert(delayed.end(), x.begin(), x.end());
  const auto sd = spectrogram(delayed, window, hop);
  for (std::size_t c = 0; c + 1 < sd.columns(); ++c) {
    for (std::size_t k = 0; k < sg.bins(); ++k) REQUIRE(std::abs(sd.at(c + 1, k) - sg.at(c, k)) <= 1e-12);
  }
  for (double k : {-2.0, 0.5, 4.0}) {
    std::vector<double> y = x;
    for (double& v : y) v *= k;
    const auto sy = spectrogram(y, window, hop);
    for (std::size_t i = 0; i < sg.magnitudes.size(); ++i) {
      REQUIRE(sy.magnitudes[i] == doctest::Approx(std::abs(k) * sg.magnitudes[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("gap detection ignores input scale") {
  const auto s = smooth_impulses(impulse_train(sieve_primes(3000)), boxcar_fir(4), 1);
  const auto base = detect_gaps(spectrogram(s.values, 16, 2), 0.1);
  REQUIRE(!base.empty());
  for (double k : {1e-6, 3.0, 1e6}) {
    std::vector<double> y = s.values;
    for (double& v : y) v *= k;
    const auto gaps = detect_gaps(spectrogram(y, 16, 2), 0.1);
    REQUIRE(gaps.size() == base.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      CHECK(gaps[i].start_col == base[i].start_col);
      CHECK(gaps[i].end_col == base[i].end_col);
    }
  }
}
