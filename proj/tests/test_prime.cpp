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
#include <stdexcept>
#include <vector>

#include "fnprime/prime.hpp"
#include "fnprime/spectral.hpp"
#include "support.hpp"

using namespace fnprime;
using fnprime::testing::Gen;

TEST_CASE("small limits") {
  CHECK(sieve_primes(0).size() == 0);
  CHECK(sieve_primes(1).size() == 0);
  CHECK(sieve_primes(2).size() == 1);
  CHECK(sieve_primes(3).size() == 2);
  const auto t = sieve_primes(30);
  const std::vector<std::uint64_t> expect{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == expect);
  CHECK(prime_count(sieve_primes(100), 100) == 25);
}

TEST_CASE("sieve matches trial division on random limits") {
  Gen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t limit = g.integer(0, 20000);
    const auto table = sieve_primes(limit);
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      if (testing::is_prime_trial(n)) oracle.push_back(n);
    }
    REQUIRE(std::vector<std::uint64_t>(table.primes().begin(), table.primes().end()) == oracle);
  }
}

TEST_CASE("segment boundaries agree with a byte sieve") {
  // 256 KiB of odd-only bits covers about 4.2M numbers; cross two boundaries.
  const std::uint64_t limit = 9'000'001;
  const auto table = sieve_primes(limit);
  const auto oracle = testing::simple_sieve(limit);
  REQUIRE(table.size() == oracle.size());
  CHECK(std::equal(oracle.begin(), oracle.end(), table.primes().begin()));
}

TEST_CASE("prime_count is a step function over the table") {
  const auto t = sieve_primes(1000);
  Gen g(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = g.integer(0, 1000);
    std::uint64_t c = 0;
    for (std::uint64_t k = 2; k <= n; ++k) c += testing::is_prime_trial(k);
    REQUIRE(prime_count(t, n) == c);
  }
  CHECK_THROWS_AS(prime_count(t, 1001), std::out_of_range);
}

TEST_CASE("density series rows") {
  const auto t = sieve_primes(1050);
  const auto d = density_series(t, 100);
  REQUIRE(d.points.size() == 11);
  CHECK(d.points.front().n == 100);
  CHECK(d.points.front().pi_n == 25);
  CHECK(d.points[9].n == 1000);
  CHECK(d.points[9].pi_n == 168);
  CHECK(d.points.back().n == 1050);  // trailing partial stride keeps the limit
  for (const auto& p : d.points) CHECK(p.value == static_cast<double>(p.pi_n) / static_cast<double>(p.n));
  const auto ts = d.as_time_series();
  CHECK(ts.times.back() == 1050.0);
  CHECK_THROWS_AS(density_series(t, 0), std::invalid_argument);
}

TEST_CASE("expansion orders and domain") {
  const double x = 1.0 / std::log(1e6);
  CHECK(pnt_expansion(1e6, 1.0, 1.0, 1) == doctest::Approx(x));
  CHECK(pnt_expansion(1e6, 1.0, 1.0, 2) == doctest::Approx(x + x * x));
  CHECK(pnt_expansion(1e6, 1.0, 2.0, 3) == doctest::Approx(2.0 * (x + x * x + 2 * x * x * x)));
  CHECK_THROWS_AS(pnt_expansion(1e6, 1.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(pnt_expansion(1.0, 1.0, 1.0, 1), std::domain_error);
}

TEST_CASE("impulse train and smoothing") {
  const auto t = sieve_primes(50);
  const auto train = impulse_train(t, 0.5);
  CHECK(train.ticks == 51);
  CHECK(train.events.front() == 2);
  CHECK(train.events.size() == 15);

  const auto fir = boxcar_fir(4);
  const auto s = smooth_impulses(train, fir, 1);
  REQUIRE(s.size() == train.ticks + fir.size() - 1);
  CHECK(s.times[10] == 5.0);
  // Full convolution against a direct oracle.
  for (std::size_t i = 0; i < s.size(); ++i) {
    double expect = 0.0;
    for (auto e : train.events) {
      if (i >= e && i - e < fir.size()) expect += fir[i - e];
    }
    REQUIRE(s.values[i] == doctest::Approx(expect).epsilon(1e-15));
  }
  // Every impulse contributes unit mass.
  double mass = 0.0;
  for (double v : s.values) mass += v;
  CHECK(mass == doctest::Approx(static_cast<double>(train.events.size())).epsilon(1e-12));

  const auto strided = smooth_impulses(train, fir, 3);
  for (std::size_t i = 0; i < strided.size(); ++i) CHECK(strided.values[i] == s.values[3 * i]);
}

TEST_CASE("prime count steps by zero or one") {
  const auto t = sieve_primes(100000);
  std::uint64_t prev = prime_count(t, 0);
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const std::uint64_t c = prime_count(t, n);
    REQUIRE(c - prev <= 1);
    REQUIRE(c >= prev);
    prev = c;
  }
}

TEST_CASE("third-order expansion beats first order") {
  const auto t = sieve_primes(10'000'000);
  for (double n : {1e4, 1e5, 1e6, 1e7}) {
    const double actual = static_cast<double>(prime_count(t, static_cast<std::uint64_t>(n))) / n;
    const double e1 = std::abs(pnt_expansion(n, 1.0, 1.0, 1) - actual);
    const double e3 = std::abs(pnt_expansion(n, 1.0, 1.0, 3) - actual);
    CHECK(e3 < e1);
  }
}
