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
#include <cstdlib>
#include <vector>

#include "fnprime/simd/kernels.hpp"
#include "support.hpp"

using namespace fnprime::simd;
using fnprime::testing::Gen;

TEST_CASE("dispatch table") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(kernels_for(Isa::Scalar).isa == Isa::Scalar);
  CHECK(isa_name(Isa::Avx2) == "avx2");
  const char* forced = std::getenv("FNPRIME_SIMD");
  if (forced && std::string(forced) == "scalar") CHECK(kernels().isa == Isa::Scalar);
  if (!isa_available(Isa::Avx2)) CHECK_THROWS_AS(kernels_for(Isa::Avx2), std::invalid_argument);
}

TEST_CASE("scalar tile currents against the textbook formula") {
  Gen g(3);
  const auto t = g.vector(37, 11e-9, 15e-9);
  std::vector<double> out(t.size());
  const double total = scalar::fn_tile_currents(t, 7.3, 2.5e-20, 2.5e10, out);
  double sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double e = 7.3 / t[i];
    REQUIRE(out[i] == doctest::Approx(2.5e-20 * e * e * std::exp(-2.5e10 / e)).epsilon(1e-14));
    sum += out[i];
  }
  CHECK(total == doctest::Approx(sum).epsilon(1e-14));
}

TEST_CASE("vector kernels match the scalar reference") {
  if (!isa_available(Isa::Avx2)) return;
  const auto& s = kernels_for(Isa::Scalar);
  const auto& v = kernels_for(Isa::Avx2);
  Gen g(17);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 31u, 256u, 1001u}) {
    INFO("n = " << n);
    // Exponent arguments span the normal range, both tails, and the clamp region.
    std::vector<double> t(n);
    for (auto& x : t) x = g.uniform(1e-9, 40e-9);
    const double volts = g.uniform(0.5, 9.0);
    std::vector<double> a(n), b(n);
    const double ta = s.fn_tile_currents(t, volts, 1e-20, 2.5e10, a);
    const double tb = v.fn_tile_currents(t, volts, 1e-20, 2.5e10, b);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(std::abs(a[i] - b[i]) <= 4e-16 * std::abs(a[i]));
    }
    CHECK(std::abs(ta - tb) <= 1e-14 * std::abs(ta));

    const auto x = g.vector(n, -1, 1);
    auto y1 = g.vector(n, -1, 1);
    auto y2 = y1;
    s.axpy(0.37, x, y1);
    v.axpy(0.37, x, y2);
    CHECK(y1 == y2);  // bit-identical
    CHECK(s.dot(x, y1) == v.dot(x, y1));
  }
}

TEST_CASE("vector exp tails") {
  if (!isa_available(Isa::Avx2)) return;
  const auto& s = kernels_for(Isa::Scalar);
  const auto& v = kernels_for(Isa::Avx2);
  // beta / field = beta * t / v: push to underflow and to moderate values.
  const std::vector<double> t{1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5};
  std::vector<double> a(t.size()), b(t.size());
  s.fn_tile_currents(t, 1.0, 1.0, 1e9, a);
  v.fn_tile_currents(t, 1.0, 1.0, 1e9, b);
  for (std::size_t i = 0; i < t.size(); ++i) {
    INFO("i = " << i);
    CHECK(std::abs(a[i] - b[i]) <= 4e-16 * std::abs(a[i]));
  }
}
