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

#include <filesystem>
#include <fstream>

#include "fnprime/error.hpp"
#include "fnprime/io.hpp"
#include "fnprime/parallel.hpp"
#include "fnprime/prime.hpp"

using namespace fnprime;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fnprime_io_" + name);
  fs::remove_all(p);
  return p;
}
}  // namespace

TEST_CASE("doubles round trip through text") {
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 0.0}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("sha256 reference digests") {
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("trace and density csv round trip") {
  const fs::path dir = scratch("csv");
  fs::create_directories(dir);
  TimeSeries s;
  s.push_back(0.0, 8.0);
  s.push_back(1.5, 7.999999123456789);
  io::write_text(dir / "trace.csv", io::trace_csv(s));
  const auto back = io::read_trace_csv(dir / "trace.csv");
  CHECK(back.times == s.times);
  CHECK(back.values == s.values);

  const auto d = density_series(sieve_primes(1000), 100);
  io::write_text(dir / "density.csv", io::density_csv(d));
  const auto dback = io::read_density_csv(dir / "density.csv");
  REQUIRE(dback.points.size() == d.points.size());
  CHECK(dback.points[3].pi_n == d.points[3].pi_n);
  CHECK(dback.points[3].value == d.points[3].value);
}

TEST_CASE("csv errors name the problem") {
  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  io::write_text(dir / "wrong.csv", "time,volts\n0,1\n");
  try {
    io::read_trace_csv(dir / "wrong.csv");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("t_seconds") != std::string::npos);
  }
  io::write_text(dir / "ragged.csv", "t_seconds,v_volts\n0,1\n1\n");
  try {
    io::read_trace_csv(dir / "ragged.csv");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_csv(dir / "missing.csv"), IoError);
}

TEST_CASE("fit json round trip") {
  LogFitModel m;
  m.c1 = 1.25;
  m.c2 = 3e13;
  m.c3 = 7.7e17;
  m.c4 = -0.5;
  m.t_min = 1;
  m.t_max = 1e6;
  m.iterations = 9;
  const auto back = io::fit_from_json(io::to_json(m));
  CHECK(back.c1 == m.c1);
  CHECK(back.c3 == m.c3);
  CHECK(back.t_max == m.t_max);
  CHECK(back.iterations == 9);
}

TEST_CASE("manifest lists artifacts with digests") {
  const fs::path dir = scratch("manifest");
  io::OutputDir out(dir, "test");
  out.write("a.txt", "abc");
  out.finish({{"k", 1}});
  const auto j = nlohmann::json::parse(io::read_text(dir / "manifest.json"));
  CHECK(j["command"] == "test");
  CHECK(j["version"] == std::string(io::kToolVersion));
  CHECK(j["rng"] == "philox4x32-10");
  CHECK(j["config"]["k"] == 1);
  CHECK(j["artifacts"][0]["sha256"] == io::sha256_hex("abc"));
  CHECK(j["artifacts"][0]["bytes"] == 3);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}
