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

// Data-parallel inner loops with a scalar reference implementation and
// ISA-specific variants. The active table is chosen once at first use from
// CPUID, or forced with FNPRIME_SIMD=scalar|avx2.

#include <span>
#include <string_view>

namespace fnprime::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Evaluates out[i] = scale * (v / thickness[i])^2 * exp(-beta * thickness[i] / v)
/// and returns the sum of out. The sum is accumulated in four interleaved
/// lanes combined as (l0 + l1) + (l2 + l3) in every variant.
using FnTileCurrentsFn = double (*)(std::span<const double> thickness, double v, double scale,
                                    double beta, std::span<double> out);

/// y[i] += a * x[i]
using AxpyFn = void (*)(double a, std::span<const double> x, std::span<double> y);

/// Sum of x[i] * y[i], four-lane accumulation.
using DotFn = double (*)(std::span<const double> x, std::span<const double> y);

struct KernelTable {
  Isa isa;
  FnTileCurrentsFn fn_tile_currents;
  AxpyFn axpy;
  DotFn dot;
};

bool isa_available(Isa isa) noexcept;

/// Table for a specific ISA. Throws std::invalid_argument if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Runtime-selected table.
const KernelTable& kernels();

namespace scalar {
double fn_tile_currents(std::span<const double> thickness, double v, double scale, double beta,
                        std::span<double> out);
void axpy(double a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
}  // namespace scalar

#if defined(FNPRIME_HAVE_AVX2)
namespace avx2 {
double fn_tile_currents(std::span<const double> thickness, double v, double scale, double beta,
                        std::span<double> out);
void axpy(double a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
}  // namespace avx2
#endif

}  // namespace fnprime::simd
