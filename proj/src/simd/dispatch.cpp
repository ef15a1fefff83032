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
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fnprime/simd/kernels.hpp"

namespace fnprime::simd {
namespace {

constexpr KernelTable kScalarTable{Isa::Scalar, &scalar::fn_tile_currents, &scalar::axpy,
                                   &scalar::dot};
#if defined(FNPRIME_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::Avx2, &avx2::fn_tile_currents, &avx2::axpy, &avx2::dot};
#endif

const KernelTable& select_table() {
  if (const char* forced = std::getenv("FNPRIME_SIMD")) {
    const std::string name(forced);
    if (name == "scalar") return kScalarTable;
    if (name == "avx2" && isa_available(Isa::Avx2)) return kernels_for(Isa::Avx2);
  }
  if (isa_available(Isa::Avx2)) return kernels_for(Isa::Avx2);
  return kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(FNPRIME_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (isa == Isa::Scalar) return kScalarTable;
#if defined(FNPRIME_HAVE_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return kAvx2Table;
#endif
  throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
}

const KernelTable& kernels() {
  static const KernelTable& table = select_table();
  return table;
}

}  // namespace fnprime::simd
