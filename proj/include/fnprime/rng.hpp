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

// Philox4x32-10 counter-based generator (Salmon et al., Random123). Each
// output block is a pure function of (counter, key), so any draw can be
// regenerated independently of evaluation order or thread count.

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace fnprime {

class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::string_view kAlgorithm = "philox4x32-10";

  explicit constexpr Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  static constexpr Block generate(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kW0;
        key[1] += kW1;
      }
      const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  /// Block for a 64-bit counter; the upper counter words carry the stream id.
  constexpr Block block(std::uint64_t counter, std::uint32_t stream = 0) const {
    return generate({static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
                     stream, 0},
                    key_);
  }

  /// Uniform double in [0, 1) with 53 random bits from the first two words.
  constexpr double uniform(std::uint64_t counter, std::uint32_t stream = 0) const {
    const Block b = block(counter, stream);
    const std::uint64_t bits = (std::uint64_t{b[0]} << 21) ^ (std::uint64_t{b[1]} >> 11);
    return static_cast<double>(bits & ((std::uint64_t{1} << 53) - 1)) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller on the four words of one block.
  double normal(std::uint64_t counter, std::uint32_t stream = 0) const {
    const Block b = block(counter, stream);
    const std::uint64_t w0 = (std::uint64_t{b[0]} << 21) ^ (std::uint64_t{b[1]} >> 11);
    const std::uint64_t w1 = (std::uint64_t{b[2]} << 21) ^ (std::uint64_t{b[3]} >> 11);
    const double mask = static_cast<double>((std::uint64_t{1} << 53) - 1);
    const double u1 = (static_cast<double>(w0 & ((std::uint64_t{1} << 53) - 1)) + 1.0) / (mask + 2.0);
    const double u2 = static_cast<double>(w1 & ((std::uint64_t{1} << 53) - 1)) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57;
  static constexpr std::uint32_t kW0 = 0x9E3779B9;
  static constexpr std::uint32_t kW1 = 0xBB67AE85;

  Key key_;
};

}  // namespace fnprime
