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
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnprime/parallel.hpp"
#include "fnprime/prime.hpp"

namespace fnprime {
namespace {

// 256 KiB of bits per segment, one bit per odd number.
constexpr std::uint64_t kSegmentBytes = 256 * 1024;
constexpr std::uint64_t kSegmentOdds = kSegmentBytes * 8;
constexpr std::uint64_t kWordBits = 64;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes <= limit by a plain sieve; limit is at most sqrt of the target.
std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 3) return out;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m] = 1;
  }
  for (std::uint64_t p = 3; p <= limit; p += 2) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

// Odd index j stands for the number 2j + 1.
std::vector<std::uint64_t> sieve_segment(std::uint64_t first_index, std::uint64_t index_count,
                                         std::span<const std::uint64_t> base) {
  std::vector<std::uint64_t> bits((index_count + kWordBits - 1) / kWordBits, 0);
  const std::uint64_t lo = 2 * first_index + 1;
  const std::uint64_t hi = 2 * (first_index + index_count) - 1;  // inclusive
  for (const std::uint64_t p : base) {
    const std::uint64_t p2 = p * p;
    if (p2 > hi) break;
    std::uint64_t start = p2;
    if (start < lo) {
      start = (lo + p - 1) / p * p;
      if (start % 2 == 0) start += p;
    }
    for (std::uint64_t j = (start - 1) / 2 - first_index; j < index_count; j += p) {
      bits[j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
    }
  }
  if (first_index == 0) bits[0] |= 1;  // the number 1

  std::vector<std::uint64_t> primes;
  for (std::uint64_t w = 0; w < bits.size(); ++w) {
    std::uint64_t free = ~bits[w];
    if (w == bits.size() - 1 && index_count % kWordBits != 0) {
      free &= (std::uint64_t{1} << (index_count % kWordBits)) - 1;
    }
    while (free != 0) {
      const auto b = static_cast<std::uint64_t>(std::countr_zero(free));
      primes.push_back(2 * (first_index + w * kWordBits + b) + 1);
      free &= free - 1;
    }
  }
  return primes;
}

}  // namespace

PrimeTable sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return PrimeTable(limit, std::move(primes));
  primes.push_back(2);

  const std::uint64_t odd_count = (limit + 1) / 2;  // odd numbers 1, 3, ..., <= limit
  const auto base = base_primes(isqrt(limit));
  const std::uint64_t segments = (odd_count + kSegmentOdds - 1) / kSegmentOdds;

  std::vector<std::vector<std::uint64_t>> found(segments);
  parallel_for(segments, [&](std::size_t s) {
    const std::uint64_t first = s * kSegmentOdds;
    const std::uint64_t count = std::min(kSegmentOdds, odd_count - first);
    found[s] = sieve_segment(first, count, base);
  });

  std::size_t total = 1;
  for (const auto& f : found) total += f.size();
  primes.reserve(total);
  for (auto& f : found) primes.insert(primes.end(), f.begin(), f.end());
  return PrimeTable(limit, std::move(primes));
}

std::uint64_t prime_count(const PrimeTable& table, std::uint64_t n) {
  if (n > table.limit()) {
    throw std::out_of_range("prime_count: n=" + std::to_string(n) + " exceeds table limit " +
                            std::to_string(table.limit()));
  }
  const auto ps = table.primes();
  return static_cast<std::uint64_t>(std::upper_bound(ps.begin(), ps.end(), n) - ps.begin());
}

}  // namespace fnprime
