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
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fnprime/simd/kernels.hpp"
#include "fnprime/spectral.hpp"

namespace fnprime {

Spectrogram spectrogram(std::span<const double> series, std::size_t window_len, std::size_t hop) {
  if (window_len < 1) throw std::invalid_argument("spectrogram: window_len must be >= 1");
  if (hop < 1) throw std::invalid_argument("spectrogram: hop must be >= 1");
  if (series.size() < window_len) {
    throw std::invalid_argument("spectrogram: series length " + std::to_string(series.size()) +
                                " is shorter than the window " + std::to_string(window_len));
  }
  Spectrogram sg;
  sg.window_len = window_len;
  sg.hop = hop;
  sg.fft_len = next_pow2(window_len);
  const std::size_t bins = sg.fft_len / 2 + 1;
  for (std::size_t k = 0; k < bins; ++k) {
    sg.freqs.push_back(static_cast<double>(k) / static_cast<double>(sg.fft_len));
  }
  const std::size_t cols = (series.size() - window_len) / hop + 1;
  sg.magnitudes.resize(cols * bins);
  std::vector<std::complex<double>> buf(sg.fft_len);
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t start = c * hop;
    sg.times.push_back(start + window_len / 2);
    const auto win = series.subspan(start, window_len);
    double mean = 0.0;
    for (double x : win) mean += x;
    mean /= static_cast<double>(window_len);
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    for (std::size_t i = 0; i < window_len; ++i) buf[i] = win[i] - mean;
    fft_radix2(buf);
    for (std::size_t k = 0; k < bins; ++k) sg.magnitudes[c * bins + k] = std::abs(buf[k]);
  }
  return sg;
}

double column_energy(const Spectrogram& sg, std::size_t col) {
  const auto m = sg.column(col).subspan(1);
  return simd::kernels().dot(m, m);
}

double column_two_sided_energy(const Spectrogram& sg, std::size_t col) {
  const auto m = sg.column(col);
  const std::size_t last = m.size() - 1;
  if (last == 0) return m[0] * m[0];  // fft_len == 1
  const auto inner = m.subspan(1, last - 1);
  return m[0] * m[0] + m[last] * m[last] + 2.0 * simd::kernels().dot(inner, inner);
}

std::vector<GapRun> detect_gaps(const Spectrogram& sg, double threshold) {
  if (!(threshold > 0.0)) throw std::invalid_argument("detect_gaps: threshold must be positive");
  std::vector<GapRun> gaps;
  const std::size_t cols = sg.columns();
  if (cols == 0) return gaps;
  std::vector<double> energy(cols);
  for (std::size_t c = 0; c < cols; ++c) energy[c] = column_energy(sg, c);
  std::vector<double> sorted = energy;
  std::sort(sorted.begin(), sorted.end());
  const double median = cols % 2 == 1 ? sorted[cols / 2]
                                      : 0.5 * (sorted[cols / 2 - 1] + sorted[cols / 2]);
  double cut = threshold * median;
  if (std::isnan(cut)) cut = std::numeric_limits<double>::infinity();  // inf * 0

  for (std::size_t c = 0; c < cols;) {
    if (energy[c] < cut) {
      std::size_t end = c;
      while (end + 1 < cols && energy[end + 1] < cut) ++end;
      gaps.push_back({c, end});
      c = end + 1;
    } else {
      ++c;
    }
  }
  return gaps;
}

}  // namespace fnprime
