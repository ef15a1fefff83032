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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fnprime {

/// ntaps equal coefficients summing to 1. Throws std::invalid_argument for ntaps < 1.
std::vector<double> boxcar_fir(std::size_t ntaps);

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// In-place iterative radix-2 DFT, X_k = sum_n x_n exp(-2 pi i k n / N)
/// (unnormalized forward). Size must be a power of two.
void fft_radix2(std::span<std::complex<double>> data);

/// Sliding-window DFT magnitudes. Each column takes window_len samples
/// (rectangular window), removes their mean, zero-pads to fft_len =
/// next_pow2(window_len) and keeps bins 0 .. fft_len / 2.
struct Spectrogram {
  std::size_t window_len = 0;
  std::size_t hop = 0;
  std::size_t fft_len = 0;
  std::vector<std::size_t> times;  // window start + window_len / 2
  std::vector<double> freqs;       // cycles per sample, 0 .. 0.5
  std::vector<double> magnitudes;  // row-major [column][bin]

  std::size_t columns() const noexcept { return times.size(); }
  std::size_t bins() const noexcept { return freqs.size(); }
  double at(std::size_t col, std::size_t bin) const { return magnitudes[col * bins() + bin]; }
  std::span<const double> column(std::size_t col) const {
    return std::span<const double>(magnitudes).subspan(col * bins(), bins());
  }
};

/// Throws std::invalid_argument when series is shorter than the window,
/// window_len < 1 or hop < 1.
Spectrogram spectrogram(std::span<const double> series, std::size_t window_len, std::size_t hop);

/// Sum of squared one-sided magnitudes, bins 1 .. fft_len / 2.
double column_energy(const Spectrogram& sg, std::size_t col);

/// Sum over all fft_len two-sided bins of |X_k|^2, rebuilt from the
/// one-sided half. Equals fft_len * sum (x - mean)^2 for the column.
double column_two_sided_energy(const Spectrogram& sg, std::size_t col);

struct GapRun {
  std::size_t start_col;
  std::size_t end_col;  // inclusive
};

/// Maximal runs of columns whose column_energy is below
/// threshold * median column_energy. Throws std::invalid_argument for threshold <= 0.
std::vector<GapRun> detect_gaps(const Spectrogram& sg, double threshold);

}  // namespace fnprime
