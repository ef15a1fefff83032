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
#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "fnprime/simd/kernels.hpp"

namespace fnprime::simd::avx2 {
namespace {

// Lanes outside this range are recomputed with std::exp.
constexpr double kFastExpLo = -700.0;
constexpr double kFastExpHi = 700.0;

// Cephes-style exp: round to n = nearest(x / ln2), reduce with a split ln2,
// rational approximation on |r| <= ln2/2, then scale by 2^n via the exponent
// field. Max error about 1 ulp within [kFastExpLo, kFastExpHi].
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125E-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212E-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878E-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300E-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910E-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042E-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192E-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766E-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000009E0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);

  const __m256d n =
      _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(n, c1));
  r = _mm256_sub_pd(r, _mm256_mul_pd(n, c2));
  const __m256d rr = _mm256_mul_pd(r, r);

  __m256d px = _mm256_fmadd_pd(p0, rr, p1);
  px = _mm256_fmadd_pd(px, rr, p2);
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_fmadd_pd(q0, rr, q1);
  qx = _mm256_fmadd_pd(qx, rr, q2);
  qx = _mm256_fmadd_pd(qx, rr, q3);
  __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  e = _mm256_fmadd_pd(two, e, one);

  const __m128i n32 = _mm256_cvtpd_epi32(n);
  __m256i bits = _mm256_cvtepi32_epi64(n32);
  bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
  bits = _mm256_slli_epi64(bits, 52);
  return _mm256_mul_pd(e, _mm256_castsi256_pd(bits));
}

}  // namespace

double fn_tile_currents(std::span<const double> thickness, double v, double scale, double beta,
                        std::span<double> out) {
  const std::size_t n = thickness.size();
  const std::size_t body = n - n % 4;
  const __m256d vv = _mm256_set1_pd(v);
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d nbeta = _mm256_set1_pd(-beta);
  const __m256d lo = _mm256_set1_pd(kFastExpLo);
  const __m256d hi = _mm256_set1_pd(kFastExpHi);
  __m256d acc = _mm256_setzero_pd();

  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d t = _mm256_loadu_pd(thickness.data() + i);
    const __m256d q = _mm256_div_pd(vv, t);
    const __m256d arg = _mm256_div_pd(_mm256_mul_pd(nbeta, t), vv);
    __m256d ex = exp_pd(arg);
    const __m256d out_of_range = _mm256_or_pd(_mm256_cmp_pd(arg, lo, _CMP_LT_OQ),
                                              _mm256_cmp_pd(arg, hi, _CMP_GT_OQ));
    if (_mm256_movemask_pd(out_of_range) != 0) {
      alignas(32) double a[4];
      _mm256_store_pd(a, arg);
      ex = _mm256_set_pd(std::exp(a[3]), std::exp(a[2]), std::exp(a[1]), std::exp(a[0]));
    }
    const __m256d c = _mm256_mul_pd(_mm256_mul_pd(vscale, _mm256_mul_pd(q, q)), ex);
    _mm256_storeu_pd(out.data() + i, c);
    acc = _mm256_add_pd(acc, c);
  }

  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) {
    const double t = thickness[i];
    const double q = v / t;
    const double c = (scale * (q * q)) * std::exp((-beta * t) / v);
    out[i] = c;
    sum += c;
  }
  return sum;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const __m256d va = _mm256_set1_pd(a);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x.data() + i);
    const __m256d yi = _mm256_loadu_pd(y.data() + i);
    _mm256_storeu_pd(y.data() + i, _mm256_add_pd(yi, _mm256_mul_pd(va, xi)));
  }
  for (std::size_t i = body; i < n; ++i) y[i] += a * x[i];
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i),
                                           _mm256_loadu_pd(y.data() + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

}  // namespace fnprime::simd::avx2
