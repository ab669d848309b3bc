// Copyright 2026 The povmrt Authors
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

#include "povmrt/kernels.hpp"

#if POVMRT_HAVE_AVX2_KERNELS

#include <immintrin.h>

// AVX2+FMA kernels on interleaved complex<double>: one __m256d holds two
// complex values as (re0, im0, re1, im1). Complex FMA uses the fmaddsub trick:
// with t = ai * swap(b), fmaddsub(ar, b, t) yields
//   even lane: ar*br - ai*bi   (real part)
//   odd  lane: ar*bi + ai*br   (imag part)
// This translation unit is compiled with -mavx2 -mfma; callers must check
// cpu_supports_avx2() before using the table.

namespace povmrt::kernels::avx2 {

namespace {

inline const double* dp(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void matmul(cplx* c, const cplx* a, const cplx* b, std::size_t m,
            std::size_t k, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = cplx{0.0, 0.0};
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{0.0, 0.0}) continue;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const cplx* brow = b + p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d vb = _mm256_loadu_pd(dp(brow + j));
        const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vb, 0x5));
        __m256d vc = _mm256_loadu_pd(dp(crow + j));
        vc = _mm256_add_pd(vc, _mm256_fmaddsub_pd(ar, vb, t));
        _mm256_storeu_pd(dp(crow + j), vc);
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d vx = _mm256_loadu_pd(dp(x + i));
    const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vx, 0x5));
    __m256d vy = _mm256_loadu_pd(dp(y + i));
    vy = _mm256_add_pd(vy, _mm256_fmaddsub_pd(ar, vx, t));
    _mm256_storeu_pd(dp(y + i), vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_copy(cplx* dst, cplx alpha, const cplx* src, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d vs = _mm256_loadu_pd(dp(src + i));
    const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vs, 0x5));
    _mm256_storeu_pd(dp(dst + i), _mm256_fmaddsub_pd(ar, vs, t));
  }
  for (; i < n; ++i) dst[i] = alpha * src[i];
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  // re = sum xr*yr + xi*yi ; im = sum xr*yi - xi*yr
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d vx = _mm256_loadu_pd(dp(x + i));
    const __m256d vy = _mm256_loadu_pd(dp(y + i));
    acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
    acc_im = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0x5), acc_im);
  }
  alignas(32) double tre[4], tim[4];
  _mm256_store_pd(tre, acc_re);
  _mm256_store_pd(tim, acc_im);
  // acc_re lanes: xr*yr, xi*yi (all add); acc_im lanes: xr*yi (even), xi*yr (odd)
  double re = tre[0] + tre[1] + tre[2] + tre[3];
  double im = (tim[0] + tim[2]) - (tim[1] + tim[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace povmrt::kernels::avx2

#endif  // POVMRT_HAVE_AVX2_KERNELS
