// Copyright 2026 The Kronq Authors
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

// AVX2 kernels. Functions carry a target attribute instead of compiling the
// whole file with -mavx2, so no AVX2 code can leak into inline functions
// shared with other translation units. They are only reached through the
// dispatcher after a CPU feature check.

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "kronq/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define KRONQ_HAVE_AVX2 1
#endif

namespace kronq::kernels::avx2 {

#ifdef KRONQ_HAVE_AVX2

namespace {

// (ar + i ai) * (xr, xi) for two packed complex values.
__attribute__((target("avx2"))) inline __m256d cmul2(__m256d re, __m256d im,
                                                     __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  const __m256d t1 = _mm256_mul_pd(re, x);
  const __m256d t2 = _mm256_mul_pd(im, swapped);
  return _mm256_addsub_pd(t1, t2);
}

}  // namespace

__attribute__((target("avx2"))) void caxpy(double* y, double ar, double ai,
                                           const double* x, std::size_t n) {
  const __m256d re = _mm256_set1_pd(ar);
  const __m256d im = _mm256_set1_pd(ai);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, cmul2(re, im, xv)));
  }
  if (i < n) scalar::caxpy(y + 2 * i, ar, ai, x + 2 * i, n - i);
}

__attribute__((target("avx2"))) void cscal(double* y, double ar, double ai,
                                           std::size_t n) {
  const __m256d re = _mm256_set1_pd(ar);
  const __m256d im = _mm256_set1_pd(ai);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(y + 2 * i, cmul2(re, im, yv));
  }
  if (i < n) scalar::cscal(y + 2 * i, ar, ai, n - i);
}

__attribute__((target("avx2"))) double max_abs_diff(const double* a,
                                                    const double* b,
                                                    std::size_t n) {
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + 2 * i), _mm256_loadu_pd(b + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double sq_max = lanes[0];
  for (int k = 1; k < 4; ++k) {
    if (lanes[k] > sq_max) sq_max = lanes[k];
  }
  if (i < n) {
    const double tail = scalar::max_abs_diff(a + 2 * i, b + 2 * i, n - i);
    if (tail * tail > sq_max) return tail;
  }
  return std::sqrt(sq_max);
}

#else

void caxpy(double*, double, double, const double*, std::size_t) {
  throw std::logic_error("AVX2 kernels are not compiled for this target");
}
void cscal(double*, double, double, std::size_t) {
  throw std::logic_error("AVX2 kernels are not compiled for this target");
}
double max_abs_diff(const double*, const double*, std::size_t) {
  throw std::logic_error("AVX2 kernels are not compiled for this target");
}

#endif

}  // namespace kronq::kernels::avx2
