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

// NEON kernels for AArch64, where Advanced SIMD is architecturally
// guaranteed. One complex<double> fills one float64x2_t.

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "kronq/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#define KRONQ_HAVE_NEON 1
#endif

namespace kronq::kernels::neon {

#ifdef KRONQ_HAVE_NEON

namespace {

inline float64x2_t cmul1(double ar, double ai, float64x2_t x) {
  static const double kSign[2] = {-1.0, 1.0};
  const float64x2_t swapped = vextq_f64(x, x, 1);
  const float64x2_t t1 = vmulq_n_f64(x, ar);
  const float64x2_t t2 = vmulq_f64(vmulq_n_f64(swapped, ai), vld1q_f64(kSign));
  return vaddq_f64(t1, t2);
}

}  // namespace

void caxpy(double* y, double ar, double ai, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t yv = vld1q_f64(y + 2 * i);
    vst1q_f64(y + 2 * i, vaddq_f64(yv, cmul1(ar, ai, vld1q_f64(x + 2 * i))));
  }
}

void cscal(double* y, double ar, double ai, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_f64(y + 2 * i, cmul1(ar, ai, vld1q_f64(y + 2 * i)));
  }
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + 2 * i), vld1q_f64(b + 2 * i));
    const double sq = vaddvq_f64(vmulq_f64(d, d));
    if (sq > best) best = sq;
  }
  return std::sqrt(best);
}

#else

void caxpy(double*, double, double, const double*, std::size_t) {
  throw std::logic_error("NEON kernels are not compiled for this target");
}
void cscal(double*, double, double, std::size_t) {
  throw std::logic_error("NEON kernels are not compiled for this target");
}
double max_abs_diff(const double*, const double*, std::size_t) {
  throw std::logic_error("NEON kernels are not compiled for this target");
}

#endif

}  // namespace kronq::kernels::neon
