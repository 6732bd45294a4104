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

#include <cmath>
#include <cstddef>

#include "kronq/kernels.hpp"

namespace kronq::kernels::scalar {

void caxpy(double* y, double ar, double ai, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i];
    const double xi = x[2 * i + 1];
    const double pr = ar * xr - ai * xi;
    const double pi = ar * xi + ai * xr;
    y[2 * i] += pr;
    y[2 * i + 1] += pi;
  }
}

void cscal(double* y, double ar, double ai, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double yr = y[2 * i];
    const double yi = y[2 * i + 1];
    y[2 * i] = ar * yr - ai * yi;
    y[2 * i + 1] = ar * yi + ai * yr;
  }
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[2 * i] - b[2 * i];
    const double di = a[2 * i + 1] - b[2 * i + 1];
    const double sq = dr * dr + di * di;
    if (sq > best) best = sq;
  }
  return std::sqrt(best);
}

}  // namespace kronq::kernels::scalar
