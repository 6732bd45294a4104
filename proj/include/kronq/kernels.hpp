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

#pragma once

// Dense complex row kernels used by matrix products and circuit simulation.
//
// Every kernel has a portable scalar reference implementation and SIMD
// variants (AVX2 on x86-64, NEON on AArch64). The variant is picked at
// runtime from CPU feature detection; tests force each available backend and
// compare it against the scalar reference.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace kronq::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend backend);

/// True when the backend was compiled in and the running CPU supports it.
bool backend_supported(Backend backend);

/// Widest supported backend on this machine.
Backend detect_backend();

Backend active_backend();

/// Throws std::invalid_argument if `backend` is not supported here.
void set_active_backend(Backend backend);

/// Restores the previously active backend on destruction.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend backend);
  ~ScopedBackend();
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

/// y[i] += a * x[i]. Spans must have equal length.
void caxpy(std::span<Complex> y, Complex a, std::span<const Complex> x);

/// y[i] *= a.
void cscal(std::span<Complex> y, Complex a);

/// max_i |a[i] - b[i]|, or 0 for empty input. Spans must have equal length.
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

// Per-backend entry points over interleaved (re, im) doubles; `n` counts
// complex elements. Exposed for the equivalence tests.
namespace scalar {
void caxpy(double* y, double ar, double ai, const double* x, std::size_t n);
void cscal(double* y, double ar, double ai, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
void caxpy(double* y, double ar, double ai, const double* x, std::size_t n);
void cscal(double* y, double ar, double ai, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace avx2

namespace neon {
void caxpy(double* y, double ar, double ai, const double* x, std::size_t n);
void cscal(double* y, double ar, double ai, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace neon

}  // namespace kronq::kernels
