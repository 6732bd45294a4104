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

#include "kronq/kernels.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "kronq/matrix.hpp"
#include "kronq/transform.hpp"
#include "test_util.hpp"

namespace kronq {
namespace {

using kernels::Backend;

std::vector<Backend> simd_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (kernels::backend_supported(b)) out.push_back(b);
  }
  return out;
}

std::vector<Complex> random_vector(std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = testing::random_complex(testing::rng());
  return v;
}

double* raw(std::vector<Complex>& v) { return reinterpret_cast<double*>(v.data()); }
const double* raw(const std::vector<Complex>& v) {
  return reinterpret_cast<const double*>(v.data());
}

using SimdFn = void (*)(double*, double, double, const double*, std::size_t);
using ScaleFn = void (*)(double*, double, double, std::size_t);
using DiffFn = double (*)(const double*, const double*, std::size_t);

struct Entry {
  SimdFn caxpy;
  ScaleFn cscal;
  DiffFn diff;
};

Entry entry_for(Backend b) {
  if (b == Backend::kAvx2) return {kernels::avx2::caxpy, kernels::avx2::cscal, kernels::avx2::max_abs_diff};
  return {kernels::neon::caxpy, kernels::neon::cscal, kernels::neon::max_abs_diff};
}

TEST(Kernels, ScalarIsAlwaysSupported) {
  EXPECT_TRUE(kernels::backend_supported(Backend::kScalar));
  EXPECT_TRUE(kernels::backend_supported(kernels::detect_backend()));
  EXPECT_EQ(kernels::backend_name(Backend::kAvx2), "avx2");
}

TEST(Kernels, CaxpyMatchesScalarReference) {
  for (Backend b : simd_backends()) {
    const Entry e = entry_for(b);
    for (std::size_t n = 0; n < 40; ++n) {
      const auto x = random_vector(n);
      auto y_ref = random_vector(n);
      auto y = y_ref;
      const Complex a = testing::random_complex(testing::rng());
      kernels::scalar::caxpy(raw(y_ref), a.real(), a.imag(), raw(x), n);
      e.caxpy(raw(y), a.real(), a.imag(), raw(x), n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(std::abs(y[i] - y_ref[i]), 0.0, 1e-14) << kernels::backend_name(b) << " n=" << n;
      }
    }
  }
}

TEST(Kernels, CscalMatchesScalarReference) {
  for (Backend b : simd_backends()) {
    const Entry e = entry_for(b);
    for (std::size_t n = 0; n < 40; ++n) {
      auto y_ref = random_vector(n);
      auto y = y_ref;
      const Complex a = testing::random_complex(testing::rng());
      kernels::scalar::cscal(raw(y_ref), a.real(), a.imag(), n);
      e.cscal(raw(y), a.real(), a.imag(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(y[i] - y_ref[i]), 0.0, 1e-14);
    }
  }
}

TEST(Kernels, MaxAbsDiffMatchesScalarReference) {
  for (Backend b : simd_backends()) {
    const Entry e = entry_for(b);
    for (std::size_t n = 0; n < 40; ++n) {
      const auto a = random_vector(n);
      const auto c = random_vector(n);
      EXPECT_NEAR(e.diff(raw(a), raw(c), n), kernels::scalar::max_abs_diff(raw(a), raw(c), n),
                  1e-14);
    }
  }
}

TEST(Kernels, ScalarReferenceAgainstStdComplex) {
  const auto x = random_vector(9);
  auto y = random_vector(9);
  const auto y0 = y;
  const Complex a{0.25, -1.5};
  kernels::scalar::caxpy(raw(y), a.real(), a.imag(), raw(x), 9);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(std::abs(y[i] - (y0[i] + a * x[i])), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(kernels::scalar::max_abs_diff(raw(y), raw(y0), 0), 0.0);
}

TEST(Kernels, DispatchRejectsLengthMismatch) {
  std::vector<Complex> a(3), b(4);
  EXPECT_THROW(kernels::caxpy(a, 1.0, b), std::invalid_argument);
  EXPECT_THROW(kernels::max_abs_diff(a, b), std::invalid_argument);
}

TEST(Kernels, ScopedBackendRestores) {
  const Backend before = kernels::active_backend();
  {
    kernels::ScopedBackend scoped(Backend::kScalar);
    EXPECT_EQ(kernels::active_backend(), Backend::kScalar);
  }
  EXPECT_EQ(kernels::active_backend(), before);
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (!kernels::backend_supported(b)) {
      EXPECT_THROW(kernels::set_active_backend(b), std::invalid_argument);
    }
  }
}

TEST(Kernels, SimulationAgreesAcrossBackends) {
  const Circuit c = synth_dft({2, 3, 4});
  ComplexMatrix reference;
  {
    kernels::ScopedBackend scoped(Backend::kScalar);
    reference = simulate(c);
  }
  for (Backend b : simd_backends()) {
    kernels::ScopedBackend scoped(b);
    EXPECT_LE(max_abs_diff(simulate(c), reference), 1e-14);
  }
}

}  // namespace
}  // namespace kronq
