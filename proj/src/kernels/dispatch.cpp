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

#include <atomic>
#include <stdexcept>
#include <string>

#include "kronq/kernels.hpp"

namespace kronq::kernels {

namespace {

std::atomic<Backend>& active_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

double* raw(std::span<Complex> v) { return reinterpret_cast<double*>(v.data()); }
const double* raw(std::span<const Complex> v) {
  return reinterpret_cast<const double*>(v.data());
}

void check_lengths(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() {
  if (backend_supported(Backend::kAvx2)) return Backend::kAvx2;
  if (backend_supported(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

Backend active_backend() { return active_slot().load(std::memory_order_relaxed); }

void set_active_backend(Backend backend) {
  if (!backend_supported(backend)) {
    throw std::invalid_argument("kernel backend '" +
                                std::string(backend_name(backend)) +
                                "' is not supported on this CPU");
  }
  active_slot().store(backend, std::memory_order_relaxed);
}

ScopedBackend::ScopedBackend(Backend backend) : previous_(active_backend()) {
  set_active_backend(backend);
}

ScopedBackend::~ScopedBackend() { active_slot().store(previous_); }

void caxpy(std::span<Complex> y, Complex a, std::span<const Complex> x) {
  check_lengths(y.size(), x.size(), "caxpy");
  switch (active_backend()) {
    case Backend::kAvx2:
      return avx2::caxpy(raw(y), a.real(), a.imag(), raw(x), y.size());
    case Backend::kNeon:
      return neon::caxpy(raw(y), a.real(), a.imag(), raw(x), y.size());
    case Backend::kScalar:
      break;
  }
  scalar::caxpy(raw(y), a.real(), a.imag(), raw(x), y.size());
}

void cscal(std::span<Complex> y, Complex a) {
  switch (active_backend()) {
    case Backend::kAvx2:
      return avx2::cscal(raw(y), a.real(), a.imag(), y.size());
    case Backend::kNeon:
      return neon::cscal(raw(y), a.real(), a.imag(), y.size());
    case Backend::kScalar:
      break;
  }
  scalar::cscal(raw(y), a.real(), a.imag(), y.size());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  check_lengths(a.size(), b.size(), "max_abs_diff");
  switch (active_backend()) {
    case Backend::kAvx2:
      return avx2::max_abs_diff(raw(a), raw(b), a.size());
    case Backend::kNeon:
      return neon::max_abs_diff(raw(a), raw(b), a.size());
    case Backend::kScalar:
      break;
  }
  return scalar::max_abs_diff(raw(a), raw(b), a.size());
}

}  // namespace kronq::kernels
