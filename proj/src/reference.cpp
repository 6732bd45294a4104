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

#include "kronq/reference.hpp"

#include <bit>
#include <cmath>

#include "kronq/errors.hpp"
#include "kronq/tensor.hpp"

namespace kronq {

namespace {

std::size_t pow2(std::size_t k) { return std::size_t{1} << k; }

std::size_t log2_exact(std::size_t n) {
  if (!std::has_single_bit(n)) throw ShapeError("dimension must be a power of two");
  return static_cast<std::size_t>(std::countr_zero(n));
}

}  // namespace

ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

ComplexMatrix walsh_matrix(std::size_t n) {
  const std::size_t dim = pow2(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix out(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      out(x, y) = std::popcount(x & y) % 2 == 0 ? scale : -scale;
    }
  }
  return out;
}

ComplexMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw ShapeError("DFT size must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix out(n, n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      out(y, x) = scale * root_of_unity(static_cast<long long>((x * y) % n),
                                        static_cast<long long>(n));
    }
  }
  return out;
}

ComplexMatrix haar_matrix(std::size_t qubits) {
  if (qubits == 0) throw ShapeError("Haar transform needs at least one qubit");
  ComplexMatrix h = hadamard();
  for (std::size_t m = 1; m < qubits; ++m) {
    const std::size_t dim = pow2(m);
    const MatrixTuple a({h, ComplexMatrix::identity(dim)});
    const MatrixTuple c = MatrixTuple::constant(hadamard(), dim);
    h = shuffle_matrix(2, dim) * gkron(Side::kRight, a, c);
  }
  return h;
}

std::array<double, 4> d4_constants() {
  const double r3 = std::sqrt(3.0);
  const double den = 4.0 * std::sqrt(2.0);
  return {(3.0 + r3) / den, (3.0 - r3) / den, (1.0 - r3) / den, (1.0 + r3) / den};
}

ComplexMatrix d4_matrix(std::size_t m) {
  if (m < 4 || m % 2 != 0) throw ShapeError("D4 size must be even and at least 4");
  const auto k = d4_constants();
  const auto at = [&](long long idx) { return idx >= 0 && idx < 4 ? k[idx] : 0.0; };
  const auto mm = static_cast<long long>(m);
  ComplexMatrix out(m, m);
  for (long long i = 0; i < mm; ++i) {
    for (long long j = 0; j < mm; ++j) {
      const long long x = (i >= mm - 2 && j < 2) ? mm : 0;
      if (i % 2 == 0) {
        out(i, j) = at(j - i + x);
      } else {
        out(i, j) = (j % 2 == 0 ? 1.0 : -1.0) * at(2 + i - j - x);
      }
    }
  }
  return out;
}

ComplexMatrix d4_c0() {
  const auto k = d4_constants();
  return {{2.0 * k[3], -2.0 * k[2]}, {2.0 * k[2], 2.0 * k[3]}};
}

ComplexMatrix d4_c1() {
  const double r3 = std::sqrt(3.0);
  return {{0.5 * r3, 0.5}, {0.5, -0.5 * r3}};
}

ComplexMatrix wavelet_matrix(const ComplexMatrix& base,
                             const std::function<ComplexMatrix(std::size_t)>& scaling,
                             std::size_t levels) {
  ComplexMatrix u = base;
  std::size_t qubits = log2_exact(base.rows());
  for (std::size_t level = 1; level <= levels; ++level) {
    const std::size_t dim = pow2(qubits);
    ++qubits;
    const MatrixTuple a({u, ComplexMatrix::identity(dim)});
    const MatrixTuple c = MatrixTuple::constant(ComplexMatrix::identity(2), dim);
    u = shuffle_matrix(2, dim) * gkron(Side::kRight, a, c) * scaling(qubits);
  }
  return u;
}

}  // namespace kronq
