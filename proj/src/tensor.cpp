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

#include "kronq/tensor.hpp"

#include <cmath>
#include <string>

#include "kronq/errors.hpp"

namespace kronq {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void check_gkron_shapes(const MatrixTuple& a, const MatrixTuple& c) {
  const std::size_t k = a.size();
  const std::size_t q = a.cols();
  if (c.size() != q) {
    throw ShapeError("second tuple has " + std::to_string(c.size()) +
                     " members, expected " + std::to_string(q) +
                     " (column count of the first tuple's members)");
  }
  if (c.rows() != k) {
    throw ShapeError("second tuple members are " + shape(c.rows(), c.cols()) +
                     ", expected " + std::to_string(k) +
                     " rows (length of the first tuple)");
  }
}

}  // namespace

ComplexMatrix kron(Side side, const ComplexMatrix& a, const ComplexMatrix& c) {
  const ComplexMatrix& outer = side == Side::kRight ? a : c;
  const ComplexMatrix& inner = side == Side::kRight ? c : a;
  ComplexMatrix out(outer.rows() * inner.rows(), outer.cols() * inner.cols());
  for (std::size_t i = 0; i < outer.rows(); ++i) {
    for (std::size_t j = 0; j < outer.cols(); ++j) {
      const Complex s = outer(i, j);
      for (std::size_t u = 0; u < inner.rows(); ++u) {
        for (std::size_t v = 0; v < inner.cols(); ++v) {
          out(i * inner.rows() + u, j * inner.cols() + v) = s * inner(u, v);
        }
      }
    }
  }
  return out;
}

ComplexMatrix gkron(Side side, const MatrixTuple& a, const MatrixTuple& c) {
  check_gkron_shapes(a, c);
  const std::size_t k = a.size();
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  const std::size_t l = c.cols();
  ComplexMatrix out(p * k, q * l);
  if (side == Side::kRight) {
    for (std::size_t u = 0; u < p; ++u) {
      for (std::size_t v = 0; v < k; ++v) {
        for (std::size_t x = 0; x < q; ++x) {
          for (std::size_t y = 0; y < l; ++y) {
            out(u * k + v, x * l + y) = a[v](u, x) * c[x](v, y);
          }
        }
      }
    }
  } else {
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = 0; v < p; ++v) {
        for (std::size_t x = 0; x < l; ++x) {
          for (std::size_t y = 0; y < q; ++y) {
            out(u * p + v, x * q + y) = a[u](v, y) * c[y](u, x);
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix shuffle_matrix(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw ShapeError("shuffle dimensions must be positive");
  ComplexMatrix out(m * n, m * n);
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t e = 0; e < m; ++e) out(e * n + d, d * m + e) = 1.0;
  }
  return out;
}

ComplexMatrix diag_sum(const MatrixTuple& c) {
  ComplexMatrix out(c.size() * c.rows(), c.size() * c.cols());
  for (std::size_t b = 0; b < c.size(); ++b) {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) {
        out(b * c.rows() + i, b * c.cols() + j) = c[b](i, j);
      }
    }
  }
  return out;
}

std::vector<ComplexMatrix> diagonalization_factorize(Side side, const MatrixTuple& a,
                                                     const MatrixTuple& c) {
  check_gkron_shapes(a, c);
  const std::size_t k = a.size();
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  const std::size_t l = c.cols();
  if (side == Side::kRight) {
    return {shuffle_matrix(p, k), diag_sum(a), shuffle_matrix(k, q), diag_sum(c)};
  }
  return {diag_sum(a), shuffle_matrix(k, q), diag_sum(c), shuffle_matrix(q, l)};
}

ComplexMatrix multiply_all(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) throw ShapeError("empty factor list");
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
  return out;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) {
    throw ShapeError("is_unitary needs a square matrix, got " + shape(m.rows(), m.cols()));
  }
  return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.rows())) <= tol;
}

std::optional<PhaseVector> equal_up_to_diag_phase(const ComplexMatrix& m,
                                                  const ComplexMatrix& f, double tol) {
  if (m.rows() != f.rows() || m.cols() != f.cols()) {
    throw ShapeError("cannot compare " + shape(m.rows(), m.cols()) + " with " +
                     shape(f.rows(), f.cols()));
  }
  std::vector<Complex> phases(m.rows(), Complex{1.0, 0.0});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t pivot = f.cols();
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (std::abs(f(i, j)) > tol) {
        pivot = j;
        break;
      }
    }
    Complex phi{1.0, 0.0};
    if (pivot < f.cols()) {
      const Complex ratio = m(i, pivot) / f(i, pivot);
      if (std::abs(ratio) == 0.0) return std::nullopt;
      phi = ratio / std::abs(ratio);
    }
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (std::abs(m(i, j) - phi * f(i, j)) > tol) return std::nullopt;
    }
    phases[i] = phi;
  }
  return PhaseVector(std::move(phases));
}

}  // namespace kronq
