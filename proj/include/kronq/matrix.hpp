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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kronq {

using Complex = std::complex<double>;

/// Default absolute tolerance for matrix comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

/// exp(2 pi i num / den), exact for multiples of a quarter turn.
Complex root_of_unity(long long num, long long den);

/// Dense row-major complex matrix with zero-based (i, j) addressing.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix; both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<Complex> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

  /// Entry-wise bit equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// max |a_ij - b_ij|; throws ShapeError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Non-empty ordered tuple of same-shape matrices.
class MatrixTuple {
 public:
  explicit MatrixTuple(std::vector<ComplexMatrix> members);
  static MatrixTuple constant(const ComplexMatrix& m, std::size_t count);

  std::size_t size() const { return members_.size(); }
  std::size_t rows() const { return members_.front().rows(); }
  std::size_t cols() const { return members_.front().cols(); }
  const ComplexMatrix& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<ComplexMatrix>& members() const { return members_; }

  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;

 private:
  std::vector<ComplexMatrix> members_;
};

/// One unit-modulus phase per row.
class PhaseVector {
 public:
  explicit PhaseVector(std::vector<Complex> phases, double tol = kDefaultTolerance);

  std::size_t size() const { return phases_.size(); }
  const Complex& operator[](std::size_t i) const { return phases_[i]; }
  const std::vector<Complex>& values() const { return phases_; }

  /// diag(phases) as a matrix.
  ComplexMatrix as_diagonal() const;

 private:
  std::vector<Complex> phases_;
};

// Text format: "re,im" tokens with 17 significant digits in fixed notation,
// which round-trips every double exactly.
std::string format_complex(Complex z);
Complex parse_complex(std::string_view token);

/// Line 1 "rows cols", then one line per row of "re,im" tokens.
std::string format_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::string_view text);

}  // namespace kronq
