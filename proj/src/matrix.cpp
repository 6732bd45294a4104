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

#include "kronq/matrix.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <system_error>

#include "kronq/errors.hpp"
#include "kronq/kernels.hpp"

namespace kronq {

Complex root_of_unity(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("root_of_unity: denominator must be positive");
  long long r = num % den;
  if (r < 0) r += den;
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw ShapeError("matrix entry count " + std::to_string(entries_.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ShapeError("matrix entries must be finite");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot multiply " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      kernels::caxpy(dst, aik, b.row(k));
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  ComplexMatrix out = m;
  kernels::cscal(out.entries(), s);
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("shape mismatch in +");
  ComplexMatrix out = a;
  kernels::caxpy(out.entries(), 1.0, b.entries());
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("shape mismatch in -");
  ComplexMatrix out = a;
  kernels::caxpy(out.entries(), -1.0, b.entries());
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot compare " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " with " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  }
  return kernels::max_abs_diff(a.entries(), b.entries());
}

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> members) : members_(std::move(members)) {
  if (members_.empty()) throw ShapeError("matrix tuple must be non-empty");
  for (const auto& m : members_) {
    if (m.rows() != rows() || m.cols() != cols()) {
      throw ShapeError("matrix tuple members must share one shape");
    }
  }
}

MatrixTuple MatrixTuple::constant(const ComplexMatrix& m, std::size_t count) {
  return MatrixTuple(std::vector<ComplexMatrix>(count, m));
}

PhaseVector::PhaseVector(std::vector<Complex> phases, double tol)
    : phases_(std::move(phases)) {
  for (const Complex& p : phases_) {
    if (std::abs(std::abs(p) - 1.0) > tol) {
      throw ShapeError("phase of modulus " + std::to_string(std::abs(p)) +
                       " is not unit-modulus");
    }
  }
}

ComplexMatrix PhaseVector::as_diagonal() const {
  ComplexMatrix d(phases_.size(), phases_.size());
  for (std::size_t i = 0; i < phases_.size(); ++i) d(i, i) = phases_[i];
  return d;
}

namespace {

std::string format_double(double x) {
  if (x == 0.0) return std::signbit(x) ? "-0.0000000000000000" : "0.0000000000000000";
  char buf[512];
  int precision = 16 - static_cast<int>(std::floor(std::log10(std::abs(x))));
  if (precision < 0) precision = 0;
  for (int attempt = 0; attempt < 3; ++attempt, ++precision) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed,
                                   precision);
    if (ec != std::errc{}) break;
    double back = 0.0;
    std::from_chars(buf, end, back);
    if (back == x) return std::string(buf, end);
  }
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

double parse_double(std::string_view s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw FormatError("invalid number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string format_complex(Complex z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

Complex parse_complex(std::string_view token) {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos || token.find(',', comma + 1) != std::string_view::npos) {
    throw FormatError("expected 're,im' token, got '" + std::string(token) + "'");
  }
  return {parse_double(token.substr(0, comma)), parse_double(token.substr(comma + 1))};
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_complex(m(i, j));
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = 0;
  long long cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw FormatError("matrix header must be 'rows cols' with positive counts");
  }
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  std::string token;
  while (in >> token) entries.push_back(parse_complex(token));
  if (entries.size() != static_cast<std::size_t>(rows * cols)) {
    throw FormatError("matrix has " + std::to_string(entries.size()) +
                      " entries, header declares " + std::to_string(rows * cols));
  }
  return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                       std::move(entries));
}

}  // namespace kronq
