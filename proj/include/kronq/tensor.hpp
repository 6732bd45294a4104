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

// Left/right and generalized Kronecker products, shuffle permutations,
// direct sums, and the diagonalization factorization.

#include <cstddef>
#include <optional>
#include <vector>

#include "kronq/matrix.hpp"

namespace kronq {

enum class Side { kLeft, kRight };

/// Right: blocks a_ij * C. Left: blocks A * c_ij.
ComplexMatrix kron(Side side, const ComplexMatrix& a, const ComplexMatrix& c);

/// Generalized product of a k-tuple A of p x q matrices and a q-tuple C of
/// k x l matrices. The result is pk x ql with
///   right: d(uk+v, xl+y) = A[v](u,x) * C[x](v,y)
///   left:  d(up+v, xq+y) = A[u](v,y) * C[y](u,x)
/// Throws ShapeError if the tuples do not fit this pattern.
ComplexMatrix gkron(Side side, const MatrixTuple& a, const MatrixTuple& c);

/// Perfect shuffle on mn indices: column d*m+e maps to row e*n+d.
ComplexMatrix shuffle_matrix(std::size_t m, std::size_t n);

/// Block-diagonal matrix of the tuple members in order.
ComplexMatrix diag_sum(const MatrixTuple& c);

/// Factors whose ordered product (first * second * ...) equals gkron(side, a, c):
///   right: [Pi(p,k), Diag(A), Pi(k,q), Diag(C)]
///   left:  [Diag(A), Pi(k,q), Diag(C), Pi(q,l)]
std::vector<ComplexMatrix> diagonalization_factorize(Side side, const MatrixTuple& a,
                                                     const MatrixTuple& c);

/// Product of the factors in list order.
ComplexMatrix multiply_all(const std::vector<ComplexMatrix>& factors);

/// max |M M^dagger - I| <= tol. Throws ShapeError for non-square input.
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// Finds phases with M = diag(phases) * F. Each row's phase is read off the
/// first column where |F(i,j)| > tol and then checked against every column.
/// Rows of F that vanish within tol require a vanishing row of M and get
/// phase 1.
std::optional<PhaseVector> equal_up_to_diag_phase(const ComplexMatrix& m,
                                                  const ComplexMatrix& f,
                                                  double tol = kDefaultTolerance);

}  // namespace kronq
