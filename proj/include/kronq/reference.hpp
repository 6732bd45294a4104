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

// Transform matrices evaluated directly from their defining formulas. These
// are the references synthesized circuits are checked against.

#include <array>
#include <cstddef>
#include <functional>

#include "kronq/matrix.hpp"

namespace kronq {

/// W = (1/sqrt 2) [[1, 1], [1, -1]].
ComplexMatrix hadamard();

/// Entry (x, y) = (-1)^popcount(x & y) / sqrt(2^n).
ComplexMatrix walsh_matrix(std::size_t n);

/// Entry (y, x) = w_N^(xy) / sqrt(N), w_N = exp(2 pi i / N).
ComplexMatrix dft_matrix(std::size_t n);

/// H_2 = W; H_{2^(m+1)} = Pi(2, 2^m) * ((H_{2^m}, I) (x)_R W).
ComplexMatrix haar_matrix(std::size_t qubits);

/// Daubechies constants k0..k3.
std::array<double, 4> d4_constants();

/// D4 scaling matrix of even size m >= 4 from the banded entry formula.
ComplexMatrix d4_matrix(std::size_t m);

/// 2x2 factors with C1 * C0 = W.
ComplexMatrix d4_c0();
ComplexMatrix d4_c1();

/// Wavelet recursion U_{2^(n+i0)} = Pi(2, 2^(n+i0-1)) ((U, I) (x)_R I_2) D_{2^(n+i0)}
/// starting from `base` = U_{2^i0}. `scaling(qubits)` returns D on that many
/// qubits.
ComplexMatrix wavelet_matrix(const ComplexMatrix& base,
                             const std::function<ComplexMatrix(std::size_t)>& scaling,
                             std::size_t levels);

}  // namespace kronq
