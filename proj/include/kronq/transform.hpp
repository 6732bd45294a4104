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

// Synthesis of shuffles, direct sums, generalized Kronecker products,
// Walsh-Hadamard, wavelet, and DFT transforms into circuits.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kronq/circuit.hpp"
#include "kronq/tensor.hpp"

namespace kronq {

/// Layout of `n` two-dimensional registers.
RegisterLayout qubits(std::size_t n);

/// Circuit simulating to shuffle_matrix(m, n). (1, n) and (m, 1) give an
/// empty circuit; (m, m) a register swap; (2, 2^k) a bit shift on k+1
/// qubits; anything else one shuffle on layout (m, n).
Circuit synth_shuffle(std::size_t m, std::size_t n);

/// One multiplexed gate on layout (n, m) for an n-tuple of m x m matrices.
Circuit synth_direct_sum(const MatrixTuple& c);

/// `a` is an m-tuple of n x n matrices, `c` an n-tuple of m x m matrices.
/// Right products use layout (n, m), left products layout (m, n). Two
/// multiplexed gates; simulates to gkron(side, a, c).
Circuit synth_gkron(Side side, const MatrixTuple& a, const MatrixTuple& c);

/// W on each of n qubits.
Circuit synth_walsh(std::size_t n);

/// Haar transform on n >= 1 qubits.
Circuit synth_haar(std::size_t n);

/// D4 scaling matrix of size m on layout (m/2, 2): C0 on the low register,
/// subtract-two-if-odd on both, C1 on the low register.
Circuit synth_d4_scaling(std::size_t m);

struct ScalingFamily {
  std::string name;
  /// i0: the base circuit acts on i0 qubits.
  std::size_t base_level = 1;
  Circuit base_circuit;
  /// Scaling circuit on level + i0 qubits, for level >= 1.
  std::function<Circuit(std::size_t level)> scaler;
};

/// D_{2^k} = I (x) W, base W.
ScalingFamily haar_family();

/// D_{2^k} = D4 scaling matrix, base D4 of size 4.
ScalingFamily d4_family();

/// Unrolled wavelet recursion on levels + i0 qubits. Each level applies its
/// scaling circuit, the previous level on the high qubits while the lowest
/// qubit is 0, and a bit shift.
Circuit synth_wavelet(const ScalingFamily& family, std::size_t levels);

/// Radix-split DFT on layout (n_1, ..., n_r): per register a DFT gate and a
/// twiddle phase pair with the remaining registers, then one digit
/// reversal. Simulates to dft_matrix(n_1 * ... * n_r).
Circuit synth_dft(const std::vector<std::size_t>& factors);

}  // namespace kronq
