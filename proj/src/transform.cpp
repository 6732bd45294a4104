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

#include "kronq/transform.hpp"

#include <bit>

#include "kronq/errors.hpp"
#include "kronq/reference.hpp"

namespace kronq {

RegisterLayout qubits(std::size_t n) { return RegisterLayout(std::vector<std::size_t>(n, 2)); }

Circuit synth_shuffle(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw ShapeError("shuffle dimensions must be positive");
  if (m == 1 || n == 1) {
    const std::size_t dim = m * n;
    return Circuit(dim == 1 ? RegisterLayout() : RegisterLayout({dim}));
  }
  if (m == n) {
    Circuit c(RegisterLayout({m, m}));
    c.append(IndexPermutation{PermutationKind::kSwapRegisters, {0, 2}, {0, 1}, {}});
    return c;
  }
  if (m == 2 && std::has_single_bit(n)) {
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(n));
    Circuit c(qubits(k + 1));
    c.append(IndexPermutation{PermutationKind::kBitShift, c.layout().all(), {}, {}});
    return c;
  }
  Circuit c(RegisterLayout({m, n}));
  c.append(IndexPermutation{PermutationKind::kShuffle, c.layout().all(), {m, n}, {}});
  return c;
}

Circuit synth_direct_sum(const MatrixTuple& c) {
  if (c.rows() != c.cols()) throw ShapeError("direct sum members must be square");
  Circuit out(RegisterLayout({c.size(), c.rows()}));
  out.append(Multiplexed{reg(0), reg(1), c, {}});
  return out;
}

Circuit synth_gkron(Side side, const MatrixTuple& a, const MatrixTuple& c) {
  const std::size_t m = a.size();
  const std::size_t n = a.rows();
  if (a.cols() != n || c.size() != n || c.rows() != m || c.cols() != m) {
    throw ShapeError("expected an m-tuple of n x n and an n-tuple of m x m matrices");
  }
  if (side == Side::kRight) {
    Circuit out(RegisterLayout({n, m}));
    out.append(Multiplexed{reg(0), reg(1), c, {}});
    out.append(Multiplexed{reg(1), reg(0), a, {}});
    return out;
  }
  Circuit out(RegisterLayout({m, n}));
  out.append(Multiplexed{reg(1), reg(0), c, {}});
  out.append(Multiplexed{reg(0), reg(1), a, {}});
  return out;
}

Circuit synth_walsh(std::size_t n) {
  if (n == 0) throw ShapeError("Walsh transform needs at least one qubit");
  Circuit c(qubits(n));
  for (std::size_t i = 0; i < n; ++i) c.append(SingleUnitary{reg(i), hadamard()});
  return c;
}

Circuit synth_haar(std::size_t n) {
  if (n == 0) throw ShapeError("Haar transform needs at least one qubit");
  return synth_wavelet(haar_family(), n - 1);
}

namespace {

void append_d4_scaling(Circuit& c) {
  const RegRange low = reg(c.layout().size() - 1);
  c.append(SingleUnitary{low, d4_c0()});
  c.append(IndexPermutation{PermutationKind::kSubtractTwoIfOdd, c.layout().all(), {}, {}});
  c.append(SingleUnitary{low, d4_c1()});
}

}  // namespace

Circuit synth_d4_scaling(std::size_t m) {
  if (m < 4 || m % 2 != 0) {
    throw ShapeError("D4 scaling needs an even size of at least 4, got " + std::to_string(m));
  }
  Circuit c(RegisterLayout({m / 2, 2}));
  append_d4_scaling(c);
  return c;
}

ScalingFamily haar_family() {
  Circuit base(qubits(1));
  base.append(SingleUnitary{reg(0), hadamard()});
  return {"haar", 1, std::move(base), [](std::size_t level) {
            Circuit c(qubits(level + 1));
            c.append(SingleUnitary{reg(level), hadamard()});
            return c;
          }};
}

ScalingFamily d4_family() {
  Circuit base(qubits(2));
  append_d4_scaling(base);
  return {"d4", 2, std::move(base), [](std::size_t level) {
            Circuit c(qubits(level + 2));
            append_d4_scaling(c);
            return c;
          }};
}

Circuit synth_wavelet(const ScalingFamily& family, std::size_t levels) {
  if (!(family.base_circuit.layout() == qubits(family.base_level))) {
    throw ShapeError("base circuit of family '" + family.name + "' must act on " +
                     std::to_string(family.base_level) + " qubits");
  }
  Circuit u = family.base_circuit;
  for (std::size_t level = 1; level <= levels; ++level) {
    const std::size_t n = level + family.base_level;
    Circuit next(qubits(n));
    next.append_embedded(family.scaler(level), 0);
    const Control low_zero{reg(n - 1), 0};
    next.append_embedded(u, 0, std::span<const Control>(&low_zero, 1));
    next.append(IndexPermutation{PermutationKind::kBitShift, next.layout().all(), {}, {}});
    u = std::move(next);
  }
  return u;
}

Circuit synth_dft(const std::vector<std::size_t>& factors) {
  if (factors.empty()) throw ShapeError("DFT factor list must be non-empty");
  for (std::size_t f : factors) {
    if (f < 2) throw ShapeError("DFT factors must be at least 2, got " + std::to_string(f));
  }
  Circuit c{RegisterLayout(factors)};
  const std::size_t r = factors.size();
  std::size_t remaining = c.layout().total_dim();
  for (std::size_t i = 0; i < r; ++i) {
    c.append(SingleUnitary{reg(i), dft_matrix(factors[i])});
    if (i + 1 < r) {
      c.append(PhasePair{reg(i), {i + 1, r - i - 1}, 1, static_cast<long long>(remaining), {}});
    }
    remaining /= factors[i];
  }
  if (r > 1) {
    c.append(IndexPermutation{PermutationKind::kDigitReversal, c.layout().all(), factors, {}});
  }
  return c;
}

}  // namespace kronq
