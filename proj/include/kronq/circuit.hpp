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

// Mixed-radix circuit IR.
//
// Registers are numbered from zero; register 0 is the most significant digit
// of the flat basis index. Gates address contiguous register ranges, which
// act as a single merged register of dimension equal to the product of the
// member dimensions.

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "kronq/matrix.hpp"

namespace kronq {

struct RegRange {
  std::size_t first = 0;
  std::size_t count = 1;

  std::size_t end() const { return first + count; }
  friend bool operator==(const RegRange&, const RegRange&) = default;
};

inline RegRange reg(std::size_t index) { return {index, 1}; }

class RegisterLayout {
 public:
  RegisterLayout() = default;
  /// Every dimension must be at least 2.
  explicit RegisterLayout(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t total_dim() const { return total_; }

  /// Product of the dimensions in the range.
  std::size_t dim(RegRange r) const;
  /// Product of the dimensions after the range.
  std::size_t stride(RegRange r) const;
  /// Merged digit of `r` in the flat index.
  std::size_t digit(std::size_t index, RegRange r) const;
  RegRange all() const { return {0, dims_.size()}; }
  bool contains(RegRange r) const { return r.count > 0 && r.end() <= dims_.size(); }

  friend bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// Condition "merged register value == value".
struct Control {
  RegRange registers;
  std::size_t value = 0;
  friend bool operator==(const Control&, const Control&) = default;
};

struct SingleUnitary {
  RegRange target;
  ComplexMatrix matrix;
  friend bool operator==(const SingleUnitary&, const SingleUnitary&) = default;
};

/// Applies tuple[i] to `target` when `control` holds i.
struct Multiplexed {
  RegRange control;
  RegRange target;
  MatrixTuple tuple;
  std::vector<Control> controls;
  friend bool operator==(const Multiplexed&, const Multiplexed&) = default;
};

/// Applies `matrix` to `target` when every control matches.
struct ValueControlled {
  std::vector<Control> controls;
  RegRange target;
  ComplexMatrix matrix;
  friend bool operator==(const ValueControlled&, const ValueControlled&) = default;
};

/// |u>|v> -> w^(uv) |u>|v> with w = exp(2 pi i turn_num / turn_den).
struct PhasePair {
  RegRange first;
  RegRange second;
  long long turn_num = 0;
  long long turn_den = 1;
  std::vector<Control> controls;
  friend bool operator==(const PhasePair&, const PhasePair&) = default;
};

enum class PredicateOp { kEq, kNe, kLt, kGt, kOdd, kEven };

struct Clause {
  RegRange registers;
  PredicateOp op = PredicateOp::kEq;
  std::size_t value = 0;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Multiplies every basis state satisfying all clauses by `phase`.
/// No clauses means every state.
struct PredicatePhase {
  std::vector<Clause> clauses;
  Complex phase{1.0, 0.0};
  friend bool operator==(const PredicatePhase&, const PredicatePhase&) = default;
};

enum class PermutationKind {
  kShuffle,           // params {m, n}; block dimension mn
  kBitShift,          // block dimension 2^K; x -> (x >> 1) | ((x & 1) << (K-1))
  kSubtractTwoIfOdd,  // block dimension m even, m >= 4; odd x -> x-2 mod m
  kSwapRegisters,     // params {j, k}; equal dimensions; block unused
  kDigitReversal,     // params = radices; digits (d_1..d_r) -> sum d_i prod_{j<i} n_j
};

/// Basis-state permutation on the merged block. The permutation sends the
/// state with block value x to the state with block value perm(x).
struct IndexPermutation {
  PermutationKind kind = PermutationKind::kBitShift;
  RegRange block;
  std::vector<std::size_t> params;
  std::vector<Control> controls;
  friend bool operator==(const IndexPermutation&, const IndexPermutation&) = default;
};

using Gate = std::variant<SingleUnitary, Multiplexed, ValueControlled, PhasePair,
                          PredicatePhase, IndexPermutation>;

std::string_view gate_kind_name(const Gate& gate);

/// Throws ShapeError describing the first problem with `gate` on `layout`.
void validate_gate(const RegisterLayout& layout, const Gate& gate);

/// Image of block value x under the permutation (block dimension `dim`).
std::size_t permute_index(const IndexPermutation& p, std::size_t x, std::size_t dim);

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

  const RegisterLayout& layout() const { return layout_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates and appends; the new gate acts after all existing gates.
  Circuit& append(Gate gate);

  /// Appends the gates of `inner`, shifting its registers by `offset` and
  /// conditioning every gate on `extra` as well.
  Circuit& append_embedded(const Circuit& inner, std::size_t offset,
                           std::span<const Control> extra = {});

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  RegisterLayout layout_;
  std::vector<Gate> gates_;
};

/// c1 then c2. Layouts must be identical.
Circuit compose(const Circuit& c1, const Circuit& c2);

/// Gate order reversed with adjoint payloads.
Circuit inverse(const Circuit& c);

/// Full unitary G_T ... G_1.
ComplexMatrix simulate(const Circuit& c);

/// Applies one gate to the rows of `state` (total_dim rows).
void apply_gate(const RegisterLayout& layout, const Gate& gate, ComplexMatrix& state);

struct GateCountReport {
  std::size_t single_unitary = 0;
  std::size_t multiplexed = 0;
  std::size_t value_controlled = 0;
  std::size_t phase_pair = 0;
  std::size_t predicate_phase = 0;
  std::size_t index_permutation = 0;
  // Multiplexed gates contribute their control dimension, value-controlled
  // gates and controlled permutations 1, phase pairs over (n, m)
  // ceil(log2 n) * ceil(log2 m).
  std::size_t controlled_op_estimate = 0;

  std::size_t total() const {
    return single_unitary + multiplexed + value_controlled + phase_pair +
           predicate_phase + index_permutation;
  }
  friend bool operator==(const GateCountReport&, const GateCountReport&) = default;
};

GateCountReport gate_count(const Circuit& c);

}  // namespace kronq
