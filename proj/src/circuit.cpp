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

#include "kronq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kronq/errors.hpp"
#include "kronq/kernels.hpp"

namespace kronq {

RegisterLayout::RegisterLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (std::size_t d : dims_) {
    if (d < 2) throw ShapeError("register dimensions must be at least 2, got " + std::to_string(d));
    total_ *= d;
  }
}

std::size_t RegisterLayout::dim(RegRange r) const {
  std::size_t out = 1;
  for (std::size_t i = r.first; i < r.end(); ++i) out *= dims_.at(i);
  return out;
}

std::size_t RegisterLayout::stride(RegRange r) const {
  std::size_t out = 1;
  for (std::size_t i = r.end(); i < dims_.size(); ++i) out *= dims_[i];
  return out;
}

std::size_t RegisterLayout::digit(std::size_t index, RegRange r) const {
  return (index / stride(r)) % dim(r);
}

namespace {

std::string describe(RegRange r) {
  if (r.count == 1) return "register " + std::to_string(r.first);
  return "registers " + std::to_string(r.first) + ".." + std::to_string(r.end() - 1);
}

bool overlaps(RegRange a, RegRange b) { return a.first < b.end() && b.first < a.end(); }

void check_range(const RegisterLayout& layout, RegRange r) {
  if (!layout.contains(r)) {
    throw ShapeError(describe(r) + " out of range for a " + std::to_string(layout.size()) +
                     "-register layout");
  }
}

void check_disjoint(const std::vector<RegRange>& ranges) {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t j = i + 1; j < ranges.size(); ++j) {
      if (overlaps(ranges[i], ranges[j])) {
        throw ShapeError(describe(ranges[i]) + " and " + describe(ranges[j]) +
                         " overlap; controls and targets must use distinct registers");
      }
    }
  }
}

void check_controls(const RegisterLayout& layout, const std::vector<Control>& controls,
                    std::vector<RegRange>& used) {
  for (const Control& c : controls) {
    check_range(layout, c.registers);
    if (c.value >= layout.dim(c.registers)) {
      throw ShapeError("control value " + std::to_string(c.value) + " out of range for " +
                       describe(c.registers));
    }
    used.push_back(c.registers);
  }
}

void check_square(const ComplexMatrix& m, std::size_t dim, RegRange target) {
  if (m.rows() != dim || m.cols() != dim) {
    throw ShapeError("payload is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but " + describe(target) + " has dimension " + std::to_string(dim));
  }
}

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

struct Validator {
  const RegisterLayout& layout;

  void operator()(const SingleUnitary& g) const {
    check_range(layout, g.target);
    check_square(g.matrix, layout.dim(g.target), g.target);
  }

  void operator()(const Multiplexed& g) const {
    check_range(layout, g.control);
    check_range(layout, g.target);
    std::vector<RegRange> used{g.control, g.target};
    check_controls(layout, g.controls, used);
    check_disjoint(used);
    if (g.tuple.size() != layout.dim(g.control)) {
      throw ShapeError("multiplexed tuple has " + std::to_string(g.tuple.size()) +
                       " members but " + describe(g.control) + " has dimension " +
                       std::to_string(layout.dim(g.control)));
    }
    check_square(g.tuple[0], layout.dim(g.target), g.target);
  }

  void operator()(const ValueControlled& g) const {
    check_range(layout, g.target);
    std::vector<RegRange> used{g.target};
    check_controls(layout, g.controls, used);
    check_disjoint(used);
    check_square(g.matrix, layout.dim(g.target), g.target);
  }

  void operator()(const PhasePair& g) const {
    check_range(layout, g.first);
    check_range(layout, g.second);
    std::vector<RegRange> used{g.first, g.second};
    check_controls(layout, g.controls, used);
    check_disjoint(used);
    if (g.turn_den <= 0 || g.turn_num < 0 || g.turn_num >= g.turn_den) {
      throw ShapeError("phase pair turn must satisfy 0 <= num < den, got " +
                       std::to_string(g.turn_num) + "/" + std::to_string(g.turn_den));
    }
  }

  void operator()(const PredicatePhase& g) const {
    for (const Clause& c : g.clauses) check_range(layout, c.registers);
    if (std::abs(std::abs(g.phase) - 1.0) > 1e-12) {
      throw ShapeError("predicate phase must have unit modulus");
    }
  }

  void operator()(const IndexPermutation& g) const {
    std::vector<RegRange> used;
    if (g.kind == PermutationKind::kSwapRegisters) {
      if (g.params.size() != 2 || g.params[0] == g.params[1]) {
        throw ShapeError("register swap needs two distinct register indices");
      }
      check_range(layout, reg(g.params[0]));
      check_range(layout, reg(g.params[1]));
      if (layout.dims()[g.params[0]] != layout.dims()[g.params[1]]) {
        throw ShapeError("swapped registers must have equal dimensions");
      }
      used = {reg(g.params[0]), reg(g.params[1])};
    } else {
      check_range(layout, g.block);
      used = {g.block};
      const std::size_t dim = layout.dim(g.block);
      switch (g.kind) {
        case PermutationKind::kShuffle:
          if (g.params.size() != 2 || g.params[0] == 0 || g.params[1] == 0 ||
              g.params[0] * g.params[1] != dim) {
            throw ShapeError("shuffle parameters must multiply to the block dimension " +
                             std::to_string(dim));
          }
          break;
        case PermutationKind::kBitShift:
          if (!g.params.empty() || !is_power_of_two(dim)) {
            throw ShapeError("bit shift needs a block of dimension 2^K");
          }
          break;
        case PermutationKind::kSubtractTwoIfOdd:
          if (!g.params.empty() || dim % 2 != 0 || dim < 4) {
            throw ShapeError("subtract-two-if-odd needs an even block dimension of at least 4");
          }
          break;
        case PermutationKind::kDigitReversal: {
          std::size_t product = 1;
          for (std::size_t r : g.params) {
            if (r < 2) throw ShapeError("digit reversal radices must be at least 2");
            product *= r;
          }
          if (g.params.empty() || product != dim) {
            throw ShapeError("digit reversal radices must multiply to the block dimension " +
                             std::to_string(dim));
          }
          break;
        }
        case PermutationKind::kSwapRegisters:
          break;
      }
    }
    check_controls(layout, g.controls, used);
    check_disjoint(used);
  }
};

bool controls_match(const RegisterLayout& layout, const std::vector<Control>& controls,
                    std::size_t index) {
  for (const Control& c : controls) {
    if (layout.digit(index, c.registers) != c.value) return false;
  }
  return true;
}

bool clause_holds(const RegisterLayout& layout, const Clause& c, std::size_t index) {
  const std::size_t v = layout.digit(index, c.registers);
  switch (c.op) {
    case PredicateOp::kEq:
      return v == c.value;
    case PredicateOp::kNe:
      return v != c.value;
    case PredicateOp::kLt:
      return v < c.value;
    case PredicateOp::kGt:
      return v > c.value;
    case PredicateOp::kOdd:
      return v % 2 == 1;
    case PredicateOp::kEven:
      return v % 2 == 0;
  }
  return false;
}

// Applies the matrix chosen by `select(base)` to every slice of `target`.
template <typename Select>
void apply_on_range(const RegisterLayout& layout, RegRange target, Select select,
                    ComplexMatrix& state) {
  const std::size_t dim = layout.dim(target);
  const std::size_t stride = layout.stride(target);
  const std::size_t outer = layout.total_dim() / (dim * stride);
  const std::size_t width = state.cols();
  std::vector<Complex> scratch(dim * width);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t base = o * dim * stride + s;
      const ComplexMatrix* m = select(base);
      if (m == nullptr) continue;
      for (std::size_t v = 0; v < dim; ++v) {
        auto src = state.row(base + v * stride);
        std::copy(src.begin(), src.end(), scratch.begin() + v * width);
      }
      for (std::size_t a = 0; a < dim; ++a) {
        auto dst = state.row(base + a * stride);
        std::fill(dst.begin(), dst.end(), Complex{});
        for (std::size_t b = 0; b < dim; ++b) {
          const Complex coeff = (*m)(a, b);
          if (coeff == Complex{}) continue;
          kernels::caxpy(dst, coeff,
                         std::span<const Complex>(scratch.data() + b * width, width));
        }
      }
    }
  }
}

std::size_t permute_full_index(const RegisterLayout& layout, const IndexPermutation& p,
                               std::size_t x) {
  if (p.kind == PermutationKind::kSwapRegisters) {
    const RegRange a = reg(p.params[0]);
    const RegRange b = reg(p.params[1]);
    const std::size_t da = layout.digit(x, a);
    const std::size_t db = layout.digit(x, b);
    return x - da * layout.stride(a) - db * layout.stride(b) + db * layout.stride(a) +
           da * layout.stride(b);
  }
  const std::size_t dim = layout.dim(p.block);
  const std::size_t stride = layout.stride(p.block);
  const std::size_t v = (x / stride) % dim;
  return x - v * stride + permute_index(p, v, dim) * stride;
}

struct Applier {
  const RegisterLayout& layout;
  ComplexMatrix& state;

  void operator()(const SingleUnitary& g) const {
    apply_on_range(layout, g.target, [&](std::size_t) { return &g.matrix; }, state);
  }

  void operator()(const Multiplexed& g) const {
    apply_on_range(
        layout, g.target,
        [&](std::size_t base) -> const ComplexMatrix* {
          if (!controls_match(layout, g.controls, base)) return nullptr;
          return &g.tuple[layout.digit(base, g.control)];
        },
        state);
  }

  void operator()(const ValueControlled& g) const {
    apply_on_range(
        layout, g.target,
        [&](std::size_t base) -> const ComplexMatrix* {
          return controls_match(layout, g.controls, base) ? &g.matrix : nullptr;
        },
        state);
  }

  void operator()(const PhasePair& g) const {
    for (std::size_t x = 0; x < layout.total_dim(); ++x) {
      if (!controls_match(layout, g.controls, x)) continue;
      const auto u = static_cast<long long>(layout.digit(x, g.first));
      const auto v = static_cast<long long>(layout.digit(x, g.second));
      const long long turns = ((u * v) % g.turn_den) * g.turn_num % g.turn_den;
      if (turns == 0) continue;
      kernels::cscal(state.row(x), root_of_unity(turns, g.turn_den));
    }
  }

  void operator()(const PredicatePhase& g) const {
    for (std::size_t x = 0; x < layout.total_dim(); ++x) {
      const bool hit = std::all_of(g.clauses.begin(), g.clauses.end(), [&](const Clause& c) {
        return clause_holds(layout, c, x);
      });
      if (hit) kernels::cscal(state.row(x), g.phase);
    }
  }

  void operator()(const IndexPermutation& g) const {
    ComplexMatrix next(state.rows(), state.cols());
    for (std::size_t x = 0; x < layout.total_dim(); ++x) {
      const std::size_t y =
          controls_match(layout, g.controls, x) ? permute_full_index(layout, g, x) : x;
      auto src = state.row(x);
      std::copy(src.begin(), src.end(), next.row(y).begin());
    }
    state = std::move(next);
  }
};

template <typename T>
std::vector<T> concat(std::vector<T> a, std::span<const T> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

RegRange shifted(RegRange r, std::size_t offset) { return {r.first + offset, r.count}; }

std::vector<Control> shifted(std::vector<Control> controls, std::size_t offset) {
  for (Control& c : controls) c.registers = shifted(c.registers, offset);
  return controls;
}

}  // namespace

std::string_view gate_kind_name(const Gate& gate) {
  static constexpr std::string_view kNames[] = {"single_unitary",  "multiplexed",
                                                "value_controlled", "phase_pair",
                                                "predicate_phase", "index_permutation"};
  return kNames[gate.index()];
}

void validate_gate(const RegisterLayout& layout, const Gate& gate) {
  std::visit(Validator{layout}, gate);
}

std::size_t permute_index(const IndexPermutation& p, std::size_t x, std::size_t dim) {
  switch (p.kind) {
    case PermutationKind::kShuffle: {
      const std::size_t m = p.params[0];
      const std::size_t n = p.params[1];
      return (x % m) * n + x / m;
    }
    case PermutationKind::kBitShift: {
      const std::size_t k = ceil_log2(dim);
      return (x >> 1) | ((x & 1) << (k - 1));
    }
    case PermutationKind::kSubtractTwoIfOdd:
      return x % 2 == 1 ? (x + dim - 2) % dim : x;
    case PermutationKind::kDigitReversal: {
      std::vector<std::size_t> digits(p.params.size());
      for (std::size_t i = p.params.size(); i-- > 0;) {
        digits[i] = x % p.params[i];
        x /= p.params[i];
      }
      std::size_t out = 0;
      std::size_t weight = 1;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        out += digits[i] * weight;
        weight *= p.params[i];
      }
      return out;
    }
    case PermutationKind::kSwapRegisters:
      break;
  }
  throw ShapeError("register swap is not a block permutation");
}

Circuit& Circuit::append(Gate gate) {
  validate_gate(layout_, gate);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append_embedded(const Circuit& inner, std::size_t offset,
                                  std::span<const Control> extra) {
  const auto& dims = layout_.dims();
  const auto& inner_dims = inner.layout().dims();
  if (offset + inner_dims.size() > dims.size() ||
      !std::equal(inner_dims.begin(), inner_dims.end(), dims.begin() + offset)) {
    throw ShapeError("embedded circuit layout does not match registers starting at " +
                     std::to_string(offset));
  }
  for (const Gate& gate : inner.gates()) {
    Gate moved = std::visit(
        [&](const auto& g) -> Gate {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, SingleUnitary>) {
            if (extra.empty()) return SingleUnitary{shifted(g.target, offset), g.matrix};
            return ValueControlled{{extra.begin(), extra.end()}, shifted(g.target, offset),
                                   g.matrix};
          } else if constexpr (std::is_same_v<T, Multiplexed>) {
            return Multiplexed{shifted(g.control, offset), shifted(g.target, offset), g.tuple,
                               concat(shifted(g.controls, offset), extra)};
          } else if constexpr (std::is_same_v<T, ValueControlled>) {
            return ValueControlled{concat(shifted(g.controls, offset), extra),
                                   shifted(g.target, offset), g.matrix};
          } else if constexpr (std::is_same_v<T, PhasePair>) {
            return PhasePair{shifted(g.first, offset), shifted(g.second, offset), g.turn_num,
                             g.turn_den, concat(shifted(g.controls, offset), extra)};
          } else if constexpr (std::is_same_v<T, PredicatePhase>) {
            PredicatePhase out{g.clauses, g.phase};
            for (Clause& c : out.clauses) c.registers = shifted(c.registers, offset);
            for (const Control& c : extra) {
              out.clauses.push_back({c.registers, PredicateOp::kEq, c.value});
            }
            return out;
          } else {
            IndexPermutation out{g.kind, shifted(g.block, offset), g.params,
                                 concat(shifted(g.controls, offset), extra)};
            if (g.kind == PermutationKind::kSwapRegisters) {
              for (std::size_t& p : out.params) p += offset;
            }
            return out;
          }
        },
        gate);
    append(std::move(moved));
  }
  return *this;
}

Circuit compose(const Circuit& c1, const Circuit& c2) {
  if (!(c1.layout() == c2.layout())) throw ShapeError("cannot compose circuits with different layouts");
  Circuit out = c1;
  for (const Gate& g : c2.gates()) out.append(g);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.layout());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, SingleUnitary>) {
            out.append(SingleUnitary{g.target, g.matrix.adjoint()});
          } else if constexpr (std::is_same_v<T, Multiplexed>) {
            std::vector<ComplexMatrix> members;
            for (const auto& m : g.tuple.members()) members.push_back(m.adjoint());
            out.append(Multiplexed{g.control, g.target, MatrixTuple(std::move(members)),
                                   g.controls});
          } else if constexpr (std::is_same_v<T, ValueControlled>) {
            out.append(ValueControlled{g.controls, g.target, g.matrix.adjoint()});
          } else if constexpr (std::is_same_v<T, PhasePair>) {
            out.append(PhasePair{g.first, g.second, (g.turn_den - g.turn_num) % g.turn_den,
                                 g.turn_den, g.controls});
          } else if constexpr (std::is_same_v<T, PredicatePhase>) {
            out.append(PredicatePhase{g.clauses, std::conj(g.phase)});
          } else {
            IndexPermutation p = g;
            std::size_t repeats = 1;
            switch (g.kind) {
              case PermutationKind::kShuffle:
                std::swap(p.params[0], p.params[1]);
                break;
              case PermutationKind::kDigitReversal:
                std::reverse(p.params.begin(), p.params.end());
                break;
              case PermutationKind::kBitShift:
                repeats = ceil_log2(c.layout().dim(g.block)) - 1;
                break;
              case PermutationKind::kSubtractTwoIfOdd:
                repeats = c.layout().dim(g.block) / 2 - 1;
                break;
              case PermutationKind::kSwapRegisters:
                break;
            }
            for (std::size_t i = 0; i < repeats; ++i) out.append(p);
          }
        },
        *it);
  }
  return out;
}

void apply_gate(const RegisterLayout& layout, const Gate& gate, ComplexMatrix& state) {
  if (state.rows() != layout.total_dim()) {
    throw ShapeError("state has " + std::to_string(state.rows()) + " rows, layout needs " +
                     std::to_string(layout.total_dim()));
  }
  std::visit(Applier{layout, state}, gate);
}

ComplexMatrix simulate(const Circuit& c) {
  ComplexMatrix state = ComplexMatrix::identity(c.layout().total_dim());
  for (const Gate& g : c.gates()) apply_gate(c.layout(), g, state);
  return state;
}

GateCountReport gate_count(const Circuit& c) {
  GateCountReport r;
  const RegisterLayout& layout = c.layout();
  for (const Gate& gate : c.gates()) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, SingleUnitary>) {
            ++r.single_unitary;
          } else if constexpr (std::is_same_v<T, Multiplexed>) {
            ++r.multiplexed;
            r.controlled_op_estimate += layout.dim(g.control);
          } else if constexpr (std::is_same_v<T, ValueControlled>) {
            ++r.value_controlled;
            r.controlled_op_estimate += 1;
          } else if constexpr (std::is_same_v<T, PhasePair>) {
            ++r.phase_pair;
            r.controlled_op_estimate +=
                ceil_log2(layout.dim(g.first)) * ceil_log2(layout.dim(g.second));
          } else if constexpr (std::is_same_v<T, PredicatePhase>) {
            ++r.predicate_phase;
          } else {
            ++r.index_permutation;
            if (!g.controls.empty()) r.controlled_op_estimate += 1;
          }
        },
        gate);
  }
  return r;
}

}  // namespace kronq
