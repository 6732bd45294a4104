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

#include "kronq/group_synth.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

#include "kronq/errors.hpp"
#include "kronq/reference.hpp"
#include "kronq/transform.hpp"

namespace kronq {

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Register dimensions for a DFT of size n.
std::vector<std::size_t> dft_dims(std::size_t n, const DftOptions& options) {
  const auto& f = options.inline_factors;
  if (f.size() > 1 && std::accumulate(f.begin(), f.end(), std::size_t{1},
                                      std::multiplies<>()) == n) {
    return f;
  }
  return {n};
}

// DFT of the block's dimension on `block`, expanded into a sub-circuit when
// the block's registers match the requested inline factors.
void append_dft(Circuit& c, RegRange block, const std::vector<Control>& controls,
                const DftOptions& options) {
  const auto& dims = c.layout().dims();
  const std::vector<std::size_t> block_dims(dims.begin() + static_cast<long>(block.first),
                                            dims.begin() + static_cast<long>(block.end()));
  if (block.count > 1 && block_dims == options.inline_factors) {
    c.append_embedded(synth_dft(block_dims), block.first, controls);
    return;
  }
  const ComplexMatrix f = dft_matrix(c.layout().dim(block));
  if (controls.empty()) {
    c.append(SingleUnitary{block, f});
  } else {
    c.append(ValueControlled{controls, block, f});
  }
}

GroupFtResult make_result(FiniteGroup group, Circuit circuit, Equivalence equivalence) {
  RepresentationSet reps = irreps(group);
  EncodingMap encoding = standard_encoding(group, reps);
  return {std::move(group), std::move(reps), std::move(encoding), std::move(circuit),
          equivalence, std::nullopt};
}

void attach_phases(GroupFtResult& res) {
  const VerificationReport report = verify(res);
  if (report.passed) res.phases = report.phases;
}

nlohmann::json rounded(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

std::string_view equivalence_name(Equivalence e) {
  return e == Equivalence::kExact ? "exact" : "up_to_phase";
}

GroupFtResult synth_cyclic_ft(long long n, const DftOptions& options) {
  FiniteGroup group = make_cyclic(n);
  if (n == 1) return make_result(std::move(group), Circuit(RegisterLayout()), Equivalence::kExact);
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::size_t> factors = dft_dims(size, options);
  if (factors.size() == 1) factors = prime_factors(size);
  return make_result(std::move(group), synth_dft(factors), Equivalence::kExact);
}

GroupFtResult synth_product_ft(const GroupFtResult& c1, const GroupFtResult& c2) {
  if (c1.equivalence != Equivalence::kExact || c2.equivalence != Equivalence::kExact) {
    throw ConstraintError("product transform needs exact factor transforms; apply phase "
                          "correction first");
  }
  FiniteGroup group = make_product(c1.group, c2.group);
  std::vector<std::size_t> dims = c1.circuit.layout().dims();
  const auto& dims2 = c2.circuit.layout().dims();
  dims.insert(dims.end(), dims2.begin(), dims2.end());
  Circuit circuit{RegisterLayout(dims)};
  circuit.append_embedded(c1.circuit, 0);
  circuit.append_embedded(c2.circuit, c1.circuit.layout().size());
  RepresentationSet reps = irreps(group);
  EncodingMap encoding = product_encoding(c1.reps, c1.encoding, c2.reps, c2.encoding);
  return {std::move(group), std::move(reps), std::move(encoding), std::move(circuit),
          Equivalence::kExact, std::nullopt};
}

GroupFtResult synth_quaternion_ft(long long n, const QuaternionOptions& options) {
  FiniteGroup group = make_quaternionic(n);
  const auto half = static_cast<std::size_t>(n);
  std::vector<std::size_t> dims{2};
  const std::vector<std::size_t> k_dims = dft_dims(2 * half, options.dft);
  dims.insert(dims.end(), k_dims.begin(), k_dims.end());
  Circuit c{RegisterLayout(dims)};
  const RegRange k{1, k_dims.size()};
  append_dft(c, k, {}, options.dft);
  c.append(ValueControlled{{{k, 0}}, reg(0), hadamard()});
  c.append(ValueControlled{{{k, half}}, reg(0), hadamard()});
  if (options.omit_sign_gate) {
    GroupFtResult res = make_result(make_metacyclic(2, 2 * n, 2 * n - 1, 0), std::move(c),
                                    Equivalence::kUpToPhase);
    attach_phases(res);
    return res;
  }
  c.append(PredicatePhase{{{reg(0), PredicateOp::kEq, 1},
                           {k, PredicateOp::kGt, half},
                           {k, PredicateOp::kOdd, 0}},
                          -1.0});
  return make_result(std::move(group), std::move(c), Equivalence::kExact);
}

GroupFtResult synth_metacyclic_ft(long long q, long long m, long long r, long long s,
                                  const DftOptions& options) {
  FiniteGroup group = make_metacyclic(q, m, r, s);
  const long long rn = group.params()[2];
  const long long sn = group.params()[3];
  long long d = std::gcd(rn - 1, m);
  if (d == 0) d = m;
  const long long e = m / d;
  std::vector<std::size_t> dims{static_cast<std::size_t>(q)};
  RegRange d_reg{0, 0};
  RegRange e_reg{0, 0};
  if (d > 1) {
    d_reg = reg(dims.size());
    dims.push_back(static_cast<std::size_t>(d));
  }
  if (e > 1) {
    e_reg = reg(dims.size());
    dims.push_back(static_cast<std::size_t>(e));
  }
  Circuit c{RegisterLayout(dims)};
  std::vector<Control> when_e_zero;
  if (e > 1) when_e_zero.push_back({e_reg, 0});
  if (m > 1) append_dft(c, {1, dims.size() - 1}, {}, options);
  const long long qd = q * d;
  if (d > 1 && sn % qd != 0) {
    c.append(PhasePair{reg(0), d_reg, sn % qd, qd, when_e_zero});
  }
  append_dft(c, reg(0), when_e_zero, {});
  GroupFtResult res = make_result(std::move(group), std::move(c), Equivalence::kUpToPhase);
  attach_phases(res);
  return res;
}

GroupFtResult synth_en_ft(long long n) {
  FiniteGroup group = make_en(n);
  const auto levels = static_cast<std::size_t>(n);
  Circuit c(qubits(2 * levels + 1));
  c.append(SingleUnitary{reg(0), hadamard()});
  for (std::size_t i = 1; i <= levels; ++i) {
    c.append(ValueControlled{{{reg(0), 0}}, reg(2 * i - 1), hadamard()});
    c.append(SingleUnitary{reg(2 * i), hadamard()});
  }
  return make_result(std::move(group), std::move(c), Equivalence::kExact);
}

GroupFtResult synth_group_ft(const GroupSpec& spec, const DftOptions& options) {
  const auto param = [&](std::size_t i) { return spec.params.at(i); };
  switch (spec.family) {
    case GroupFamily::kCyclic:
      return synth_cyclic_ft(param(0), options);
    case GroupFamily::kProduct:
      return synth_product_ft(apply_phase_correction(synth_group_ft(spec.factors.at(0), options)),
                              apply_phase_correction(synth_group_ft(spec.factors.at(1), options)));
    case GroupFamily::kQuaternionic:
      return synth_quaternion_ft(param(0), {options, false});
    case GroupFamily::kMetacyclic:
      return synth_metacyclic_ft(param(0), param(1), param(2), param(3), options);
    case GroupFamily::kEn:
      return synth_en_ft(param(0));
  }
  throw ConstraintError("unsupported group family");
}

GroupFtResult apply_phase_correction(const GroupFtResult& res) {
  if (res.equivalence == Equivalence::kExact) return res;
  if (!res.phases) {
    throw ConstraintError("no extracted phases to correct; the circuit did not verify up to phase");
  }
  GroupFtResult out = res;
  const RegRange all = out.circuit.layout().all();
  for (std::size_t i = 0; i < res.phases->size(); ++i) {
    const Complex phi = (*res.phases)[i];
    if (std::abs(phi - 1.0) <= 1e-15 || all.count == 0) continue;
    out.circuit.append(PredicatePhase{{{all, PredicateOp::kEq, i}}, std::conj(phi)});
  }
  out.equivalence = Equivalence::kExact;
  out.phases.reset();
  return out;
}

Comparison compare_matrices(const ComplexMatrix& m, const ComplexMatrix& f, double tol,
                            Equivalence mode) {
  Comparison out;
  if (mode == Equivalence::kExact) {
    out.max_deviation = max_abs_diff(m, f);
    out.passed = out.max_deviation <= tol;
    return out;
  }
  out.phases = equal_up_to_diag_phase(m, f, tol);
  if (!out.phases) {
    out.max_deviation = max_abs_diff(m, f);
    return out;
  }
  out.passed = true;
  out.max_deviation = max_abs_diff(m, out.phases->as_diagonal() * f);
  return out;
}

VerificationReport verify_circuit(const Circuit& circuit, const ComplexMatrix& oracle,
                                  std::string spec, double tol, Equivalence mode) {
  if (circuit.layout().total_dim() != oracle.rows()) {
    throw ShapeError("circuit dimension " + std::to_string(circuit.layout().total_dim()) +
                     " does not match oracle dimension " + std::to_string(oracle.rows()));
  }
  Comparison cmp = compare_matrices(simulate(circuit), oracle, tol, mode);
  return {std::move(spec), oracle.rows(), mode, cmp.passed, cmp.max_deviation,
          std::move(cmp.phases), gate_count(circuit)};
}

VerificationReport verify(const GroupFtResult& res, double tol) {
  return verify_circuit(res.circuit, fourier_oracle(res.group, res.reps, res.encoding),
                        res.group.spec().to_string(), tol, res.equivalence);
}

std::string gate_count_json(const GateCountReport& r) {
  nlohmann::json j = {{"single_unitary", r.single_unitary},
                      {"multiplexed", r.multiplexed},
                      {"value_controlled", r.value_controlled},
                      {"phase_pair", r.phase_pair},
                      {"predicate_phase", r.predicate_phase},
                      {"index_permutation", r.index_permutation},
                      {"total", r.total()},
                      {"controlled_op_estimate", r.controlled_op_estimate}};
  return j.dump(1);
}

std::string VerificationReport::to_json() const {
  nlohmann::json phase_list = nullptr;
  if (phases) {
    phase_list = nlohmann::json::array();
    for (const Complex& p : phases->values()) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%.15g,%.15g", p.real(), p.imag());
      phase_list.push_back(buf);
    }
  }
  nlohmann::json j = {{"spec", spec},
                      {"dimension", dimension},
                      {"equivalence", equivalence_name(equivalence)},
                      {"passed", passed},
                      {"max_deviation", rounded(max_deviation)},
                      {"phases", phase_list},
                      {"gate_counts", nlohmann::json::parse(gate_count_json(gate_counts))}};
  return j.dump(1) + "\n";
}

}  // namespace kronq
