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

// Fourier-transform circuits for the supported group families and their
// verification against Fourier-oracle matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kronq/circuit.hpp"
#include "kronq/group.hpp"
#include "kronq/representation.hpp"
#include "kronq/tensor.hpp"

namespace kronq {

enum class Equivalence { kExact, kUpToPhase };

std::string_view equivalence_name(Equivalence e);

struct GroupFtResult {
  FiniteGroup group;
  RepresentationSet reps;
  EncodingMap encoding;
  Circuit circuit;
  Equivalence equivalence = Equivalence::kExact;
  /// Present for up-to-phase results once verification has run.
  std::optional<PhaseVector> phases;
};

struct DftOptions {
  /// When set, DFT payloads whose dimension is the product of these factors
  /// are expanded into synth_dft sub-circuits over matching registers.
  std::vector<std::size_t> inline_factors;
};

/// DFT over the ascending prime factors of n; n = 1 gives the empty circuit.
GroupFtResult synth_cyclic_ft(long long n, const DftOptions& options = {});

/// c1 on the most significant registers, c2 on the rest. Throws
/// ConstraintError if either input is only correct up to phase.
GroupFtResult synth_product_ft(const GroupFtResult& c1, const GroupFtResult& c2);

struct QuaternionOptions {
  DftOptions dft;
  /// Leave out the final sign gate; the result is then the Fourier transform
  /// of the dihedral group of order 4n up to phase.
  bool omit_sign_gate = false;
};

/// Layout (2, 2n): F_2n on the second register, W on the first when the
/// second holds 0 or n, then -1 on states with j = 1, i > n, i odd.
GroupFtResult synth_quaternion_ft(long long n, const QuaternionOptions& options = {});

/// Layout (q, d, m/d) with dimension-1 registers dropped. Runs the up-to-phase
/// verification and stores the extracted phases.
GroupFtResult synth_metacyclic_ft(long long q, long long m, long long r, long long s,
                                  const DftOptions& options = {});

/// 2n+1 qubits (lambda, a_1, c_1, ..., a_n, c_n): W on lambda, then for each
/// level W on a_i while lambda = 0 and W on c_i.
GroupFtResult synth_en_ft(long long n);

/// Dispatches on the spec family. Factors of a product are phase-corrected
/// first, so products are always exact.
GroupFtResult synth_group_ft(const GroupSpec& spec, const DftOptions& options = {});

/// Appends one predicate phase per row with phase conj(phi_i) != 1. Exact
/// inputs are returned unchanged; throws ConstraintError if phases are missing.
GroupFtResult apply_phase_correction(const GroupFtResult& res);

struct Comparison {
  bool passed = false;
  double max_deviation = 0.0;
  std::optional<PhaseVector> phases;
};

/// Exact or up-to-row-phase comparison of two same-shape matrices. The
/// deviation for up-to-phase comparisons is measured after removing the
/// extracted phases, or against F itself when none exist.
Comparison compare_matrices(const ComplexMatrix& m, const ComplexMatrix& f, double tol,
                            Equivalence mode);

struct VerificationReport {
  /// Group or transform spec the circuit was checked against.
  std::string spec;
  std::size_t dimension = 0;
  Equivalence equivalence = Equivalence::kExact;
  bool passed = false;
  double max_deviation = 0.0;
  std::optional<PhaseVector> phases;
  GateCountReport gate_counts;

  /// JSON text.
  std::string to_json() const;
};

/// Simulates the circuit and compares with the oracle in the result's mode.
/// Throws ShapeError on a dimension mismatch.
VerificationReport verify(const GroupFtResult& res, double tol = kDefaultTolerance);

/// Checks `circuit` against `oracle` in the given mode.
VerificationReport verify_circuit(const Circuit& circuit, const ComplexMatrix& oracle,
                                  std::string spec, double tol, Equivalence mode);

std::string gate_count_json(const GateCountReport& r);

}  // namespace kronq
