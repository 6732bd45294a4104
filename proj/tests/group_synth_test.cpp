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

#include <gtest/gtest.h>

#include <json.hpp>

#include "kronq/errors.hpp"
#include "kronq/reference.hpp"
#include "kronq/tensor.hpp"
#include "kronq/transform.hpp"
#include "test_util.hpp"

namespace kronq {
namespace {

ComplexMatrix oracle_of(const GroupFtResult& r) {
  return fourier_oracle(r.group, r.reps, r.encoding);
}

// Rows of `m` matched one-to-one against rows of `f` up to a unit phase.
// Returns the row map, or an empty vector when no bijection exists.
std::vector<std::size_t> align_rows(const ComplexMatrix& m, const ComplexMatrix& f, double tol) {
  std::vector<std::size_t> map(m.rows(), m.rows());
  std::vector<bool> used(f.rows(), false);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < f.rows() && map[i] == m.rows(); ++j) {
      if (used[j]) continue;
      Complex ip = 0.0;
      for (std::size_t c = 0; c < m.cols(); ++c) ip += m(i, c) * std::conj(f(j, c));
      if (std::abs(std::abs(ip) - 1.0) <= tol) {
        map[i] = j;
        used[j] = true;
      }
    }
    if (map[i] == m.rows()) return {};
  }
  return map;
}

TEST(CyclicFt, MatchesDftForManyOrders) {
  for (long long n = 1; n <= 16; ++n) {
    const GroupFtResult r = synth_cyclic_ft(n);
    const VerificationReport v = verify(r);
    EXPECT_TRUE(v.passed) << n;
    EXPECT_EQ(v.equivalence, Equivalence::kExact);
    EXPECT_LE(max_abs_diff(simulate(r.circuit), testing::dft_formula(static_cast<std::size_t>(n))),
              1e-10);
  }
  EXPECT_EQ(synth_cyclic_ft(12).circuit.layout().dims(), (std::vector<std::size_t>{2, 2, 3}));
}

TEST(ProductFt, TwoByTwoIsWalsh) {
  const GroupFtResult r = synth_product_ft(synth_cyclic_ft(2), synth_cyclic_ft(2));
  EXPECT_LE(max_abs_diff(simulate(r.circuit), simulate(synth_walsh(2))), 1e-14);
  EXPECT_TRUE(verify(r).passed);
  GroupFtResult w = synth_cyclic_ft(2);
  for (int i = 0; i < 3; ++i) w = synth_product_ft(w, synth_cyclic_ft(2));
  EXPECT_LE(max_abs_diff(simulate(w.circuit), walsh_matrix(4)), 1e-12);
  EXPECT_TRUE(verify(w).passed);
}

TEST(ProductFt, MatchesKronAndOracle) {
  const std::vector<std::pair<GroupFtResult, GroupFtResult>> pairs = [] {
    std::vector<std::pair<GroupFtResult, GroupFtResult>> out;
    out.emplace_back(synth_cyclic_ft(2), synth_cyclic_ft(3));
    out.emplace_back(synth_quaternion_ft(2), synth_cyclic_ft(3));
    out.emplace_back(synth_en_ft(1), apply_phase_correction(synth_metacyclic_ft(3, 7, 2, 0)));
    out.emplace_back(synth_cyclic_ft(5), synth_cyclic_ft(1));
    return out;
  }();
  for (const auto& [a, b] : pairs) {
    const GroupFtResult p = synth_product_ft(a, b);
    EXPECT_LE(max_abs_diff(simulate(p.circuit),
                           kron(Side::kRight, simulate(a.circuit), simulate(b.circuit))),
              1e-12);
    const VerificationReport v = verify(p);
    EXPECT_TRUE(v.passed) << v.spec << " " << v.max_deviation;
  }
  const GroupFtResult five = synth_cyclic_ft(5);
  EXPECT_EQ(simulate(synth_product_ft(five, synth_cyclic_ft(1)).circuit), simulate(five.circuit));
}

TEST(ProductFt, RejectsUpToPhaseFactors) {
  EXPECT_THROW(synth_product_ft(synth_metacyclic_ft(3, 7, 2, 0), synth_cyclic_ft(2)),
               ConstraintError);
}

TEST(QuaternionFt, ExactForEvenOrders) {
  for (long long n : {2, 4, 6, 8}) {
    const GroupFtResult r = synth_quaternion_ft(n);
    const VerificationReport v = verify(r);
    EXPECT_TRUE(v.passed) << n << " " << v.max_deviation;
    EXPECT_EQ(v.equivalence, Equivalence::kExact);
    const GateCountReport c = gate_count(r.circuit);
    EXPECT_EQ(c.single_unitary, 1u);
    EXPECT_EQ(c.value_controlled, 2u);
    EXPECT_EQ(c.predicate_phase, 1u);
  }
  EXPECT_THROW(synth_quaternion_ft(3), ConstraintError);
}

TEST(QuaternionFt, IdentityColumn) {
  const long long n = 4;
  const GroupFtResult r = synth_quaternion_ft(n);
  const ComplexMatrix m = simulate(r.circuit);
  const auto labels = coefficient_labels(r.reps);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const CoeffLabel b = labels[i];
    const double d = static_cast<double>(r.reps[b.rep].degree);
    const double want = b.k == b.l ? std::sqrt(d / (4.0 * n)) : 0.0;
    EXPECT_NEAR(std::abs(m(r.encoding.freq[i], 0) - want), 0.0, 1e-12);
  }
}

TEST(QuaternionFt, InlinedDftMatches) {
  QuaternionOptions options;
  options.dft.inline_factors = {2, 2, 2};
  const GroupFtResult r = synth_quaternion_ft(4, options);
  EXPECT_EQ(r.circuit.layout().dims(), (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_TRUE(verify(r).passed);
  EXPECT_LE(max_abs_diff(simulate(r.circuit), simulate(synth_quaternion_ft(4).circuit)), 1e-12);
}

TEST(QuaternionFt, WithoutSignGateIsDihedral) {
  for (long long n : {2, 4, 6}) {
    QuaternionOptions options;
    options.omit_sign_gate = true;
    const GroupFtResult r = synth_quaternion_ft(n, options);
    EXPECT_EQ(r.group.spec().to_string(),
              "metacyclic 2 " + std::to_string(2 * n) + " " + std::to_string(2 * n - 1) + " 0");
    const VerificationReport v = verify(r);
    EXPECT_TRUE(v.passed) << n;
    EXPECT_EQ(v.equivalence, Equivalence::kUpToPhase);
    ASSERT_TRUE(r.phases.has_value());
    EXPECT_TRUE(apply_phase_correction(r).circuit.size() >= r.circuit.size());
    EXPECT_TRUE(verify(apply_phase_correction(r)).passed);
  }
  for (long long n : {2, 4}) {
    QuaternionOptions options;
    options.omit_sign_gate = true;
    const GroupFtResult r = synth_quaternion_ft(n, options);
    EXPECT_LE(max_abs_diff(simulate(r.circuit), oracle_of(r)), 1e-10) << n;
  }
}

TEST(MetacyclicFt, UpToPhaseWithStructuredPhases) {
  for (auto p : std::vector<std::array<long long, 4>>{
           {2, 5, 4, 0}, {3, 7, 2, 0}, {2, 8, 7, 4}, {2, 8, 3, 0}, {3, 9, 4, 3}, {2, 6, 5, 3}}) {
    const GroupFtResult r = synth_metacyclic_ft(p[0], p[1], p[2], p[3]);
    const std::string name = r.group.spec().to_string();
    EXPECT_EQ(r.equivalence, Equivalence::kUpToPhase);
    ASSERT_TRUE(r.phases.has_value()) << name;
    const VerificationReport v = verify(r);
    EXPECT_TRUE(v.passed) << name;

    const auto labels = coefficient_labels(r.reps);
    const auto m = static_cast<long long>(p[1]);
    std::size_t ones = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Complex phi = (*r.phases)[r.encoding.freq[i]];
      EXPECT_NEAR(std::abs(phi), 1.0, 1e-12);
      if (r.reps[labels[i].rep].degree == 1) {
        EXPECT_NEAR(std::abs(phi - 1.0), 0.0, 1e-10) << name;
        ++ones;
      } else {
        EXPECT_NEAR(std::abs(std::pow(phi, static_cast<double>(m)) - 1.0), 0.0, 1e-9) << name;
      }
    }
    long long d = std::gcd(r.group.params()[2] - 1, m);
    EXPECT_EQ(ones, static_cast<std::size_t>(p[0] * d)) << name;

    const GroupFtResult fixed = apply_phase_correction(r);
    EXPECT_EQ(fixed.equivalence, Equivalence::kExact);
    EXPECT_LE(max_abs_diff(simulate(fixed.circuit), oracle_of(r)), 1e-10) << name;
    EXPECT_TRUE(is_unitary(simulate(fixed.circuit), 1e-10));
  }
}

TEST(MetacyclicFt, NotExactWhenInducedPhasesArePresent) {
  GroupFtResult r = synth_metacyclic_ft(2, 8, 7, 4);
  r.equivalence = Equivalence::kExact;
  const VerificationReport v = verify(r);
  EXPECT_FALSE(v.passed);
  EXPECT_GT(v.max_deviation, 0.1);
}

TEST(MetacyclicFt, LayoutDropsUnitRegisters) {
  EXPECT_EQ(synth_metacyclic_ft(3, 7, 2, 0).circuit.layout().dims(), (std::vector<std::size_t>{3, 7}));
  EXPECT_EQ(synth_metacyclic_ft(2, 8, 7, 4).circuit.layout().dims(),
            (std::vector<std::size_t>{2, 2, 4}));
  // Abelian case: r = 1 gives d = m and the m/d register disappears.
  const GroupFtResult abelian = synth_metacyclic_ft(3, 4, 1, 0);
  EXPECT_EQ(abelian.circuit.layout().dims(), (std::vector<std::size_t>{3, 4}));
  EXPECT_TRUE(verify(abelian).passed);
}

TEST(MetacyclicFt, InlinedDftMatches) {
  DftOptions options{{2, 4}};
  const GroupFtResult r = synth_metacyclic_ft(2, 8, 7, 4, options);
  EXPECT_TRUE(verify(r).passed);
  EXPECT_EQ(gate_count(r.circuit).single_unitary, 2u);
}

TEST(MetacyclicFt, QuaternionPresentationMatchesQuaternionOracle) {
  for (long long n : {2, 4, 6}) {
    const GroupFtResult meta = synth_metacyclic_ft(2, 2 * n, 2 * n - 1, n);
    const ComplexMatrix m = simulate(meta.circuit);
    const ComplexMatrix q = standard_oracle(make_quaternionic(n));
    // Both families label elements b^j a^i and c^j r^i by 2nj + i, so only
    // the frequency rows need aligning.
    const auto map = align_rows(m, q, 1e-10);
    ASSERT_EQ(map.size(), m.rows()) << n;
    ComplexMatrix aligned(q.rows(), q.cols());
    for (std::size_t i = 0; i < map.size(); ++i) {
      for (std::size_t c = 0; c < q.cols(); ++c) aligned(i, c) = q(map[i], c);
    }
    EXPECT_TRUE(equal_up_to_diag_phase(m, aligned).has_value()) << n;
    if (n == 4) {
      EXPECT_TRUE(equal_up_to_diag_phase(m, q).has_value());
    }
  }
}

TEST(EnFt, ExactThroughRankThree) {
  for (long long n = 0; n <= 3; ++n) {
    const GroupFtResult r = synth_en_ft(n);
    const VerificationReport v = verify(r);
    EXPECT_TRUE(v.passed) << n << " " << v.max_deviation;
    EXPECT_EQ(v.dimension, std::size_t{2} << (2 * n));
    const GateCountReport c = gate_count(r.circuit);
    EXPECT_EQ(c.single_unitary + c.value_controlled, static_cast<std::size_t>(2 * n + 1));
    EXPECT_EQ(c.value_controlled, static_cast<std::size_t>(n));
  }
  EXPECT_LE(max_abs_diff(simulate(synth_en_ft(0).circuit), hadamard()), 1e-15);
}

TEST(EnFt, LevelRecursion) {
  for (long long n = 1; n <= 3; ++n) {
    const Circuit prev = synth_en_ft(n - 1).circuit;
    Circuit c(qubits(static_cast<std::size_t>(2 * n + 1)));
    c.append_embedded(prev, 0);
    const std::size_t a = static_cast<std::size_t>(2 * n - 1);
    c.append(ValueControlled{{{reg(0), 0}}, reg(a), hadamard()});
    c.append(SingleUnitary{reg(a + 1), hadamard()});
    EXPECT_LE(max_abs_diff(simulate(c), simulate(synth_en_ft(n).circuit)), 1e-14);
  }
}

TEST(GroupFt, DispatchAndPhaseCorrectionNoOp) {
  const GroupFtResult e = synth_group_ft(parse_group_spec(std::string_view("en 2")));
  EXPECT_EQ(apply_phase_correction(e).circuit, e.circuit);
  const GroupFtResult p =
      synth_group_ft(parse_group_spec(std::string_view("product metacyclic 2 5 4 0 cyclic 2")));
  EXPECT_EQ(p.equivalence, Equivalence::kExact);
  EXPECT_TRUE(verify(p).passed);
  GroupFtResult bad = synth_metacyclic_ft(3, 7, 2, 0);
  bad.phases.reset();
  EXPECT_THROW(apply_phase_correction(bad), ConstraintError);
}

TEST(Verify, CorruptedGateFails) {
  GroupFtResult r = synth_quaternion_ft(2);
  Circuit broken(r.circuit.layout());
  for (std::size_t i = 0; i + 1 < r.circuit.size(); ++i) broken.append(r.circuit.gates()[i]);
  r.circuit = broken;
  const VerificationReport v = verify(r);
  EXPECT_FALSE(v.passed);
  EXPECT_GT(v.max_deviation, 0.1);
}

TEST(Verify, DimensionMismatchThrows) {
  EXPECT_THROW(verify_circuit(synth_walsh(2), ComplexMatrix::identity(8), "x", 1e-10,
                              Equivalence::kExact),
               ShapeError);
}

TEST(Verify, ReportJson) {
  const VerificationReport v = verify(synth_metacyclic_ft(3, 7, 2, 0));
  const auto j = nlohmann::json::parse(v.to_json());
  EXPECT_EQ(j["spec"], "metacyclic 3 7 2 0");
  EXPECT_EQ(j["dimension"], 21);
  EXPECT_EQ(j["equivalence"], "up_to_phase");
  EXPECT_EQ(j["passed"], true);
  ASSERT_EQ(j["phases"].size(), 21u);
  EXPECT_TRUE(j["gate_counts"].contains("controlled_op_estimate"));
  const auto exact = nlohmann::json::parse(verify(synth_en_ft(1)).to_json());
  EXPECT_TRUE(exact["phases"].is_null());
}

}  // namespace
}  // namespace kronq
