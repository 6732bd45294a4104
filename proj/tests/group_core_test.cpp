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

#include "kronq/group.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <map>

#include "kronq/errors.hpp"
#include "kronq/representation.hpp"
#include "kronq/tensor.hpp"
#include "test_util.hpp"

namespace kronq {
namespace {

using testing::omega;

void expect_constraint(const std::function<void()>& fn, const std::string& fragment) {
  try {
    fn();
    FAIL() << "expected ConstraintError mentioning '" << fragment << "'";
  } catch (const ConstraintError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

std::vector<GroupSpec> small_groups() {
  std::vector<GroupSpec> out;
  for (const char* text :
       {"cyclic 1", "cyclic 2", "cyclic 7", "cyclic 12", "cyclic 16", "product cyclic 2 cyclic 3",
        "product cyclic 2 cyclic 2", "product quaternionic 2 cyclic 3", "quaternionic 2",
        "quaternionic 4", "quaternionic 6", "metacyclic 2 5 4 0", "metacyclic 3 7 2 0",
        "metacyclic 2 8 7 4", "metacyclic 2 8 3 0", "metacyclic 3 9 4 3", "en 0", "en 1", "en 2",
        "en 3", "product en 1 metacyclic 3 7 2 0"}) {
    out.push_back(parse_group_spec(std::string_view(text)));
  }
  return out;
}

TEST(GroupSpec, ParsesAndPrints) {
  const GroupSpec p = parse_group_spec(std::string_view("product cyclic 2 cyclic 3"));
  EXPECT_EQ(p.family, GroupFamily::kProduct);
  ASSERT_EQ(p.factors.size(), 2u);
  EXPECT_EQ(p.factors[1].params, std::vector<long long>{3});
  for (const GroupSpec& s : small_groups()) EXPECT_EQ(parse_group_spec(std::string_view(s.to_string())), s);
  EXPECT_EQ(parse_group_spec(std::vector<std::string>{"metacyclic", "3", "7", "2", "0"}).params,
            (std::vector<long long>{3, 7, 2, 0}));
}

TEST(GroupSpec, RejectsMalformedText) {
  for (const char* bad : {"", "cyclic", "cyclic x", "cyclic 2 3", "dihedral 4", "metacyclic 3 7 2",
                          "product cyclic 2", "en -"}) {
    EXPECT_THROW(parse_group_spec(std::string_view(bad)), FormatError) << bad;
  }
}

TEST(FiniteGroup, AxiomsAndOrders) {
  const std::map<std::string, std::size_t> orders{{"cyclic 12", 12}, {"quaternionic 4", 16},
                                                  {"metacyclic 3 7 2 0", 21},
                                                  {"metacyclic 2 5 4 0", 10}, {"en 2", 32},
                                                  {"product cyclic 2 cyclic 3", 6}};
  for (const GroupSpec& s : small_groups()) {
    const FiniteGroup g = make_group(s);
    EXPECT_TRUE(check_group_axioms(g)) << s.to_string();
    EXPECT_EQ(g.identity(), 0u);
    EXPECT_FALSE(g.element_name(0).empty());
    if (g.family() == GroupFamily::kCyclic || g.family() == GroupFamily::kMetacyclic) {
      EXPECT_EQ(g.element_name(0), "e");
    }
    const auto it = orders.find(s.to_string());
    if (it != orders.end()) {
      EXPECT_EQ(g.order(), it->second);
    }
  }
  EXPECT_EQ(make_cyclic(1).order(), 1u);
}

TEST(FiniteGroup, QuaternionRelations) {
  for (long long n : {2, 4, 6}) {
    const FiniteGroup g = make_quaternionic(n);
    const std::size_t r = 1, c = static_cast<std::size_t>(2 * n);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(4 * n));
    EXPECT_EQ(g.element_order(r), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(g.element_order(c), 4u);
    EXPECT_EQ(g.power(c, 2), g.power(r, static_cast<std::size_t>(n)));
    EXPECT_EQ(g.multiply(c, r), g.multiply(g.power(r, static_cast<std::size_t>(2 * n - 1)), c));
    EXPECT_EQ(g.element_name(c + 3), "c r^3");
  }
}

TEST(FiniteGroup, MetacyclicRelations) {
  const FiniteGroup g = make_metacyclic(3, 7, 2, 0);
  const std::size_t a = 1, b = 7;
  EXPECT_EQ(g.multiply(g.multiply(g.inverse(b), a), b), g.power(a, 2));
  EXPECT_EQ(g.power(b, 3), g.identity());
  EXPECT_EQ(g.element_name(b + 2), "b^1 a^2");
  const FiniteGroup q4 = make_metacyclic(2, 8, 7, 4);
  EXPECT_EQ(q4.power(8, 2), q4.power(1, 4));
  EXPECT_EQ(make_metacyclic(2, 5, -1, 0).params(), (std::vector<long long>{2, 5, 4, 0}));
}

TEST(FiniteGroup, ConstraintViolationsNameTheRelation) {
  expect_constraint([] { make_quaternionic(3); }, "even");
  expect_constraint([] { make_metacyclic(4, 7, 2, 0); }, "prime");
  expect_constraint([] { make_metacyclic(2, 8, 2, 0); }, "gcd(m, r) = 1");
  expect_constraint([] { make_metacyclic(2, 8, 5, 1); }, "m | s(r - 1)");
  expect_constraint([] { make_metacyclic(3, 7, 3, 0); }, "r^q = 1");
  expect_constraint([] { make_en(-1); }, "en rank");
  expect_constraint([] { make_cyclic(0); }, "at least 1");
  expect_constraint([] { make_cyclic(100000); }, "");
}

std::vector<std::size_t> order_histogram(const FiniteGroup& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (std::size_t x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

TEST(FiniteGroup, E1IsDihedralOfOrderEight) {
  const FiniteGroup e1 = make_en(1);
  ASSERT_EQ(e1.order(), 8u);
  const auto h = order_histogram(e1);
  EXPECT_EQ(h[1], 1u);
  EXPECT_EQ(h[2], 5u);
  EXPECT_EQ(h[4], 2u);
  EXPECT_EQ(order_histogram(make_quaternionic(2))[2], 1u);
}

// (-1)^lambda X^{a_1} Z^{c_1} (x) ... (x) X^{a_n} Z^{c_n} for label bits lambda a_1 c_1 ... a_n c_n.
ComplexMatrix pauli_word(std::size_t x, std::size_t n) {
  const ComplexMatrix xm{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix zm{{1.0, 0.0}, {0.0, -1.0}};
  ComplexMatrix m(1, 1, {((x >> (2 * n)) & 1) ? -1.0 : 1.0});
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t shift = 2 * (n - i);
    ComplexMatrix p = ComplexMatrix::identity(2);
    if ((x >> (shift + 1)) & 1) p = p * xm;
    if ((x >> shift) & 1) p = p * zm;
    m = testing::outer_kron(m, p);
  }
  return m;
}

TEST(FiniteGroup, EnMultiplicationMatchesPauliProducts) {
  for (long long n = 0; n <= 2; ++n) {
    const FiniteGroup g = make_en(n);
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t y = 0; y < g.order(); ++y) {
        EXPECT_EQ(pauli_word(g.multiply(x, y), nn), pauli_word(x, nn) * pauli_word(y, nn));
      }
    }
  }
}

TEST(Subgroups, CyclicAndEnEmbeddings) {
  const FiniteGroup q = make_quaternionic(2);
  const Subgroup h = cyclic_subgroup(q, 1);
  EXPECT_EQ(h.group->order(), 4u);
  EXPECT_EQ(h.embedding, (std::vector<std::size_t>{0, 1, 2, 3}));
  const Subgroup e = en_subgroup(make_en(2));
  EXPECT_EQ(e.group->order(), 8u);
  EXPECT_THROW(check_subgroup(q, make_cyclic(2), {0, 4}), ConstraintError);
  EXPECT_THROW(en_subgroup(make_en(0)), ConstraintError);
}

TEST(Irreps, CountsAndDegrees) {
  EXPECT_EQ(irreps(make_cyclic(9)).size(), 9u);
  const RepresentationSet q2 = irreps(make_quaternionic(2));
  ASSERT_EQ(q2.size(), 5u);
  EXPECT_EQ(q2[4].degree, 2u);
  const RepresentationSet m21 = irreps(make_metacyclic(3, 7, 2, 0));
  ASSERT_EQ(m21.size(), 5u);
  EXPECT_EQ(m21[2].degree, 1u);
  EXPECT_EQ(m21[3].degree, 3u);
  EXPECT_EQ(m21[3].name, "zetabar^1");
  EXPECT_EQ(m21[4].name, "zetabar^3");
  const RepresentationSet e2 = irreps(make_en(2));
  ASSERT_EQ(e2.size(), 17u);
  EXPECT_EQ(e2[16].degree, 4u);
}

TEST(Irreps, AllFamiliesPassRepresentationChecks) {
  for (const GroupSpec& s : small_groups()) {
    const FiniteGroup g = make_group(s);
    const RepresentationSet reps = irreps(g);
    const RepresentationCheck check = check_representations(g, reps);
    EXPECT_TRUE(check.ok()) << s.to_string() << " error " << check.max_error;
    EXPECT_TRUE(is_unitary(standard_oracle(g), 1e-10)) << s.to_string();
  }
}

TEST(Irreps, ChecksDetectBrokenSets) {
  const FiniteGroup g = make_cyclic(4);
  RepresentationSet reps = irreps(g);
  reps.members.pop_back();
  EXPECT_FALSE(check_representations(g, reps).sum_of_squares);
  reps = irreps(g);
  reps.members[1] = reps.members[2];
  EXPECT_FALSE(check_representations(g, reps).characters_orthonormal);
  reps = irreps(g);
  reps.members[1].matrices[1] = ComplexMatrix(1, 1, {Complex(0, -1)});
  reps.members[1].matrices[2] = ComplexMatrix(1, 1, {Complex(1, 0)});
  EXPECT_FALSE(check_representations(g, reps).homomorphism);
}

TEST(Irreps, MetacyclicOneDimensionalConsistency) {
  for (auto p : std::vector<std::array<long long, 4>>{{3, 7, 2, 0}, {2, 8, 7, 4}, {3, 9, 4, 3}}) {
    const FiniteGroup g = make_metacyclic(p[0], p[1], p[2], p[3]);
    const auto q = static_cast<std::size_t>(p[0]);
    const auto m = static_cast<std::size_t>(p[1]);
    const std::size_t a = 1, b = m;
    for (const Representation& rho : irreps(g).members) {
      if (rho.degree != 1) continue;
      const Complex ra = rho.matrix_at(a)(0, 0);
      const Complex rb = rho.matrix_at(b)(0, 0);
      EXPECT_NEAR(std::abs(std::pow(rb, static_cast<double>(q)) -
                           rho.matrix_at(g.power(a, static_cast<std::size_t>(g.params()[3])))(0, 0)),
                  0.0, 1e-12);
      EXPECT_NEAR(std::abs(rho.matrix_at(g.power(a, static_cast<std::size_t>(g.params()[2])))(0, 0) - ra),
                  0.0, 1e-12);
    }
  }
}

TEST(Irreps, EnSigmaEntriesFollowPauliFormula) {
  for (long long n = 0; n <= 3; ++n) {
    const FiniteGroup g = make_en(n);
    const auto nn = static_cast<std::size_t>(n);
    const RepresentationSet reps = irreps(g);
    const Representation& sigma = reps.members.back();
    for (std::size_t x = 0; x < g.order(); ++x) {
      const ComplexMatrix& m = sigma.matrix_at(x);
      for (std::size_t k = 0; k < m.rows(); ++k) {
        for (std::size_t l = 0; l < m.cols(); ++l) {
          // (-1)^lambda * prod_i (-1)^{l_i c_i} [k_i xor l_i == a_i]
          double want = ((x >> (2 * nn)) & 1) ? -1.0 : 1.0;
          for (std::size_t i = 0; i < nn; ++i) {
            const std::size_t ai = (x >> (2 * i + 1)) & 1, ci = (x >> (2 * i)) & 1;
            const std::size_t ki = (k >> i) & 1, li = (l >> i) & 1;
            if ((ki ^ li) != ai) want = 0.0;
            if (li & ci) want = -want;
          }
          EXPECT_EQ(m(k, l), Complex(want)) << "n=" << n << " x=" << x;
        }
      }
    }
  }
}

TEST(Coefficients, NormalizationAndCyclicClosedForm) {
  const FiniteGroup z = make_cyclic(6);
  const RepresentationSet reps = irreps(z);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const Complex want = std::conj(omega(static_cast<long long>(i * j), 6)) / std::sqrt(6.0);
      EXPECT_NEAR(std::abs(coefficient(z, reps, {i, 0, 0}, j) - want), 0.0, 1e-15);
    }
  }
  const FiniteGroup q = make_quaternionic(2);
  const RepresentationSet qr = irreps(q);
  EXPECT_NEAR(std::abs(coefficient(q, qr, {4, 1, 1}, 0) - std::sqrt(2.0 / 8.0)), 0.0, 1e-15);
  EXPECT_EQ(coefficient(q, qr, {4, 0, 1}, 0), Complex(0.0));
  EXPECT_NEAR(std::abs(coefficient(q, qr, {4, 0, 0}, 1) - 0.5 * Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(coefficient(q, qr, {4, 1, 1}, 1) - 0.5 * Complex(0, 1)), 0.0, 1e-15);
  EXPECT_THROW(coefficient(q, qr, {4, 2, 0}, 0), ShapeError);
  EXPECT_THROW(coefficient(q, qr, {0, 0, 0}, 8), ShapeError);
}

TEST(Oracle, CyclicIsTheDft) {
  for (long long n : {1, 2, 5, 8, 12}) {
    const ComplexMatrix f = standard_oracle(make_cyclic(n));
    EXPECT_LE(max_abs_diff(f, testing::dft_formula(static_cast<std::size_t>(n))), 1e-14);
  }
}

TEST(Oracle, EntriesAreConjugatedCoefficients) {
  const FiniteGroup g = make_metacyclic(3, 7, 2, 0);
  const RepresentationSet reps = irreps(g);
  const EncodingMap e = standard_encoding(g, reps);
  const ComplexMatrix f = fourier_oracle(g, reps, e);
  const auto labels = coefficient_labels(reps);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      EXPECT_EQ(f(e.freq[i], e.time[x]), std::conj(coefficient(g, reps, labels[i], x)));
    }
  }
}

TEST(Oracle, RejectsBadEncodings) {
  const FiniteGroup g = make_cyclic(3);
  const RepresentationSet reps = irreps(g);
  EXPECT_THROW(fourier_oracle(g, reps, {{0, 1, 1}, {0, 1, 2}}), ShapeError);
  EXPECT_THROW(fourier_oracle(g, reps, {{0, 1}, {0, 1}}), ShapeError);
  EXPECT_THROW(fourier_oracle(g, reps, {{0, 1, 2}, {0, 1, 3}}), ShapeError);
}

TEST(Encoding, FamilyLayouts) {
  const FiniteGroup q = make_quaternionic(4);
  const RepresentationSet qr = irreps(q);
  const EncodingMap qe = standard_encoding(q, qr);
  for (std::size_t x = 0; x < q.order(); ++x) EXPECT_EQ(qe.time[x], x);
  // rho1, rho2, rho3, rho4 land on 0, 2n, n, 3n; sigma^1 on 1, 7, 9, 15.
  EXPECT_EQ(std::vector<std::size_t>(qe.freq.begin(), qe.freq.begin() + 8),
            (std::vector<std::size_t>{0, 8, 4, 12, 1, 15, 9, 7}));

  const FiniteGroup m = make_metacyclic(3, 7, 2, 0);
  const EncodingMap me = standard_encoding(m, irreps(m));
  // One-dimensional rho^(0,j) at 7j; zetabar^1 (k, l) at 7((k - l) mod 3) + 2^l mod 7.
  EXPECT_EQ(std::vector<std::size_t>(me.freq.begin(), me.freq.begin() + 6),
            (std::vector<std::size_t>{0, 7, 14, 1, 16, 11}));

  const FiniteGroup e = make_en(1);
  const EncodingMap ee = standard_encoding(e, irreps(e));
  EXPECT_EQ(ee.freq, (std::vector<std::size_t>{0, 1, 2, 3, 4, 7, 6, 5}));
}

TEST(Encoding, ProductInterleavesFactors) {
  const FiniteGroup g = make_product(make_cyclic(2), make_cyclic(3));
  const RepresentationSet reps = irreps(g);
  const EncodingMap e = standard_encoding(g, reps);
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(e.time[x], x);
  EXPECT_EQ(e.freq, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_LE(max_abs_diff(fourier_oracle(g, reps, e),
                         kron(Side::kRight, testing::dft_formula(2), testing::dft_formula(3))),
            1e-14);
}

TEST(Adapted, QuaternionOverRotations) {
  for (long long n : {2, 4}) {
    const FiniteGroup g = make_quaternionic(n);
    const RepresentationSet reps = irreps(g);
    const Subgroup h = cyclic_subgroup(g, 1);
    const AdaptedReport report = check_adapted(g, reps, h, irreps(*h.group));
    ASSERT_TRUE(report.adapted) << report.failure;
    for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
      const auto& blocks = report.partitions[3 + i];
      ASSERT_EQ(blocks.size(), 2u);
      EXPECT_EQ(blocks[0].indices, std::vector<std::size_t>{0});
      EXPECT_EQ(blocks[0].subgroup_rep, i);
      EXPECT_EQ(blocks[1].subgroup_rep, static_cast<std::size_t>(2 * n) - i);
    }
  }
}

TEST(Adapted, MetacyclicOverNormalCyclic) {
  for (auto p : std::vector<std::array<long long, 4>>{{2, 5, 4, 0}, {3, 7, 2, 0}}) {
    const FiniteGroup g = make_metacyclic(p[0], p[1], p[2], p[3]);
    const RepresentationSet reps = irreps(g);
    const Subgroup h = cyclic_subgroup(g, 1);
    const AdaptedReport report = check_adapted(g, reps, h, irreps(*h.group));
    ASSERT_TRUE(report.adapted) << report.failure;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      if (reps[t].degree == 1) continue;
      const auto& blocks = report.partitions[t];
      ASSERT_EQ(blocks.size(), reps[t].degree);
      const auto i = std::stoll(reps[t].name.substr(reps[t].name.find('^') + 1));
      long long rl = 1;
      for (std::size_t l = 0; l < blocks.size(); ++l) {
        EXPECT_EQ(blocks[l].indices, std::vector<std::size_t>{l});
        EXPECT_EQ(static_cast<long long>(blocks[l].subgroup_rep), (i * rl) % p[1]);
        rl = rl * p[2] % p[1];
      }
    }
  }
}

TEST(Adapted, EnOverPreviousLevel) {
  for (long long n = 1; n <= 3; ++n) {
    const FiniteGroup g = make_en(n);
    const RepresentationSet reps = irreps(g);
    const Subgroup h = en_subgroup(g);
    const RepresentationSet sub = irreps(*h.group);
    const AdaptedReport report = check_adapted(g, reps, h, sub);
    ASSERT_TRUE(report.adapted) << report.failure;
    for (std::size_t t = 0; t + 1 < reps.size(); ++t) {
      ASSERT_EQ(report.partitions[t].size(), 1u);
      EXPECT_EQ(report.partitions[t][0].subgroup_rep, t >> 2);
    }
    const auto& sigma_blocks = report.partitions.back();
    ASSERT_EQ(sigma_blocks.size(), 2u);
    const std::size_t half = std::size_t{1} << (n - 1);
    for (std::size_t b = 0; b < 2; ++b) {
      EXPECT_EQ(sigma_blocks[b].subgroup_rep, sub.size() - 1);
      ASSERT_EQ(sigma_blocks[b].indices.size(), half);
      for (std::size_t j = 0; j < half; ++j) EXPECT_EQ(sigma_blocks[b].indices[j], 2 * j + b);
    }
  }
}

TEST(Adapted, ReportsNonAdaptedSets) {
  // Conjugating sigma^1 of Q_2 by a Hadamard mixes the two rotation characters.
  const FiniteGroup g = make_quaternionic(2);
  RepresentationSet reps = irreps(g);
  const ComplexMatrix h{{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}, {1 / std::sqrt(2.0), -1 / std::sqrt(2.0)}};
  for (auto& m : reps.members[4].matrices) m = h * m * h;
  const Subgroup sub = cyclic_subgroup(g, 1);
  const AdaptedReport report = check_adapted(g, reps, sub, irreps(*sub.group));
  EXPECT_FALSE(report.adapted);
  EXPECT_FALSE(report.failure.empty());
}

}  // namespace
}  // namespace kronq
