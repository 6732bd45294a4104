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

// Irreducible unitary representations, matrix coefficients, encodings, and
// Fourier-oracle matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "kronq/group.hpp"
#include "kronq/matrix.hpp"

namespace kronq {

struct Representation {
  std::string name;
  std::size_t degree = 1;
  /// One degree x degree matrix per group element label.
  std::vector<ComplexMatrix> matrices;

  const ComplexMatrix& matrix_at(std::size_t g) const { return matrices.at(g); }
};

struct RepresentationSet {
  std::vector<Representation> members;

  std::size_t size() const { return members.size(); }
  const Representation& operator[](std::size_t i) const { return members[i]; }
};

/// The family's complete set of inequivalent irreducible unitary
/// representations:
///   cyclic n:      zeta^i(a^j) = conj(w_n)^(ij)
///   product:       rho1 (x)_R rho2 for every pair, first factor major
///   quaternionic:  rho1..rho4, then sigma^1..sigma^(n-1)
///   metacyclic:    q*d one-dimensional rho^(i,j) (j major), then one induced
///                  representation per size-q orbit of i -> i r on Z_m,
///                  represented by the orbit's smallest element
///   en:            4^n one-dimensional rho_(x,z), then sigma of degree 2^n
RepresentationSet irreps(const FiniteGroup& g);

/// Zero-based coefficient label (representation, row, column).
struct CoeffLabel {
  std::size_t rep = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  friend bool operator==(const CoeffLabel&, const CoeffLabel&) = default;
};

/// All labels, representation-major then row then column.
std::vector<CoeffLabel> coefficient_labels(const RepresentationSet& reps);

/// sqrt(d / |G|) * rho_kl(g). Throws ShapeError for out-of-range indices.
Complex coefficient(const FiniteGroup& g, const RepresentationSet& reps, CoeffLabel b,
                    std::size_t element);

/// Time and frequency encodings. `freq[i]` is the index of
/// coefficient_labels(reps)[i].
struct EncodingMap {
  std::vector<std::size_t> time;
  std::vector<std::size_t> freq;
};

/// Throws ShapeError unless both maps are bijections onto 0..|G|-1.
void check_encoding(const EncodingMap& e, std::size_t order);

/// Encoding of a product group from factor encodings: time (g1, g2) ->
/// |G2| t1(g1) + t2(g2), and coefficient (rho1 x rho2, k1 d2 + k2, l1 d2 + l2)
/// -> |G2| f1(rho1, k1, l1) + f2(rho2, k2, l2). Representations are ordered
/// as in irreps of the product.
EncodingMap product_encoding(const RepresentationSet& r1, const EncodingMap& e1,
                             const RepresentationSet& r2, const EncodingMap& e2);

/// The family's standard encoding for irreps(g).
EncodingMap standard_encoding(const FiniteGroup& g, const RepresentationSet& reps);

/// Entry [freq(b), time(g)] = conj(coefficient(b, g)).
ComplexMatrix fourier_oracle(const FiniteGroup& g, const RepresentationSet& reps,
                             const EncodingMap& e);

/// fourier_oracle with irreps and the standard encoding.
ComplexMatrix standard_oracle(const FiniteGroup& g);

struct RepresentationCheck {
  bool homomorphism = true;
  bool unitary = true;
  bool sum_of_squares = true;
  bool characters_orthonormal = true;
  double max_error = 0.0;

  bool ok() const { return homomorphism && unitary && sum_of_squares && characters_orthonormal; }
};

/// Homomorphism on every pair, unitarity at every element, sum of squared
/// degrees equal to |G|, and <chi_i, chi_j> = delta_ij.
RepresentationCheck check_representations(const FiniteGroup& g, const RepresentationSet& reps,
                                          double tol = kDefaultTolerance);

struct AdaptedBlock {
  std::vector<std::size_t> indices;  // rows (and columns) of the parent representation
  std::size_t subgroup_rep = 0;      // member of the subgroup's set
};

struct AdaptedReport {
  bool adapted = true;
  /// One partition per member of the parent set.
  std::vector<std::vector<AdaptedBlock>> partitions;
  std::string failure;
};

/// Splits each restricted representation into the connected components of
/// its support and matches every component against the subgroup's set.
/// Throws ConstraintError if `sub` is not a subgroup of `g`.
AdaptedReport check_adapted(const FiniteGroup& g, const RepresentationSet& reps,
                            const Subgroup& sub, const RepresentationSet& sub_reps,
                            double tol = kDefaultTolerance);

}  // namespace kronq
