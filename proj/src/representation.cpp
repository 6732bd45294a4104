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

#include "kronq/representation.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

#include "kronq/errors.hpp"
#include "kronq/tensor.hpp"

namespace kronq {

namespace {

using ll = long long;

ll mod(ll a, ll m) {
  const ll r = a % m;
  return r < 0 ? r + m : r;
}

// conj(w_n)^k
Complex conj_root(ll k, ll n) { return root_of_unity(mod(-k, n), n); }

ComplexMatrix scalar_matrix(Complex z) { return ComplexMatrix(1, 1, {z}); }

ComplexMatrix matrix_power(const ComplexMatrix& m, std::size_t k) {
  ComplexMatrix out = ComplexMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

struct MetacyclicData {
  ll q, m, r, s, d;
  std::vector<ll> orbit_reps;
  std::vector<ll> rpow;  // r^l mod m for l < q
};

MetacyclicData metacyclic_data(const FiniteGroup& g) {
  const auto& p = g.params();
  MetacyclicData md{p[0], p[1], p[2], p[3], std::gcd(p[2] - 1, p[1]), {}, {}};
  if (md.d == 0) md.d = md.m;
  md.rpow.assign(static_cast<std::size_t>(md.q), 1);
  for (std::size_t l = 1; l < md.rpow.size(); ++l) md.rpow[l] = mod(md.rpow[l - 1] * md.r, md.m);
  std::vector<bool> seen(static_cast<std::size_t>(md.m), false);
  for (ll i = 0; i < md.m; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    if (mod(i * (md.r - 1), md.m) == 0) {
      seen[static_cast<std::size_t>(i)] = true;
      continue;
    }
    md.orbit_reps.push_back(i);
    for (ll l = 0; l < md.q; ++l) seen[static_cast<std::size_t>(mod(i * md.rpow[l], md.m))] = true;
  }
  return md;
}

Representation from_generators(std::string name, const FiniteGroup& g,
                               const std::function<ComplexMatrix(std::size_t)>& at) {
  Representation rep{std::move(name), 0, {}};
  rep.matrices.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) rep.matrices.push_back(at(x));
  rep.degree = rep.matrices.front().rows();
  return rep;
}

RepresentationSet cyclic_irreps(const FiniteGroup& g) {
  const ll n = g.params()[0];
  RepresentationSet out;
  for (ll i = 0; i < n; ++i) {
    out.members.push_back(from_generators("zeta^" + std::to_string(i), g, [&](std::size_t j) {
      return scalar_matrix(conj_root(i * static_cast<ll>(j), n));
    }));
  }
  return out;
}

RepresentationSet product_irreps(const FiniteGroup& g) {
  const FiniteGroup& g1 = g.factor(0);
  const FiniteGroup& g2 = g.factor(1);
  const RepresentationSet r1 = irreps(g1);
  const RepresentationSet r2 = irreps(g2);
  const std::size_t n2 = g2.order();
  RepresentationSet out;
  for (const auto& a : r1.members) {
    for (const auto& b : r2.members) {
      out.members.push_back(from_generators(a.name + " x " + b.name, g, [&](std::size_t x) {
        return kron(Side::kRight, a.matrix_at(x / n2), b.matrix_at(x % n2));
      }));
    }
  }
  return out;
}

RepresentationSet quaternionic_irreps(const FiniteGroup& g) {
  const ll n = g.params()[0];
  const ll two_n = 2 * n;
  RepresentationSet out;
  // (value at r, value at c) for rho1..rho4.
  const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int t = 0; t < 4; ++t) {
    out.members.push_back(from_generators("rho" + std::to_string(t + 1), g, [&](std::size_t x) {
      const ll j = static_cast<ll>(x) / two_n;
      const ll k = static_cast<ll>(x) % two_n;
      const double v = (j % 2 == 1 && signs[t][1] < 0 ? -1.0 : 1.0) *
                       (k % 2 == 1 && signs[t][0] < 0 ? -1.0 : 1.0);
      return scalar_matrix(v);
    }));
  }
  for (ll i = 1; i < n; ++i) {
    const ComplexMatrix r{{conj_root(i, two_n), 0.0}, {0.0, root_of_unity(i, two_n)}};
    const ComplexMatrix c{{0.0, i % 2 == 0 ? 1.0 : -1.0}, {1.0, 0.0}};
    out.members.push_back(from_generators("sigma^" + std::to_string(i), g, [&](std::size_t x) {
      const auto j = static_cast<std::size_t>(static_cast<ll>(x) / two_n);
      const auto k = static_cast<std::size_t>(static_cast<ll>(x) % two_n);
      return matrix_power(c, j) * matrix_power(r, k);
    }));
  }
  return out;
}

RepresentationSet metacyclic_irreps(const FiniteGroup& g) {
  const MetacyclicData md = metacyclic_data(g);
  RepresentationSet out;
  for (ll j = 0; j < md.q; ++j) {
    for (ll i = 0; i < md.d; ++i) {
      // rho(a) = conj(w_d)^i, rho(b) = conj(w_q)^j conj(w_qd)^(is), over w_qd.
      const ll qd = md.q * md.d;
      out.members.push_back(from_generators(
          "rho^(" + std::to_string(i) + "," + std::to_string(j) + ")", g, [&](std::size_t x) {
            const ll bj = static_cast<ll>(x) / md.m;
            const ll ai = static_cast<ll>(x) % md.m;
            return scalar_matrix(conj_root(bj * (j * md.d + i * md.s) + md.q * i * ai, qd));
          }));
    }
  }
  const auto q = static_cast<std::size_t>(md.q);
  for (ll i : md.orbit_reps) {
    ComplexMatrix a(q, q);
    ComplexMatrix b(q, q);
    for (std::size_t l = 0; l < q; ++l) a(l, l) = conj_root(i * md.rpow[l], md.m);
    for (std::size_t l = 0; l + 1 < q; ++l) b(l + 1, l) = 1.0;
    b(0, q - 1) = conj_root(i * md.s, md.m);
    out.members.push_back(
        from_generators("zetabar^" + std::to_string(i), g, [&](std::size_t x) {
          const auto bj = static_cast<std::size_t>(static_cast<ll>(x) / md.m);
          const auto ai = static_cast<std::size_t>(static_cast<ll>(x) % md.m);
          return matrix_power(b, bj) * matrix_power(a, ai);
        }));
  }
  return out;
}

RepresentationSet en_irreps(const FiniteGroup& g) {
  const auto n = static_cast<std::size_t>(g.params()[0]);
  const std::size_t low = (std::size_t{1} << (2 * n)) - 1;
  RepresentationSet out;
  for (std::size_t t = 0; t <= low; ++t) {
    out.members.push_back(from_generators("rho_" + std::to_string(t), g, [&](std::size_t x) {
      return scalar_matrix(std::popcount(t & x & low) % 2 == 0 ? 1.0 : -1.0);
    }));
  }
  const ComplexMatrix paulis[4] = {ComplexMatrix::identity(2),
                                   ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
                                   ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
                                   ComplexMatrix{{0.0, -1.0}, {1.0, 0.0}}};
  out.members.push_back(from_generators("sigma", g, [&](std::size_t x) {
    ComplexMatrix m = scalar_matrix((x >> (2 * n)) & 1 ? -1.0 : 1.0);
    for (std::size_t i = n; i-- > 0;) m = kron(Side::kRight, m, paulis[(x >> (2 * i)) & 3]);
    return m;
  }));
  return out;
}

std::vector<std::size_t> offsets(const RepresentationSet& reps) {
  std::vector<std::size_t> out;
  std::size_t total = 0;
  for (const auto& r : reps.members) {
    out.push_back(total);
    total += r.degree * r.degree;
  }
  out.push_back(total);
  return out;
}

}  // namespace

RepresentationSet irreps(const FiniteGroup& g) {
  switch (g.family()) {
    case GroupFamily::kCyclic:
      return cyclic_irreps(g);
    case GroupFamily::kProduct:
      return product_irreps(g);
    case GroupFamily::kQuaternionic:
      return quaternionic_irreps(g);
    case GroupFamily::kMetacyclic:
      return metacyclic_irreps(g);
    case GroupFamily::kEn:
      return en_irreps(g);
  }
  throw ConstraintError("unsupported group family");
}

std::vector<CoeffLabel> coefficient_labels(const RepresentationSet& reps) {
  std::vector<CoeffLabel> out;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (std::size_t k = 0; k < reps[r].degree; ++k) {
      for (std::size_t l = 0; l < reps[r].degree; ++l) out.push_back({r, k, l});
    }
  }
  return out;
}

Complex coefficient(const FiniteGroup& g, const RepresentationSet& reps, CoeffLabel b,
                    std::size_t element) {
  if (b.rep >= reps.size() || b.k >= reps[b.rep].degree || b.l >= reps[b.rep].degree) {
    throw ShapeError("coefficient index out of range");
  }
  if (element >= g.order()) throw ShapeError("group element out of range");
  const Representation& rho = reps[b.rep];
  return std::sqrt(static_cast<double>(rho.degree) / static_cast<double>(g.order())) *
         rho.matrix_at(element)(b.k, b.l);
}

void check_encoding(const EncodingMap& e, std::size_t order) {
  for (const auto* map : {&e.time, &e.freq}) {
    if (map->size() != order) {
      throw ShapeError("encoding has " + std::to_string(map->size()) + " entries for " +
                       std::to_string(order) + " basis elements");
    }
    std::vector<bool> seen(order, false);
    for (std::size_t v : *map) {
      if (v >= order || seen[v]) throw ShapeError("encoding is not a bijection");
      seen[v] = true;
    }
  }
}

EncodingMap product_encoding(const RepresentationSet& r1, const EncodingMap& e1,
                             const RepresentationSet& r2, const EncodingMap& e2) {
  const std::size_t n1 = e1.time.size();
  const std::size_t n2 = e2.time.size();
  const auto o1 = offsets(r1);
  const auto o2 = offsets(r2);
  EncodingMap e;
  e.time.resize(n1 * n2);
  for (std::size_t x = 0; x < n1 * n2; ++x) e.time[x] = n2 * e1.time[x / n2] + e2.time[x % n2];
  for (std::size_t i1 = 0; i1 < r1.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < r2.size(); ++i2) {
      const std::size_t d1 = r1[i1].degree;
      const std::size_t d2 = r2[i2].degree;
      for (std::size_t k = 0; k < d1 * d2; ++k) {
        for (std::size_t l = 0; l < d1 * d2; ++l) {
          const std::size_t f1 = e1.freq[o1[i1] + (k / d2) * d1 + l / d2];
          const std::size_t f2 = e2.freq[o2[i2] + (k % d2) * d2 + l % d2];
          e.freq.push_back(n2 * f1 + f2);
        }
      }
    }
  }
  check_encoding(e, n1 * n2);
  return e;
}

EncodingMap standard_encoding(const FiniteGroup& g, const RepresentationSet& reps) {
  const std::vector<CoeffLabel> labels = coefficient_labels(reps);
  EncodingMap e;
  e.time.resize(g.order());
  std::iota(e.time.begin(), e.time.end(), std::size_t{0});
  e.freq.reserve(labels.size());
  switch (g.family()) {
    case GroupFamily::kCyclic:
      for (const CoeffLabel& b : labels) e.freq.push_back(b.rep);
      break;
    case GroupFamily::kProduct: {
      const RepresentationSet r1 = irreps(g.factor(0));
      const RepresentationSet r2 = irreps(g.factor(1));
      return product_encoding(r1, standard_encoding(g.factor(0), r1), r2,
                              standard_encoding(g.factor(1), r2));
    }
    case GroupFamily::kQuaternionic: {
      const auto n = static_cast<std::size_t>(g.params()[0]);
      const std::size_t one_dim[4] = {0, 2 * n, n, 3 * n};
      for (const CoeffLabel& b : labels) {
        if (b.rep < 4) {
          e.freq.push_back(one_dim[b.rep]);
          continue;
        }
        const std::size_t i = b.rep - 3;
        if (b.k == 0 && b.l == 0) e.freq.push_back(i);
        else if (b.k == 1 && b.l == 1) e.freq.push_back(2 * n - i);
        else if (b.k == 1) e.freq.push_back(2 * n + i);
        else e.freq.push_back(4 * n - i);
      }
      break;
    }
    case GroupFamily::kMetacyclic: {
      const MetacyclicData md = metacyclic_data(g);
      const auto one_dim = static_cast<std::size_t>(md.q * md.d);
      for (const CoeffLabel& b : labels) {
        if (b.rep < one_dim) {
          const ll j = static_cast<ll>(b.rep) / md.d;
          const ll i = static_cast<ll>(b.rep) % md.d;
          e.freq.push_back(static_cast<std::size_t>(j * md.m + i * (md.m / md.d)));
          continue;
        }
        const ll i = md.orbit_reps[b.rep - one_dim];
        const auto k = static_cast<ll>(b.k);
        const auto l = static_cast<ll>(b.l);
        e.freq.push_back(static_cast<std::size_t>(md.m * mod(k - l, md.q) +
                                                  mod(i * md.rpow[b.l], md.m)));
      }
      break;
    }
    case GroupFamily::kEn: {
      const auto n = static_cast<std::size_t>(g.params()[0]);
      const std::size_t one_dim = std::size_t{1} << (2 * n);
      for (const CoeffLabel& b : labels) {
        if (b.rep < one_dim) {
          e.freq.push_back(b.rep);
          continue;
        }
        // Bits 1 (k_1 ^ l_1) l_1 ... (k_n ^ l_n) l_n, k_1 and l_1 most significant.
        std::size_t index = 1;
        for (std::size_t i = n; i-- > 0;) {
          const std::size_t kb = (b.k >> i) & 1;
          const std::size_t lb = (b.l >> i) & 1;
          index = (index << 2) | ((kb ^ lb) << 1) | lb;
        }
        e.freq.push_back(index);
      }
      break;
    }
  }
  check_encoding(e, g.order());
  return e;
}

ComplexMatrix fourier_oracle(const FiniteGroup& g, const RepresentationSet& reps,
                             const EncodingMap& e) {
  check_encoding(e, g.order());
  const std::vector<CoeffLabel> labels = coefficient_labels(reps);
  if (labels.size() != g.order()) {
    throw ShapeError("representation set has " + std::to_string(labels.size()) +
                     " coefficients for a group of order " + std::to_string(g.order()));
  }
  ComplexMatrix f(g.order(), g.order());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      f(e.freq[i], e.time[x]) = std::conj(coefficient(g, reps, labels[i], x));
    }
  }
  return f;
}

ComplexMatrix standard_oracle(const FiniteGroup& g) {
  const RepresentationSet reps = irreps(g);
  return fourier_oracle(g, reps, standard_encoding(g, reps));
}

RepresentationCheck check_representations(const FiniteGroup& g, const RepresentationSet& reps,
                                          double tol) {
  RepresentationCheck out;
  const std::size_t n = g.order();
  std::vector<std::size_t> partners;
  if (n <= 128) {
    partners.resize(n);
    std::iota(partners.begin(), partners.end(), std::size_t{0});
  } else {
    for (std::size_t i = 0; i < 64; ++i) partners.push_back((i * 2654435761u) % n);
  }
  std::size_t degree_squares = 0;
  for (const Representation& rho : reps.members) {
    degree_squares += rho.degree * rho.degree;
    for (std::size_t x = 0; x < n; ++x) {
      const ComplexMatrix& mx = rho.matrix_at(x);
      const double u = max_abs_diff(mx * mx.adjoint(), ComplexMatrix::identity(rho.degree));
      out.max_error = std::max(out.max_error, u);
      if (u > tol) out.unitary = false;
      for (std::size_t y : partners) {
        const double h = max_abs_diff(rho.matrix_at(g.multiply(x, y)), mx * rho.matrix_at(y));
        out.max_error = std::max(out.max_error, h);
        if (h > tol) out.homomorphism = false;
      }
    }
  }
  out.sum_of_squares = degree_squares == n;
  std::vector<std::vector<Complex>> chars;
  for (const Representation& rho : reps.members) {
    std::vector<Complex> chi(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t k = 0; k < rho.degree; ++k) chi[x] += rho.matrix_at(x)(k, k);
    }
    chars.push_back(std::move(chi));
  }
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      Complex ip = 0.0;
      for (std::size_t x = 0; x < n; ++x) ip += chars[i][x] * std::conj(chars[j][x]);
      ip /= static_cast<double>(n);
      const double err = std::abs(ip - (i == j ? 1.0 : 0.0));
      out.max_error = std::max(out.max_error, err);
      if (err > tol) out.characters_orthonormal = false;
    }
  }
  return out;
}

AdaptedReport check_adapted(const FiniteGroup& g, const RepresentationSet& reps,
                            const Subgroup& sub, const RepresentationSet& sub_reps,
                            double tol) {
  check_subgroup(g, *sub.group, sub.embedding);
  AdaptedReport report;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Representation& rho = reps[r];
    const std::size_t d = rho.degree;
    // Union-find over the support of the restriction.
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t h : sub.embedding) {
      const ComplexMatrix& m = rho.matrix_at(h);
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          if (std::abs(m(k, l)) > tol) parent[find(k)] = find(l);
        }
      }
    }
    std::vector<AdaptedBlock> blocks;
    std::vector<std::size_t> block_of(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t root = find(k);
      if (block_of[root] == d) {
        block_of[root] = blocks.size();
        blocks.push_back({});
      }
      blocks[block_of[root]].indices.push_back(k);
    }
    for (AdaptedBlock& block : blocks) {
      const std::size_t bd = block.indices.size();
      bool found = false;
      for (std::size_t t = 0; t < sub_reps.size() && !found; ++t) {
        if (sub_reps[t].degree != bd) continue;
        bool match = true;
        for (std::size_t h = 0; h < sub.embedding.size() && match; ++h) {
          const ComplexMatrix& m = rho.matrix_at(sub.embedding[h]);
          const ComplexMatrix& target = sub_reps[t].matrix_at(h);
          for (std::size_t a = 0; a < bd && match; ++a) {
            for (std::size_t b = 0; b < bd; ++b) {
              if (std::abs(m(block.indices[a], block.indices[b]) - target(a, b)) > tol) {
                match = false;
                break;
              }
            }
          }
        }
        if (match) {
          block.subgroup_rep = t;
          found = true;
        }
      }
      if (!found && report.adapted) {
        report.adapted = false;
        report.failure = "restriction of " + rho.name + " has a " + std::to_string(bd) +
                         "-dimensional block matching no subgroup representation";
      }
    }
    report.partitions.push_back(std::move(blocks));
  }
  return report;
}

}  // namespace kronq
