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

#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "kronq/errors.hpp"

namespace kronq {

namespace {

constexpr std::string_view kFamilyNames[] = {"cyclic", "product", "quaternionic", "metacyclic",
                                             "en"};

long long parse_integer(const std::string& token) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError("expected an integer group parameter, got '" + token + "'");
  }
  return v;
}

GroupSpec parse_at(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw FormatError("missing group family");
  const std::string& name = tokens[pos++];
  GroupSpec spec;
  std::size_t family = std::size(kFamilyNames);
  for (std::size_t i = 0; i < std::size(kFamilyNames); ++i) {
    if (kFamilyNames[i] == name) family = i;
  }
  if (family == std::size(kFamilyNames)) throw FormatError("unknown group family '" + name + "'");
  spec.family = static_cast<GroupFamily>(family);
  if (spec.family == GroupFamily::kProduct) {
    spec.factors.push_back(parse_at(tokens, pos));
    spec.factors.push_back(parse_at(tokens, pos));
    return spec;
  }
  const std::size_t count = spec.family == GroupFamily::kMetacyclic ? 4 : 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (pos >= tokens.size()) {
      throw FormatError("group family '" + name + "' takes " + std::to_string(count) +
                        " parameter(s)");
    }
    spec.params.push_back(parse_integer(tokens[pos++]));
  }
  return spec;
}

long long mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

void check_order(long long order, const std::string& what) {
  if (order > static_cast<long long>(kMaxGroupOrder)) {
    throw ConstraintError(what + " has order " + std::to_string(order) +
                          ", above the supported maximum " + std::to_string(kMaxGroupOrder));
  }
}

}  // namespace

std::string GroupSpec::to_string() const {
  std::string out(kFamilyNames[static_cast<int>(family)]);
  for (const GroupSpec& f : factors) out += " " + f.to_string();
  for (long long p : params) out += " " + std::to_string(p);
  return out;
}

GroupSpec parse_group_spec(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  GroupSpec spec = parse_at(tokens, pos);
  if (pos != tokens.size()) throw FormatError("unexpected token '" + tokens[pos] + "' in group spec");
  return spec;
}

GroupSpec parse_group_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return parse_group_spec(tokens);
}

class GroupBuilder {
 public:
  static FiniteGroup build(GroupSpec spec, std::size_t order,
                           const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                           const std::function<std::string(std::size_t)>& name) {
    FiniteGroup g;
    g.spec_ = std::move(spec);
    g.order_ = order;
    g.table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) g.table_[a * order + b] = mul(a, b);
    }
    g.identity_ = 0;
    g.inverse_.assign(order, order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        if (g.table_[a * order + b] == g.identity_) {
          g.inverse_[a] = b;
          break;
        }
      }
      if (g.inverse_[a] == order) throw ConstraintError("element " + name(a) + " has no inverse");
    }
    g.names_.reserve(order);
    for (std::size_t a = 0; a < order; ++a) g.names_.push_back(name(a));
    return g;
  }

  static void set_factors(FiniteGroup& g, const FiniteGroup& g1, const FiniteGroup& g2) {
    g.factors_ = {std::make_shared<const FiniteGroup>(g1), std::make_shared<const FiniteGroup>(g2)};
  }
};

std::size_t FiniteGroup::power(std::size_t g, std::size_t k) const {
  std::size_t out = identity_;
  for (std::size_t i = 0; i < k; ++i) out = multiply(out, g);
  return out;
}

std::size_t FiniteGroup::element_order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != identity_; x = multiply(x, g)) ++k;
  return k;
}

FiniteGroup make_cyclic(long long n) {
  if (n < 1) throw ConstraintError("cyclic group order must be at least 1, got " + std::to_string(n));
  check_order(n, "cyclic group");
  const auto order = static_cast<std::size_t>(n);
  return GroupBuilder::build(
      {GroupFamily::kCyclic, {n}, {}}, order,
      [order](std::size_t a, std::size_t b) { return (a + b) % order; },
      [](std::size_t a) { return a == 0 ? std::string("e") : "a^" + std::to_string(a); });
}

FiniteGroup make_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  check_order(static_cast<long long>(g1.order() * g2.order()), "product group");
  const std::size_t n2 = g2.order();
  FiniteGroup g = GroupBuilder::build(
      {GroupFamily::kProduct, {}, {g1.spec(), g2.spec()}}, g1.order() * n2,
      [&](std::size_t a, std::size_t b) {
        return g1.multiply(a / n2, b / n2) * n2 + g2.multiply(a % n2, b % n2);
      },
      [&](std::size_t a) {
        return "(" + g1.element_name(a / n2) + ", " + g2.element_name(a % n2) + ")";
      });
  GroupBuilder::set_factors(g, g1, g2);
  return g;
}

FiniteGroup make_quaternionic(long long n) {
  if (n < 1) throw ConstraintError("quaternionic n must be positive, got " + std::to_string(n));
  if (n % 2 != 0) {
    throw ConstraintError("quaternionic n must be even, got " + std::to_string(n) +
                          " (odd n is not supported)");
  }
  check_order(4 * n, "quaternionic group");
  const long long two_n = 2 * n;
  return GroupBuilder::build(
      {GroupFamily::kQuaternionic, {n}, {}}, static_cast<std::size_t>(4 * n),
      [=](std::size_t a, std::size_t b) {
        const long long j1 = static_cast<long long>(a) / two_n;
        const long long k1 = static_cast<long long>(a) % two_n;
        const long long j2 = static_cast<long long>(b) / two_n;
        const long long k2 = static_cast<long long>(b) % two_n;
        long long j = j1 + j2;
        long long k = (j2 == 1 ? -k1 : k1) + k2;
        if (j == 2) {
          j = 0;
          k += n;
        }
        return static_cast<std::size_t>(two_n * j + mod(k, two_n));
      },
      [=](std::size_t a) {
        const long long j = static_cast<long long>(a) / two_n;
        const long long k = static_cast<long long>(a) % two_n;
        if (j == 0 && k == 0) return std::string("e");
        std::string s = j == 1 ? "c" : "";
        if (k != 0) s += (s.empty() ? "" : " ") + std::string("r^") + std::to_string(k);
        return s;
      });
}

FiniteGroup make_metacyclic(long long q, long long m, long long r, long long s) {
  if (!is_prime(q)) throw ConstraintError("metacyclic q must be prime, got " + std::to_string(q));
  if (m < 1) throw ConstraintError("metacyclic m must be positive, got " + std::to_string(m));
  check_order(q * m, "metacyclic group");
  r = mod(r, m);
  s = mod(s, m);
  if (std::gcd(m, r) != 1) {
    throw ConstraintError("relation gcd(m, r) = 1 violated: gcd(" + std::to_string(m) + ", " +
                          std::to_string(r) + ") = " + std::to_string(std::gcd(m, r)));
  }
  if (mod(s * (r - 1), m) != 0) {
    throw ConstraintError("relation m | s(r - 1) violated: " + std::to_string(m) +
                          " does not divide " + std::to_string(s * (r - 1)));
  }
  long long rq = 1;
  for (long long i = 0; i < q; ++i) rq = mod(rq * r, m);
  if (rq != mod(1, m)) {
    throw ConstraintError("relation r^q = 1 (mod m) violated: " + std::to_string(r) + "^" +
                          std::to_string(q) + " = " + std::to_string(rq) + " (mod " +
                          std::to_string(m) + ")");
  }
  std::vector<long long> rpow(static_cast<std::size_t>(q), 1);
  for (std::size_t i = 1; i < rpow.size(); ++i) rpow[i] = mod(rpow[i - 1] * r, m);
  return GroupBuilder::build(
      {GroupFamily::kMetacyclic, {q, m, r, s}, {}}, static_cast<std::size_t>(q * m),
      [=](std::size_t a, std::size_t b) {
        const long long j1 = static_cast<long long>(a) / m;
        const long long i1 = static_cast<long long>(a) % m;
        const long long j2 = static_cast<long long>(b) / m;
        const long long i2 = static_cast<long long>(b) % m;
        long long j = j1 + j2;
        long long i = i1 * rpow[static_cast<std::size_t>(j2)] + i2;
        if (j >= q) {
          j -= q;
          i += s;
        }
        return static_cast<std::size_t>(m * j + mod(i, m));
      },
      [=](std::size_t a) {
        const long long j = static_cast<long long>(a) / m;
        const long long i = static_cast<long long>(a) % m;
        if (j == 0 && i == 0) return std::string("e");
        std::string out = j == 0 ? "" : "b^" + std::to_string(j);
        if (i != 0) out += (out.empty() ? "" : " ") + std::string("a^") + std::to_string(i);
        return out;
      });
}

FiniteGroup make_en(long long n) {
  if (n < 0 || n > static_cast<long long>(kMaxEnRank)) {
    throw ConstraintError("en rank must be between 0 and " + std::to_string(kMaxEnRank) +
                          ", got " + std::to_string(n));
  }
  const auto bits = static_cast<std::size_t>(2 * n);
  const std::size_t order = std::size_t{2} << bits;
  // a occupies odd positions from the top, c even ones: a_i at bit 2(n-i)+1.
  std::size_t a_mask = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) a_mask |= std::size_t{1} << (2 * i + 1);
  const std::size_t c_mask = a_mask >> 1;
  const std::size_t lambda_bit = std::size_t{1} << bits;
  return GroupBuilder::build(
      {GroupFamily::kEn, {n}, {}}, order,
      [=](std::size_t x, std::size_t y) {
        const std::size_t c1 = x & c_mask;
        const std::size_t a2 = (y & a_mask) >> 1;
        const std::size_t sign = static_cast<std::size_t>(std::popcount(c1 & a2) & 1);
        const std::size_t lambda = ((x ^ y) & lambda_bit) ^ (sign ? lambda_bit : 0);
        return lambda | ((x ^ y) & (a_mask | c_mask));
      },
      [=](std::size_t x) {
        std::string out = (x & lambda_bit) ? "-" : "+";
        for (std::size_t i = static_cast<std::size_t>(n); i-- > 0;) {
          const bool a = (x >> (2 * i + 1)) & 1;
          const bool c = (x >> (2 * i)) & 1;
          out += a && c ? "XZ" : a ? "X" : c ? "Z" : "I";
          if (i != 0) out += " ";
        }
        return out;
      });
}

FiniteGroup make_group(const GroupSpec& spec) {
  const auto param = [&](std::size_t i) { return spec.params.at(i); };
  switch (spec.family) {
    case GroupFamily::kCyclic:
      return make_cyclic(param(0));
    case GroupFamily::kProduct:
      return make_product(make_group(spec.factors.at(0)), make_group(spec.factors.at(1)));
    case GroupFamily::kQuaternionic:
      return make_quaternionic(param(0));
    case GroupFamily::kMetacyclic:
      return make_metacyclic(param(0), param(1), param(2), param(3));
    case GroupFamily::kEn:
      return make_en(param(0));
  }
  throw ConstraintError("unsupported group family");
}

bool check_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (g.multiply(a, g.identity()) != a || g.multiply(g.identity(), a) != a) return false;
    if (g.multiply(a, g.inverse(a)) != g.identity() ||
        g.multiply(g.inverse(a), a) != g.identity()) {
      return false;
    }
  }
  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = g.multiply(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) return false;
        }
      }
    }
  }
  return true;
}

void check_subgroup(const FiniteGroup& g, const FiniteGroup& h,
                    const std::vector<std::size_t>& embedding) {
  if (embedding.size() != h.order()) {
    throw ConstraintError("subgroup embedding has " + std::to_string(embedding.size()) +
                          " entries for a group of order " + std::to_string(h.order()));
  }
  std::vector<bool> seen(g.order(), false);
  for (std::size_t x : embedding) {
    if (x >= g.order() || seen[x]) throw ConstraintError("subgroup embedding is not injective");
    seen[x] = true;
  }
  for (std::size_t a = 0; a < h.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) {
      if (g.multiply(embedding[a], embedding[b]) != embedding[h.multiply(a, b)]) {
        throw ConstraintError("subset is not a subgroup: " + g.element_name(embedding[a]) +
                              " * " + g.element_name(embedding[b]) + " is not its image");
      }
    }
  }
}

Subgroup cyclic_subgroup(const FiniteGroup& parent, std::size_t generator) {
  const std::size_t k = parent.element_order(generator);
  Subgroup out{std::make_shared<const FiniteGroup>(make_cyclic(static_cast<long long>(k))), {}};
  for (std::size_t i = 0; i < k; ++i) out.embedding.push_back(parent.power(generator, i));
  check_subgroup(parent, *out.group, out.embedding);
  return out;
}

Subgroup en_subgroup(const FiniteGroup& en) {
  if (en.family() != GroupFamily::kEn || en.params().at(0) < 1) {
    throw ConstraintError("en_subgroup needs E_n with n >= 1");
  }
  Subgroup out{std::make_shared<const FiniteGroup>(make_en(en.params()[0] - 1)), {}};
  for (std::size_t x = 0; x < out.group->order(); ++x) out.embedding.push_back(x * 4);
  check_subgroup(en, *out.group, out.embedding);
  return out;
}

}  // namespace kronq
