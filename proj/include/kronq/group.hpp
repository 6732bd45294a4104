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

// Finite groups of the supported families with explicit multiplication tables.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kronq {

enum class GroupFamily { kCyclic, kProduct, kQuaternionic, kMetacyclic, kEn };

/// Parsed group description, e.g. "metacyclic 3 7 2 0" or
/// "product cyclic 2 en 1".
struct GroupSpec {
  GroupFamily family = GroupFamily::kCyclic;
  std::vector<long long> params;
  std::vector<GroupSpec> factors;  // two entries for products

  std::string to_string() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws FormatError on unknown families, missing or non-integer parameters,
/// and trailing tokens.
GroupSpec parse_group_spec(const std::vector<std::string>& tokens);
GroupSpec parse_group_spec(std::string_view text);

inline constexpr std::size_t kMaxGroupOrder = 4096;
inline constexpr std::size_t kMaxEnRank = 5;

class FiniteGroup {
 public:
  const GroupSpec& spec() const { return spec_; }
  GroupFamily family() const { return spec_.family; }
  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }

  std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g * order_ + h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  std::size_t power(std::size_t g, std::size_t k) const;
  std::size_t element_order(std::size_t g) const;
  const std::string& element_name(std::size_t g) const { return names_[g]; }

  /// Normalized family parameters (metacyclic r and s reduced mod m).
  const std::vector<long long>& params() const { return spec_.params; }
  /// Factor groups of a product, most significant first.
  const FiniteGroup& factor(std::size_t i) const { return *factors_.at(i); }

 private:
  friend class GroupBuilder;

  GroupSpec spec_;
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::vector<std::shared_ptr<const FiniteGroup>> factors_;
};

// Element labels:
//   cyclic n:             a^j -> j
//   product G1 x G2:      (g1, g2) -> g1 * |G2| + g2
//   quaternionic n:       c^j r^k -> 2n j + k  (r^2n = c^4 = 1, c^2 = r^n, c r = r^-1 c)
//   metacyclic q m r s:   b^j a^i -> m j + i   (b^-1 a b = a^r, b^q = a^s, a^m = 1)
//   en n:                 bits lambda a_1 c_1 ... a_n c_n, lambda most significant
// Constructors throw ConstraintError naming the violated relation.
FiniteGroup make_cyclic(long long n);
FiniteGroup make_product(const FiniteGroup& g1, const FiniteGroup& g2);
FiniteGroup make_quaternionic(long long n);
FiniteGroup make_metacyclic(long long q, long long m, long long r, long long s);
FiniteGroup make_en(long long n);
FiniteGroup make_group(const GroupSpec& spec);

/// Identity, inverse, and (for order <= 512) associativity laws.
bool check_group_axioms(const FiniteGroup& g);

/// A subgroup given as the parent labels of its elements; position i holds
/// the image of subgroup label i.
struct Subgroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::size_t> embedding;
};

/// Throws ConstraintError unless `embedding` is an injective homomorphism
/// from `h` into `g`.
void check_subgroup(const FiniteGroup& g, const FiniteGroup& h,
                    const std::vector<std::size_t>& embedding);

/// <g> as a cyclic group with labels k -> g^k.
Subgroup cyclic_subgroup(const FiniteGroup& parent, std::size_t generator);

/// E_{n-1} inside E_n with a_n = c_n = 0.
Subgroup en_subgroup(const FiniteGroup& en);

}  // namespace kronq
