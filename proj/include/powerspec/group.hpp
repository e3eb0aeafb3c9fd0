// Copyright 2026 The powerspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef POWERSPEC_GROUP_HPP_
#define POWERSPEC_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace powerspec {

using Element = std::uint32_t;

enum class Family {
  kCyclic,
  kElementaryAbelian,
  kDihedral,
  kDicyclic,
  kGpq,
  kDirectProduct,
};

std::string_view family_name(Family f);

// Names a group from one of the supported families. Direct products hold
// their two factors; every other family holds its integer parameters.
//
//   cyclic             {n}
//   elementary-abelian {p, n}
//   dihedral           {n}      order 2n
//   dicyclic           {n}      order 4n
//   gpq                {p, q}   non-abelian, order pq
struct GroupFamilySpec {
  Family family = Family::kCyclic;
  std::vector<long> params;
  std::vector<GroupFamilySpec> factors;

  static GroupFamilySpec cyclic(long n) { return {Family::kCyclic, {n}, {}}; }
  static GroupFamilySpec elementary_abelian(long p, long n) {
    return {Family::kElementaryAbelian, {p, n}, {}};
  }
  static GroupFamilySpec dihedral(long n) { return {Family::kDihedral, {n}, {}}; }
  static GroupFamilySpec dicyclic(long n) { return {Family::kDicyclic, {n}, {}}; }
  static GroupFamilySpec gpq(long p, long q) { return {Family::kGpq, {p, q}, {}}; }
  static GroupFamilySpec product(GroupFamilySpec a, GroupFamilySpec b) {
    return {Family::kDirectProduct, {}, {std::move(a), std::move(b)}};
  }

  // Throws Error(kInvalidFamilyParameters) naming the violated condition.
  void validate() const;
  long order() const;
  std::string to_string() const;

  friend bool operator==(const GroupFamilySpec&, const GroupFamilySpec&) = default;
};

// A finite group given by its full Cayley table. Element 0 is the identity.
// Immutable after construction.
class FiniteGroup {
 public:
  // Validates closure, the identity law for element 0 and the existence of
  // inverses. Associativity is not checked here (see is_associative()).
  FiniteGroup(std::size_t order, std::vector<Element> table,
              std::vector<std::string> labels = {},
              std::optional<GroupFamilySpec> family = std::nullopt);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element g) const { return inverse_[g]; }
  std::span<const Element> table_row(Element g) const {
    return {table_.data() + g * order_, order_};
  }
  const std::vector<Element>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element g) const { return labels_[g]; }
  // The family this group was built from, when known.
  const std::optional<GroupFamilySpec>& family() const { return family_; }

  // Full O(n^3) triple scan.
  bool is_associative() const;
  bool is_abelian() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::optional<GroupFamilySpec> family_;
};

FiniteGroup make_group(const GroupFamilySpec& spec);

// Elements are pair-encoded row-major: (a, b) has index a * |h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

unsigned element_order(const FiniteGroup& g, Element x);

// <x> as an ascending element list.
std::vector<Element> cyclic_subgroup(const FiniteGroup& g, Element x);

// Distinct cyclic subgroups, each ascending; the list is sorted
// lexicographically, so {e} comes first.
std::vector<std::vector<Element>> cyclic_subgroups(const FiniteGroup& g);

struct TotientDivisors {
  unsigned long totient = 0;
  // Divisors d of n with 1 < d < n, ascending.
  std::vector<unsigned long> divisors;

  friend bool operator==(const TotientDivisors&, const TotientDivisors&) = default;
};

TotientDivisors totient_and_divisors(unsigned long n);

bool is_prime(long n);
unsigned long ipow(unsigned long base, unsigned exponent);

}  // namespace powerspec

#endif  // POWERSPEC_GROUP_HPP_
