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


#include "powerspec/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "powerspec/error.hpp"

namespace powerspec {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidFamilyParameters, message);
}

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long powmod(long base, long exponent, long m) {
  long result = 1 % m;
  base = mod(base, m);
  while (exponent > 0) {
    if (exponent & 1) result = result * base % m;
    base = base * base % m;
    exponent >>= 1;
  }
  return result;
}

FiniteGroup from_rule(std::size_t order, std::vector<std::string> labels,
                      const GroupFamilySpec& spec,
                      const std::function<Element(Element, Element)>& rule) {
  std::vector<Element> table(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) table[a * order + b] = rule(a, b);
  return FiniteGroup(order, std::move(table), std::move(labels), spec);
}

FiniteGroup make_cyclic(long n, const GroupFamilySpec& spec) {
  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i));
  return from_rule(static_cast<std::size_t>(n), std::move(labels), spec,
                   [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
}

// Vectors over F_p, index = sum of coordinate_k * p^k.
FiniteGroup make_elementary_abelian(long p, long n, const GroupFamilySpec& spec) {
  const std::size_t order = ipow(static_cast<unsigned long>(p), static_cast<unsigned>(n));
  std::vector<std::string> labels;
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::string s = "(";
    std::size_t v = idx;
    for (long k = 0; k < n; ++k) {
      s += (k ? "," : "") + std::to_string(v % p);
      v /= p;
    }
    labels.push_back(s + ")");
  }
  return from_rule(order, std::move(labels), spec, [p, n](Element a, Element b) {
    Element out = 0;
    Element scale = 1;
    for (long k = 0; k < n; ++k) {
      out += static_cast<Element>((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= static_cast<Element>(p);
    }
    return out;
  });
}

// a^i b^s at index s * n + i; (a^i b^s)(a^j b^t) = a^{i + (-1)^s j} b^{s+t}.
FiniteGroup make_dihedral(long n, const GroupFamilySpec& spec) {
  std::vector<std::string> labels;
  for (long s = 0; s < 2; ++s)
    for (long i = 0; i < n; ++i) {
      std::string rot = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
      labels.push_back(s == 0 ? (i == 0 ? "e" : rot) : rot + "b");
    }
  return from_rule(static_cast<std::size_t>(2 * n), std::move(labels), spec,
                   [n](Element x, Element y) {
                     const long i = x % n, s = x / n, j = y % n, t = y / n;
                     const long k = mod(s == 0 ? i + j : i - j, n);
                     return static_cast<Element>(((s + t) % 2) * n + k);
                   });
}

// a^i x^s at index s * 2n + i, with x^2 = a^n and x a = a^{-1} x.
FiniteGroup make_dicyclic(long n, const GroupFamilySpec& spec) {
  const long m = 2 * n;
  std::vector<std::string> labels;
  for (long s = 0; s < 2; ++s)
    for (long i = 0; i < m; ++i) {
      std::string rot = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
      labels.push_back(s == 0 ? (i == 0 ? "e" : rot) : rot + "x");
    }
  return from_rule(static_cast<std::size_t>(2 * m), std::move(labels), spec,
                   [n, m](Element u, Element v) {
                     const long i = u % m, s = u / m, j = v % m, t = v / m;
                     if (s == 0) return static_cast<Element>(t * m + mod(i + j, m));
                     if (t == 0) return static_cast<Element>(m + mod(i - j, m));
                     return static_cast<Element>(mod(i - j + n, m));
                   });
}

// (i mod q, j mod p) at index j * q + i; (i1, j1)(i2, j2) = (i1 + r^j1 i2, j1 + j2)
// where r is the least integer above one with r^p = 1 (mod q).
FiniteGroup make_gpq(long p, long q, const GroupFamilySpec& spec) {
  long r = 2;
  while (powmod(r, p, q) != 1) ++r;
  std::vector<long> twist(p);
  for (long j = 0; j < p; ++j) twist[j] = powmod(r, j, q);
  std::vector<std::string> labels;
  for (long j = 0; j < p; ++j)
    for (long i = 0; i < q; ++i) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return from_rule(static_cast<std::size_t>(p * q), std::move(labels), spec,
                   [p, q, twist](Element u, Element v) {
                     const long i1 = u % q, j1 = u / q, i2 = v % q, j2 = v / q;
                     const long i = (i1 + twist[j1] * i2) % q;
                     const long j = (j1 + j2) % p;
                     return static_cast<Element>(j * q + i);
                   });
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long ipow(unsigned long base, unsigned exponent) {
  unsigned long r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kCyclic: return "cyclic";
    case Family::kElementaryAbelian: return "elementary-abelian";
    case Family::kDihedral: return "dihedral";
    case Family::kDicyclic: return "dicyclic";
    case Family::kGpq: return "gpq";
    case Family::kDirectProduct: return "direct-product";
  }
  return "unknown";
}

void GroupFamilySpec::validate() const {
  const std::size_t want = family == Family::kDirectProduct                                 ? 0
                           : (family == Family::kElementaryAbelian || family == Family::kGpq) ? 2
                                                                                              : 1;
  if (params.size() != want) {
    invalid(std::string(family_name(family)) + " takes " + std::to_string(want) + " parameter(s)");
  }
  switch (family) {
    case Family::kCyclic:
      if (params[0] < 1) invalid("cyclic requires n >= 1");
      break;
    case Family::kElementaryAbelian:
      if (!is_prime(params[0])) invalid("elementary-abelian requires p prime");
      if (params[1] < 1) invalid("elementary-abelian requires n >= 1");
      break;
    case Family::kDihedral:
      if (params[0] < 3) invalid("dihedral requires n >= 3");
      break;
    case Family::kDicyclic:
      if (params[0] < 3) invalid("dicyclic requires n >= 3");
      break;
    case Family::kGpq: {
      const long p = params[0], q = params[1];
      if (!is_prime(p) || !is_prime(q)) invalid("gpq requires p and q prime");
      if (p >= q) invalid("gpq requires p < q");
      if ((q - 1) % p != 0) invalid("gpq requires p | q-1");
      break;
    }
    case Family::kDirectProduct:
      if (factors.size() != 2) invalid("direct-product takes exactly two factors");
      factors[0].validate();
      factors[1].validate();
      break;
  }
}

long GroupFamilySpec::order() const {
  switch (family) {
    case Family::kCyclic: return params[0];
    case Family::kElementaryAbelian:
      return static_cast<long>(ipow(params[0], static_cast<unsigned>(params[1])));
    case Family::kDihedral: return 2 * params[0];
    case Family::kDicyclic: return 4 * params[0];
    case Family::kGpq: return params[0] * params[1];
    case Family::kDirectProduct: return factors[0].order() * factors[1].order();
  }
  return 0;
}

std::string GroupFamilySpec::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::kCyclic: os << "Z_" << params[0]; break;
    case Family::kElementaryAbelian: os << "El(" << params[0] << "^" << params[1] << ")"; break;
    case Family::kDihedral: os << "D_" << 2 * params[0]; break;
    case Family::kDicyclic: os << "Dic_" << 4 * params[0]; break;
    case Family::kGpq: os << "G_{" << params[0] << "," << params[1] << "}"; break;
    case Family::kDirectProduct:
      os << factors[0].to_string() << " x " << factors[1].to_string();
      break;
  }
  return os.str();
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         std::vector<std::string> labels, std::optional<GroupFamilySpec> family)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)), family_(std::move(family)) {
  if (order_ == 0) throw Error(ErrorCode::kInvalidGroupTable, "group order must be positive");
  if (table_.size() != order_ * order_) {
    throw Error(ErrorCode::kInvalidGroupTable, "table must have order^2 entries");
  }
  for (Element v : table_)
    if (v >= order_) throw Error(ErrorCode::kInvalidGroupTable, "table entry out of range");
  for (Element g = 0; g < order_; ++g) {
    if (multiply(0, g) != g || multiply(g, 0) != g) {
      throw Error(ErrorCode::kInvalidGroupTable, "element 0 is not the identity");
    }
  }
  inverse_.assign(order_, 0);
  for (Element g = 0; g < order_; ++g) {
    const auto row = table_row(g);
    const auto it = std::find(row.begin(), row.end(), Element{0});
    if (it == row.end() || multiply(static_cast<Element>(it - row.begin()), g) != 0) {
      throw Error(ErrorCode::kInvalidGroupTable,
                  "element " + std::to_string(g) + " has no two-sided inverse");
    }
    inverse_[g] = static_cast<Element>(it - row.begin());
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != order_) {
    throw Error(ErrorCode::kInvalidGroupTable, "label count differs from the order");
  }
}

bool FiniteGroup::is_associative() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      const Element ab = multiply(a, b);
      for (Element c = 0; c < order_; ++c)
        if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
    }
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

FiniteGroup make_group(const GroupFamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::kCyclic: return make_cyclic(spec.params[0], spec);
    case Family::kElementaryAbelian:
      return make_elementary_abelian(spec.params[0], spec.params[1], spec);
    case Family::kDihedral: return make_dihedral(spec.params[0], spec);
    case Family::kDicyclic: return make_dicyclic(spec.params[0], spec);
    case Family::kGpq: return make_gpq(spec.params[0], spec.params[1], spec);
    case Family::kDirectProduct:
      return direct_product(make_group(spec.factors[0]), make_group(spec.factors[1]));
  }
  invalid("unknown family");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element first = g.multiply(a / nh, b / nh);
      const Element second = h.multiply(a % nh, b % nh);
      table[a * n + b] = static_cast<Element>(first * nh + second);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element a = 0; a < n; ++a) labels.push_back("(" + g.label(a / nh) + "," + h.label(a % nh) + ")");
  std::optional<GroupFamilySpec> family;
  if (g.family() && h.family()) family = GroupFamilySpec::product(*g.family(), *h.family());
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(family));
}

unsigned element_order(const FiniteGroup& g, Element x) {
  unsigned k = 1;
  for (Element cur = x; cur != g.identity(); cur = g.multiply(cur, x)) ++k;
  return k;
}

std::vector<Element> cyclic_subgroup(const FiniteGroup& g, Element x) {
  std::vector<Element> out{g.identity()};
  for (Element cur = x; cur != g.identity(); cur = g.multiply(cur, x)) out.push_back(cur);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Element>> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  for (Element x = 0; x < g.order(); ++x) seen.insert(cyclic_subgroup(g, x));
  return {seen.begin(), seen.end()};
}

TotientDivisors totient_and_divisors(unsigned long n) {
  TotientDivisors out;
  for (unsigned long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++out.totient;
  for (unsigned long d = 2; d < n; ++d)
    if (n % d == 0) out.divisors.push_back(d);
  return out;
}

}  // namespace powerspec
