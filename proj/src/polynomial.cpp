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


#include "powerspec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "powerspec/error.hpp"

namespace powerspec {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::linear(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c, BigInt(1)});
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

const BigInt& IntPolynomial::leading() const {
  static const BigInt kZero(0);
  return coeffs_.empty() ? kZero : coeffs_.back();
}

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

BigInt IntPolynomial::evaluate(const BigInt& at) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInexactDivision, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw Error(ErrorCode::kInexactDivision,
                "divisor degree exceeds dividend degree: (" + a.to_string() + ") / (" +
                    b.to_string() + ")");
  }
  std::vector<BigInt> rem = a.coeffs();
  const auto& div = b.coeffs();
  const std::size_t db = div.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  BigInt r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (sgn(top) == 0) continue;
    mpz_fdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), div.back().get_mpz_t());
    if (sgn(r) != 0) {
      throw Error(ErrorCode::kInexactDivision, "(" + b.to_string() + ") does not divide (" +
                                                   a.to_string() + ") over the integers");
    }
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), div[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (sgn(rem[j]) != 0) {
      throw Error(ErrorCode::kInexactDivision, "(" + b.to_string() + ") does not divide (" +
                                                   a.to_string() + "): nonzero remainder");
    }
  }
  return IntPolynomial(std::move(quot));
}

FactoredPoly::FactoredPoly(std::initializer_list<Factor> factors) {
  for (const auto& f : factors) add(f.poly, f.multiplicity);
}

FactoredPoly& FactoredPoly::add(IntPolynomial poly, unsigned multiplicity) {
  if (multiplicity > 0) factors_.push_back({std::move(poly), multiplicity});
  return *this;
}

FactoredPoly& FactoredPoly::append(const FactoredPoly& other) {
  for (const auto& f : other.factors_) add(f.poly, f.multiplicity);
  return *this;
}

long FactoredPoly::degree() const {
  long d = 0;
  for (const auto& f : factors_) d += f.poly.degree() * static_cast<long>(f.multiplicity);
  return d;
}

IntPolynomial FactoredPoly::expand() const {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& f : factors_) out *= f.poly.pow(f.multiplicity);
  return out;
}

std::string FactoredPoly::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " ";
    out += "(" + f.poly.to_string() + ")";
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

IntPolynomial expand(const FactoredPoly& f) { return f.expand(); }

}  // namespace powerspec
