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


#ifndef POWERSPEC_POLYNOMIAL_HPP_
#define POWERSPEC_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace powerspec {

using BigInt = mpz_class;

// Dense univariate polynomial over the integers, coefficients stored in
// ascending degree. Always normalized: the leading coefficient is nonzero
// unless the polynomial is zero (empty coefficient list).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial x();
  // x + c
  static IntPolynomial linear(const BigInt& c);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of x^k, zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;
  bool is_monic() const;

  BigInt evaluate(const BigInt& at) const;
  IntPolynomial pow(unsigned exponent) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form such as "x^3 - 5*x^2 - 25*x - 13".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Quotient q with a == b * q. Throws Error(kInexactDivision) when b does not
// divide a over the integers, Error(kInexactDivision) as well for b == 0.
IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b);

struct Factor {
  IntPolynomial poly;
  unsigned multiplicity = 1;
};

// Product of factors with multiplicities. Factors with multiplicity zero are
// dropped on insertion, so every stored multiplicity is at least one.
class FactoredPoly {
 public:
  FactoredPoly() = default;
  FactoredPoly(std::initializer_list<Factor> factors);

  FactoredPoly& add(IntPolynomial poly, unsigned multiplicity = 1);
  FactoredPoly& append(const FactoredPoly& other);

  const std::vector<Factor>& factors() const { return factors_; }
  long degree() const;
  IntPolynomial expand() const;
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

IntPolynomial expand(const FactoredPoly& f);

}  // namespace powerspec

#endif  // POWERSPEC_POLYNOMIAL_HPP_
