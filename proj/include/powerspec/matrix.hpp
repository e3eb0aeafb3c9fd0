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


#ifndef POWERSPEC_MATRIX_HPP_
#define POWERSPEC_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "powerspec/polynomial.hpp"

namespace powerspec {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix ones(std::size_t rows, std::size_t cols);
  static IntMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  // Column vector from entries.
  static IntMatrix column(std::span<const BigInt> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const BigInt> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<BigInt>& entries() const { return data_; }

  BigInt trace() const;
  IntMatrix transpose() const;
  bool is_symmetric() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const BigInt& scalar);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }
  friend IntMatrix operator*(const BigInt& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Kronecker product a ⊗ b.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

// Assembles a block matrix. Every block in a grid row must share its row
// count and every block in a grid column its column count.
IntMatrix block(const std::vector<std::vector<IntMatrix>>& grid);

// det(xI - m) by the Faddeev-LeVerrier recurrence. Every division in the
// recurrence is checked for exactness.
IntPolynomial char_poly(const IntMatrix& m);

// Fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& m);

// Safety cap on intermediate bit length, read from POWERSPEC_MAX_BITS.
// Zero means unlimited.
std::size_t max_bits_limit();

}  // namespace powerspec

#endif  // POWERSPEC_MATRIX_HPP_
