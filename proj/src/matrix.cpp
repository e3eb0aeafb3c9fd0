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


#include "powerspec/matrix.hpp"

#include <climits>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "powerspec/error.hpp"

namespace powerspec {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (auto& v : m.data_) v = 1;
  return m;
}

IntMatrix IntMatrix::column(std::span<const BigInt> entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

BigInt IntMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::kNotSquare, "trace of a non-square matrix");
  BigInt t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const BigInt& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

namespace {

// Entries as machine integers when every one fits, for the multiply kernel.
std::optional<std::vector<long>> small_entries(const IntMatrix& a) {
  std::vector<long> out;
  out.reserve(a.entries().size());
  for (const auto& v : a.entries()) {
    if (!v.fits_slong_p()) return std::nullopt;
    out.push_back(v.get_si());
  }
  return out;
}

// out = a * b, where a's entries are given as machine integers.
void multiply_small_left(const std::vector<long>& a, std::size_t n, std::size_t inner,
                         const IntMatrix& b, IntMatrix& out) {
  const std::size_t cols = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = 0;
    for (std::size_t l = 0; l < inner; ++l) {
      const long s = a[i * inner + l];
      if (s == 0) continue;
      const unsigned long mag = s < 0 ? 0UL - static_cast<unsigned long>(s) : static_cast<unsigned long>(s);
      for (std::size_t j = 0; j < cols; ++j) {
        const mpz_srcptr src = b(l, j).get_mpz_t();
        if (s > 0) {
          mpz_addmul_ui(out(i, j).get_mpz_t(), src, mag);
        } else {
          mpz_submul_ui(out(i, j).get_mpz_t(), src, mag);
        }
      }
    }
  }
}

void check_bits(const BigInt& v, std::size_t limit, const char* where) {
  if (limit != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > limit) {
    throw Error(ErrorCode::kBitLimitExceeded,
                std::string(where) + ": intermediate value exceeds POWERSPEC_MAX_BITS=" +
                    std::to_string(limit) + " bits");
  }
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shape");
  IntMatrix out(a.rows_, b.cols_);
  if (auto small = small_entries(a)) {
    multiply_small_left(*small, a.rows_, a.cols_, b, out);
    return out;
  }
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const BigInt& s = a(i, l);
      if (sgn(s) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), s.get_mpz_t(), b(l, j).get_mpz_t());
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const BigInt& s = a(i, j);
      if (sgn(s) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

IntMatrix block(const std::vector<std::vector<IntMatrix>>& grid) {
  if (grid.empty()) return {};
  const std::size_t grid_cols = grid.front().size();
  std::vector<std::size_t> heights(grid.size());
  std::vector<std::size_t> widths(grid_cols);
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    if (grid[bi].size() != grid_cols)
      throw Error(ErrorCode::kDimensionMismatch, "block grid rows differ in length");
    heights[bi] = grid[bi].front().rows();
    for (std::size_t bj = 0; bj < grid_cols; ++bj) {
      const IntMatrix& m = grid[bi][bj];
      if (bi == 0) widths[bj] = m.cols();
      if (m.rows() != heights[bi] || m.cols() != widths[bj]) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "block (" + std::to_string(bi) + "," + std::to_string(bj) +
                        ") is not conformal with its grid row/column");
      }
    }
  }
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (auto h : heights) total_rows += h;
  for (auto w : widths) total_cols += w;
  IntMatrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < grid_cols; ++bj) {
      const IntMatrix& m = grid[bi][bj];
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(r0 + i, c0 + j) = m(i, j);
      c0 += widths[bj];
    }
    r0 += heights[bi];
  }
  return out;
}

std::size_t max_bits_limit() {
  const char* raw = std::getenv("POWERSPEC_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw Error(ErrorCode::kInvalidArguments,
                std::string("POWERSPEC_MAX_BITS is not a non-negative integer: ") + raw);
  }
  return static_cast<std::size_t>(v);
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "char_poly of a non-square matrix");
  const std::size_t n = a.rows();
  const std::size_t limit = max_bits_limit();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  if (n == 0) return IntPolynomial(std::move(c));

  const auto small = small_entries(a);
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix am(n, n);
  BigInt rem;
  for (std::size_t k = 1; k <= n; ++k) {
    if (small) {
      multiply_small_left(*small, n, n, m, am);
    } else {
      am = a * m;
    }
    BigInt tr = am.trace();
    BigInt kk(static_cast<unsigned long>(k));
    mpz_tdiv_qr(c[n - k].get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    if (sgn(rem) != 0) {
      throw Error(ErrorCode::kInternalExactnessViolation,
                  "Faddeev-LeVerrier: trace not divisible by " + std::to_string(k));
    }
    c[n - k] = -c[n - k];
    check_bits(c[n - k], limit, "char_poly");
    if (k < n) {
      std::swap(m, am);
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
    }
  }
  // Cayley-Hamilton: A * M_n + c_0 I = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = am(i, j);
      if (i == j) v += c[0];
      if (sgn(v) != 0) {
        throw Error(ErrorCode::kInternalExactnessViolation,
                    "Faddeev-LeVerrier: final residual is nonzero");
      }
    }
  return IntPolynomial(std::move(c));
}

BigInt determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return BigInt(1);
  const std::size_t limit = max_bits_limit();
  IntMatrix m = a;
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
      if (pivot == n) return BigInt(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Sylvester's identity makes this division exact.
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        check_bits(m(i, j), limit, "determinant");
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

}  // namespace powerspec
