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


#include "powerspec/theorems.hpp"

#include <numeric>
#include <string>

#include "powerspec/error.hpp"
#include "powerspec/group.hpp"

namespace powerspec {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::kHypothesisViolated, what);
}

void require(bool ok, const std::string& what) {
  if (!ok) violated(what);
}

void require_gpq(long p, long q) {
  require(is_prime(p) && is_prime(q), "p and q must be prime");
  require(p < q, "p < q required");
  require((q - 1) % p == 0, "p | q-1 required");
}

void require_n3(long n) { require(n >= 3, "n >= 3 required"); }

BigInt pw(long base, long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return r;
}

unsigned mult(const BigInt& v) {
  if (v < 0) violated("negative multiplicity " + v.get_str());
  return static_cast<unsigned>(v.get_ui());
}

IntPolynomial lin(const BigInt& c) { return IntPolynomial::linear(c); }

IntPolynomial monic(std::vector<BigInt> lower) {
  lower.emplace_back(1);
  return IntPolynomial(std::move(lower));
}

IntMatrix mat2(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  IntMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

IntMatrix mat4(const std::vector<BigInt>& rows) {
  IntMatrix m(4, 4);
  for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = rows[k];
  return m;
}

IntMatrix ones(std::size_t r, std::size_t c) { return IntMatrix::ones(r, c); }
IntMatrix eye(std::size_t n) { return IntMatrix::identity(n); }
IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix::zeros(r, c); }
// 2J - I
IntMatrix twice_j_minus_i(std::size_t n) { return ones(n, n) * BigInt(2) - eye(n); }

void require_pg_or_epg(GraphKind graph) {
  require(graph == GraphKind::kPower || graph == GraphKind::kEnhanced,
          "the El(p^n) x El(q^m) forms cover the power and enhanced power graphs only");
}

IntMatrix build_t1(const ElabProductParams& k, GraphKind graph, MatrixKind matrix) {
  const long p = k.p, q = k.q;
  const BigInt pn = pw(p, k.n), qm = pw(q, k.m);
  const BigInt a = pn - 1, b = qm - 1;
  const bool epg = graph == GraphKind::kEnhanced;
  if (matrix == MatrixKind::kAdjacency) {
    return mat4({0, a, a * b, b,
                 1, p - 2, (p - 1) * b, epg ? b : BigInt(0),
                 1, p - 1, (p - 1) * (q - 1) - 1, q - 1,
                 1, epg ? a : BigInt(0), a * (q - 1), q - 2});
  }
  const BigInt w33 = 2 * a * b - (p - 1) * (q - 1) - 1;
  return mat4({0, a, a * b, b,
               1, 2 * pn - p - 2, (2 * pn - p - 1) * b, epg ? b : BigInt(2 * b),
               1, 2 * pn - p - 1, w33, 2 * qm - q - 1,
               1, epg ? a : BigInt(2 * a), a * (2 * qm - q - 1), 2 * qm - q - 2});
}

IntMatrix build_t2(const ElabProductParams& k, GraphKind graph, MatrixKind matrix) {
  const long p = k.p, q = k.q;
  const auto al = static_cast<std::size_t>(k.alpha());
  const auto be = static_cast<std::size_t>(k.beta());
  const std::size_t ga = al * be;
  const BigInt p1 = p - 1, q1 = q - 1, pq1 = p1 * q1;
  const bool epg = graph == GraphKind::kEnhanced;
  if (matrix == MatrixKind::kAdjacency) {
    return block({
        {zero(1, 1), ones(1, al) * p1, ones(1, ga) * pq1, ones(1, be) * q1},
        {ones(al, 1), eye(al) * BigInt(p - 2), kron(eye(al), ones(1, be)) * pq1,
         epg ? ones(al, be) * q1 : zero(al, be)},
        {ones(ga, 1), kron(eye(al), ones(be, 1)) * p1, eye(ga) * BigInt(pq1 - 1),
         kron(ones(al, 1), eye(be)) * q1},
        {ones(be, 1), epg ? ones(be, al) * p1 : zero(be, al), kron(ones(1, al), eye(be)) * pq1,
         eye(be) * BigInt(q - 2)},
    });
  }
  return block({
      {zero(1, 1), ones(1, al) * p1, ones(1, ga) * pq1, ones(1, be) * q1},
      {ones(al, 1), twice_j_minus_i(al) * BigInt(p) - ones(al, al) * BigInt(2),
       kron(twice_j_minus_i(al), ones(1, be)) * pq1, ones(al, be) * (epg ? q1 : BigInt(2 * q1))},
      {ones(ga, 1), kron(twice_j_minus_i(al), ones(be, 1)) * p1,
       twice_j_minus_i(ga) * pq1 - eye(ga), kron(ones(al, 1), twice_j_minus_i(be)) * q1},
      {ones(be, 1), ones(be, al) * (epg ? p1 : BigInt(2 * p1)),
       kron(ones(1, al), twice_j_minus_i(be)) * pq1,
       twice_j_minus_i(be) * BigInt(q) - ones(be, be) * BigInt(2)},
  });
}

}  // namespace

std::string_view graph_kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::kPower: return "power";
    case GraphKind::kEnhanced: return "enhanced";
    case GraphKind::kProperPower: return "proper-power";
  }
  return "unknown";
}

std::string_view matrix_kind_name(MatrixKind kind) {
  return kind == MatrixKind::kAdjacency ? "adjacency" : "distance";
}

void ElabProductParams::validate() const {
  require(is_prime(p) && is_prime(q), "p and q must be prime");
  require(p != q, "p != q required");
  require(n >= 1 && m >= 1, "n, m >= 1 required");
}

long ElabProductParams::alpha() const {
  return static_cast<long>((ipow(static_cast<unsigned long>(p), static_cast<unsigned>(n)) - 1) /
                           static_cast<unsigned long>(p - 1));
}

long ElabProductParams::beta() const {
  return static_cast<long>((ipow(static_cast<unsigned long>(q), static_cast<unsigned>(m)) - 1) /
                           static_cast<unsigned long>(q - 1));
}

long ElabProductParams::order() const {
  return static_cast<long>(ipow(static_cast<unsigned long>(p), static_cast<unsigned>(n)) *
                           ipow(static_cast<unsigned long>(q), static_cast<unsigned>(m)));
}

namespace closed_form {

FactoredPoly epg_gpq_distance(long p, long q) {
  require_gpq(p, q);
  const BigInt P = p, Q = q;
  FactoredPoly f;
  f.add(lin(1), mult(P * Q - Q - 2));
  f.add(lin(P), static_cast<unsigned>(q - 1));
  f.add(monic({-(P * Q * Q + P * Q - P - Q * Q), -2 * P * Q * Q - 2 * P * Q + 2 * Q * Q + 2 * P + 1,
               -2 * P * Q + P + Q + 2}));
  return f;
}

BigInt epg_gpq_determinant(long p, long q) {
  require_gpq(p, q);
  return pw(p, q - 1) * (BigInt(p) * (q * q + q - 1) - q * q);
}

FactoredPoly epg_dihedral_distance(long n) {
  require_n3(n);
  const BigInt N = n;
  FactoredPoly f;
  f.add(lin(2), static_cast<unsigned>(n - 1));
  f.add(lin(1), static_cast<unsigned>(n - 2));
  f.add(monic({-N * N - 2 * N + 2, -(2 * N * N + 4 * N - 5), -(3 * N - 4)}));
  return f;
}

IntPolynomial pg_dihedral_distance(long n, const IntPolynomial& pz, const IntPolynomial& pzstar) {
  require_n3(n);
  const BigInt N = n;
  const IntPolynomial lhs = IntPolynomial(std::vector<BigInt>{2 * (N + 1), 4 * N + 1}) * pz;
  const IntPolynomial rhs = IntPolynomial{1, 2}.pow(2) * pzstar * N;
  return lin(2).pow(static_cast<unsigned>(n - 1)) * (lhs - rhs);
}

FactoredPoly epg_dicyclic_distance(long n) {
  require_n3(n);
  const BigInt N = n;
  FactoredPoly f;
  f.add(lin(1), static_cast<unsigned>(3 * n - 2));
  f.add(lin(3), static_cast<unsigned>(n - 1));
  f.add(monic({-(6 * N - 3), -(8 * N * N + 4 * N - 7), -(6 * N - 5)}));
  return f;
}

FactoredPoly elab_product(const ElabProductParams& params, GraphKind graph, MatrixKind matrix) {
  params.validate();
  require_pg_or_epg(graph);
  const BigInt al = params.alpha(), be = params.beta();
  const auto bc = build_b_c(params, matrix);
  FactoredPoly f;
  f.add(char_poly(build_t1(params, graph, matrix)));
  f.add(lin(1), mult(BigInt(params.order()) - (al + 1) * (be + 1)));
  f.add(elab_product_middle_factor(params, matrix), mult((al - 1) * (be - 1)));
  f.add(char_poly(bc.b), mult(al - 1));
  f.add(char_poly(bc.c), mult(be - 1));
  return f;
}

FactoredPoly elab_times_cyclic_distance(long p, long n, long m) {
  require(is_prime(p), "p must be prime");
  require(n >= 2, "n >= 2 required");
  require(m >= 1, "m >= 1 required");
  require(std::gcd(m, p) == 1, "gcd(m, p) = 1 required");
  const BigInt P = p, M = m, pn = pw(p, n);
  const BigInt al = (pn - 1) / (P - 1);
  FactoredPoly f;
  f.add(lin(M * P - M + 1), mult(al - 1));
  f.add(lin(1), mult((M * P - M - 1) * al + M - 1));
  f.add(monic({M * M * (pn - P) - 2 * M * pn + M * P + 1, M * P + 2 - 2 * M * pn}));
  return f;
}

FactoredPoly elab_distance(long p, long n) {
  require(is_prime(p), "p must be prime");
  require(n >= 1, "n >= 1 required");
  const BigInt P = p, pn = pw(p, n);
  const BigInt al = (pn - 1) / (P - 1);
  FactoredPoly f;
  f.add(lin(P), mult(al - 1));
  f.add(lin(1), mult((P - 2) * al));
  f.add(monic({-(pn - 1), -(2 * pn - P - 2)}));
  return f;
}

IntPolynomial join_distance(const JoinSpec& spec, const IntMatrix& td) {
  const std::size_t k = spec.outer.vertex_count();
  if (spec.parts.size() != k) {
    throw Error(ErrorCode::kSizeMismatch, "join has " + std::to_string(spec.parts.size()) +
                                              " parts for " + std::to_string(k) + " outer vertices");
  }
  if (td.rows() != k || td.cols() != k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distance quotient must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  require(k > 0 && is_connected(spec.outer), "outer graph must be connected");
  require(diameter(spec.outer) <= 2, "outer graph must have diameter at most 2");
  IntPolynomial out = char_poly(td);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ni = spec.parts[i].vertex_count();
    if (ni == 0 || spec.parts[i].edge_count() != ni * (ni - 1) / 2) {
      throw Error(ErrorCode::kPartNotComplete, "part " + std::to_string(i) + " is not complete");
    }
    out *= lin(1).pow(static_cast<unsigned>(ni - 1));
  }
  return out;
}

}  // namespace closed_form

QuotientPair build_t1_t2(const ElabProductParams& params, GraphKind graph, MatrixKind matrix) {
  params.validate();
  require_pg_or_epg(graph);
  return {build_t1(params, graph, matrix), build_t2(params, graph, matrix)};
}

FactorMatrices build_b_c(const ElabProductParams& params, MatrixKind matrix) {
  params.validate();
  const BigInt p = params.p, q = params.q;
  const BigInt pn = pw(params.p, params.n), qm = pw(params.q, params.m);
  if (matrix == MatrixKind::kAdjacency) {
    return {mat2(p - 2, (p - 1) * (qm - 1), p - 1, (p - 1) * (q - 1) - 1),
            mat2((p - 1) * (q - 1) - 1, q - 1, (pn - 1) * (q - 1), q - 2)};
  }
  return {mat2(-p, (1 - p) * (qm - 1), 1 - p, (1 - p) * (q - 1) - 1),
          mat2((p - 1) * (1 - q) - 1, 1 - q, (pn - 1) * (1 - q), -q)};
}

IntPolynomial elab_product_middle_factor(const ElabProductParams& params, MatrixKind matrix) {
  return lin(-elab_product_structured_eigenvalue(params, matrix));
}

BigInt elab_product_structured_eigenvalue(const ElabProductParams& params, MatrixKind matrix) {
  params.validate();
  const BigInt p = params.p, q = params.q;
  if (matrix == MatrixKind::kAdjacency) return p * q - p - q;
  return -((p - 1) * (q - 1) + 1);
}

std::vector<BigInt> elab_product_structured_eigenvector(const ElabProductParams& params, long i,
                                                        long j) {
  params.validate();
  const long al = params.alpha(), be = params.beta();
  if (i < 1 || i >= al || j < 1 || j >= be) {
    throw Error(ErrorCode::kInvalidArguments,
                "eigenvector indices need 1 <= i < alpha and 1 <= j < beta");
  }
  std::vector<BigInt> y(static_cast<std::size_t>(1 + al + al * be + be), 0);
  const auto at = [&](long a, long b) -> BigInt& {
    return y[static_cast<std::size_t>(1 + al + (a - 1) * be + (b - 1))];
  };
  at(i, j) += 1;
  at(i, be) -= 1;
  at(al, j) -= 1;
  at(al, be) += 1;
  return y;
}

}  // namespace powerspec
