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


#ifndef POWERSPEC_THEOREMS_HPP_
#define POWERSPEC_THEOREMS_HPP_

#include <vector>

#include "powerspec/graph.hpp"
#include "powerspec/matrix.hpp"
#include "powerspec/polynomial.hpp"

namespace powerspec {

enum class GraphKind { kPower, kEnhanced, kProperPower };
enum class MatrixKind { kAdjacency, kDistance };

std::string_view graph_kind_name(GraphKind kind);
std::string_view matrix_kind_name(MatrixKind kind);

// El(p^n) x El(q^m) with p != q prime.
struct ElabProductParams {
  long p = 0;
  long n = 0;
  long q = 0;
  long m = 0;

  // Throws Error(kHypothesisViolated).
  void validate() const;
  // Number of order-p subgroups of El(p^n): (p^n - 1) / (p - 1).
  long alpha() const;
  long beta() const;
  long order() const;
};

// Closed-form characteristic polynomials. Each checks its hypotheses and
// throws Error(kHypothesisViolated) naming the one that fails.
namespace closed_form {

// Distance, enhanced power graph of the non-abelian group of order pq.
FactoredPoly epg_gpq_distance(long p, long q);
// p^{q-1} [p(q^2+q-1) - q^2]; equals |det D|.
BigInt epg_gpq_determinant(long p, long q);
FactoredPoly epg_dihedral_distance(long n);
// Distance char poly of P(D_2n) from those of P(Z_n) and P*(Z_n).
IntPolynomial pg_dihedral_distance(long n, const IntPolynomial& pz, const IntPolynomial& pzstar);
FactoredPoly epg_dicyclic_distance(long n);
FactoredPoly elab_product(const ElabProductParams& params, GraphKind graph, MatrixKind matrix);
FactoredPoly elab_times_cyclic_distance(long p, long n, long m);
FactoredPoly elab_distance(long p, long n);

// phi(td) * prod (x+1)^{n_i - 1} for a join whose parts are all complete.
// Throws Error(kPartNotComplete) otherwise, Error(kHypothesisViolated) when
// the outer graph is disconnected or has diameter above two.
IntPolynomial join_distance(const JoinSpec& spec, const IntMatrix& td);

}  // namespace closed_form

// The 4x4 quotient T1 (coarse partition) and the (1+a+ab+b)-square T2 (fine
// partition) of El(p^n) x El(q^m), or their distance analogues.
struct QuotientPair {
  IntMatrix t1;
  IntMatrix t2;
};
QuotientPair build_t1_t2(const ElabProductParams& params, GraphKind graph, MatrixKind matrix);

// The 2x2 matrices whose char polys f and g appear with exponents alpha-1
// and beta-1. They do not depend on the graph kind.
struct FactorMatrices {
  IntMatrix b;
  IntMatrix c;
};
FactorMatrices build_b_c(const ElabProductParams& params, MatrixKind matrix);

// x - pq + p + q (adjacency) or x + (p-1)(q-1) + 1 (distance).
IntPolynomial elab_product_middle_factor(const ElabProductParams& params, MatrixKind matrix);

// Eigenvalue carried by the W-block vectors v^i ⊗ w^j.
BigInt elab_product_structured_eigenvalue(const ElabProductParams& params, MatrixKind matrix);
// (0, 0_alpha, v^i ⊗ w^j, 0_beta) for 1 <= i < alpha, 1 <= j < beta, where
// v^i = e_i - e_alpha and w^j = e_j - e_beta.
std::vector<BigInt> elab_product_structured_eigenvector(const ElabProductParams& params,
                                                        long i, long j);

}  // namespace powerspec

#endif  // POWERSPEC_THEOREMS_HPP_
