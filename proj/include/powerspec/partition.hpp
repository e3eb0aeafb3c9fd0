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


#ifndef POWERSPEC_PARTITION_HPP_
#define POWERSPEC_PARTITION_HPP_

#include <string_view>
#include <vector>

#include "powerspec/graph.hpp"
#include "powerspec/group.hpp"
#include "powerspec/matrix.hpp"

namespace powerspec {

// Ordered list of disjoint nonempty cells. Cell order is significant:
// quotient matrices are indexed by it.
struct Partition {
  std::vector<std::vector<Vertex>> cells;

  std::size_t size() const { return cells.size(); }
  // Throws Error(kNotAPartition) unless the cells are nonempty, ascending,
  // pairwise disjoint and cover 0..vertex_count-1.
  void validate(std::size_t vertex_count) const;
  // cell_of[v] = index of the cell holding v.
  std::vector<std::size_t> cell_index(std::size_t vertex_count) const;
  // Concatenation of the cells; maps join-form vertices onto graph vertices.
  std::vector<Vertex> flatten() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

bool is_equitable(const Graph& g, const Partition& p);

// Color refinement from the one-cell partition. Cells are ordered by their
// smallest vertex.
Partition coarsest_equitable_partition(const Graph& g);

// t_ij = |N(u) ∩ V_j| for u ∈ V_i. Throws Error(kNotEquitable).
IntMatrix quotient_matrix(const Graph& g, const Partition& p);

// The distance quotient for graphs of diameter at most two, built from the
// neighbor counts:  t_ii = 2|V_i| - 2 - t_ii,  t_ij = 2|V_j| - t_ij.
// Throws Error(kNotEquitable) or Error(kDiameterExceedsTwo).
IntMatrix distance_quotient_matrix(const Graph& g, const Partition& p);

// Constant block row sums of m with respect to p. Throws Error(kNotEquitable)
// when some block has non-constant row sums.
IntMatrix block_row_sum_quotient(const IntMatrix& m, const Partition& p);

enum class FamilyPartition {
  kGpqSylow,
  kDihedral,
  kDicyclic,
  kElabProductCoarse,
  kElabProductFine,
  kElabTimesCyclic,
};

std::string_view family_partition_name(FamilyPartition which);
// Throws Error(kParseError) for unknown names.
FamilyPartition parse_family_partition(std::string_view name);

// Named partitions of the group's vertex set, identity cell first.
//
//   gpq-sylow            {e}, q-Sylow*, then the q p-Sylow subgroups minus e
//   dihedral             {e}, <a>*, then each reflection alone
//   dicyclic             {e, a^n}, <a> minus those, then {a^i x, a^{i+n} x}
//   elab-product-coarse  V1..V4 for El(p^n) x El(q^m)
//   elab-product-fine    U1, V_1..V_alpha, W_{1,1}..W_{alpha,beta}, X_1..X_beta
//   elab-times-cyclic    {e} x Z_m, then C_i x Z_m per order-p subgroup C_i;
//                        a plain El(p^n) is accepted as the m = 1 case
//
// Throws Error(kFamilyMismatch) when the group was not built from the
// matching family.
Partition family_partition(const FiniteGroup& g, FamilyPartition which);

// Cells of P*(Z_n) by element order: generators first, then the elements of
// order d_1 < ... < d_t. Vertex k is element k + 1.
Partition cyclic_divisor_partition(unsigned long n);
// K_1 + Delta_n, the outer graph of the divisor join form of P*(Z_n).
Graph cyclic_divisor_outer_graph(unsigned long n);

}  // namespace powerspec

#endif  // POWERSPEC_PARTITION_HPP_
