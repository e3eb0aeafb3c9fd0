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


#include <gtest/gtest.h>

#include <array>
#include <functional>

#include "oracles.hpp"
#include "powerspec/error.hpp"
#include "powerspec/partition.hpp"

namespace powerspec {
namespace {

using Spec = GroupFamilySpec;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArguments;
}

std::vector<std::size_t> sizes(const Partition& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.cells) out.push_back(c.size());
  return out;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

struct Case {
  Spec spec;
  FamilyPartition which;
};

std::vector<Case> family_cases() {
  std::vector<Case> out;
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 7}, {2, 13}})
    out.push_back({Spec::gpq(p, q), FamilyPartition::kGpqSylow});
  for (long n = 3; n <= 10; ++n) out.push_back({Spec::dihedral(n), FamilyPartition::kDihedral});
  for (long n = 3; n <= 8; ++n) out.push_back({Spec::dicyclic(n), FamilyPartition::kDicyclic});
  for (auto [p, n, q, m] : std::vector<std::array<long, 4>>{{2, 2, 3, 1}, {2, 1, 3, 2}, {2, 2, 3, 2},
                                                            {3, 1, 2, 2}, {2, 3, 3, 1}, {3, 2, 2, 1}}) {
    const Spec s = Spec::product(Spec::elementary_abelian(p, n), Spec::elementary_abelian(q, m));
    out.push_back({s, FamilyPartition::kElabProductCoarse});
    out.push_back({s, FamilyPartition::kElabProductFine});
  }
  for (auto [p, n, m] : std::vector<std::array<long, 3>>{{2, 2, 3}, {2, 2, 5}, {3, 2, 2}, {2, 3, 3}})
    out.push_back({Spec::product(Spec::elementary_abelian(p, n), Spec::cyclic(m)),
                   FamilyPartition::kElabTimesCyclic});
  out.push_back({Spec::elementary_abelian(3, 2), FamilyPartition::kElabTimesCyclic});
  return out;
}

// Graphs on which each family partition is claimed equitable.
std::vector<Graph> claimed_graphs(const FiniteGroup& g, FamilyPartition which) {
  if (which == FamilyPartition::kElabProductCoarse || which == FamilyPartition::kElabProductFine)
    return {power_graph(g), enhanced_power_graph(g)};
  return {enhanced_power_graph(g)};
}

TEST(Partition, ValidateRejectsNonPartitions) {
  EXPECT_EQ(code_of([] { Partition{{{0}, {1}}}.validate(3); }), ErrorCode::kNotAPartition);
  EXPECT_EQ(code_of([] { Partition{{{0, 1}, {1, 2}}}.validate(3); }), ErrorCode::kNotAPartition);
  EXPECT_EQ(code_of([] { Partition{{{0, 1, 2}, {}}}.validate(3); }), ErrorCode::kNotAPartition);
  EXPECT_EQ(code_of([] { Partition{{{1, 0}, {2}}}.validate(3); }), ErrorCode::kNotAPartition);
  EXPECT_EQ(code_of([] { Partition{{{0, 3}}}.validate(3); }), ErrorCode::kNotAPartition);
  EXPECT_NO_THROW((Partition{{{0, 2}, {1}}}.validate(3)));
  EXPECT_EQ(code_of([] { is_equitable(complete_graph(3), Partition{{{0, 1}}}); }),
            ErrorCode::kNotAPartition);
}

TEST(IsEquitable, Examples) {
  EXPECT_TRUE(is_equitable(complete_graph(5), Partition{{{0, 1, 2, 3, 4}}}));
  EXPECT_TRUE(is_equitable(star_graph(3), Partition{{{0}, {1, 2, 3}}}));
  EXPECT_FALSE(is_equitable(star_graph(3), Partition{{{0, 1}, {2, 3}}}));
  const FiniteGroup g = make_group(Spec::product(Spec::elementary_abelian(2, 2),
                                                 Spec::elementary_abelian(3, 2)));
  EXPECT_TRUE(is_equitable(power_graph(g), family_partition(g, FamilyPartition::kElabProductCoarse)));
}

TEST(CoarsestEquitablePartition, Examples) {
  EXPECT_EQ(coarsest_equitable_partition(complete_graph(4)), (Partition{{{0, 1, 2, 3}}}));
  EXPECT_EQ(coarsest_equitable_partition(star_graph(3)), (Partition{{{0}, {1, 2, 3}}}));
  const Graph epg = enhanced_power_graph(make_group(Spec::dihedral(3)));
  EXPECT_EQ(coarsest_equitable_partition(epg), (Partition{{{0}, {1, 2}, {3, 4, 5}}}));
  EXPECT_EQ(coarsest_equitable_partition(path_graph(5)), (Partition{{{0, 4}, {1, 3}, {2}}}));
  EXPECT_EQ(coarsest_equitable_partition(Graph()).size(), 0u);
}

TEST(CoarsestEquitablePartition, IsEquitableAndRefinedByFamilyPartitions) {
  for (const auto& [spec, which] : family_cases()) {
    const FiniteGroup g = make_group(spec);
    const Partition named = family_partition(g, which);
    for (const Graph& gr : claimed_graphs(g, which)) {
      const Partition coarse = coarsest_equitable_partition(gr);
      EXPECT_TRUE(is_equitable(gr, coarse));
      const auto cell_of = coarse.cell_index(gr.vertex_count());
      for (const auto& cell : named.cells)
        for (Vertex v : cell) EXPECT_EQ(cell_of[v], cell_of[cell[0]]) << spec.to_string();
      EXPECT_LE(coarse.size(), named.size());
    }
  }
}

TEST(QuotientMatrix, Examples) {
  EXPECT_EQ(quotient_matrix(complete_graph(5), Partition{{{0, 1, 2, 3, 4}}}), (IntMatrix{{4}}));
  EXPECT_EQ(quotient_matrix(star_graph(3), Partition{{{0}, {1, 2, 3}}}), (IntMatrix{{0, 3}, {1, 0}}));
  const FiniteGroup g = make_group(Spec::product(Spec::elementary_abelian(2, 2),
                                                 Spec::elementary_abelian(3, 2)));
  const Partition coarse = family_partition(g, FamilyPartition::kElabProductCoarse);
  EXPECT_EQ(quotient_matrix(power_graph(g), coarse),
            (IntMatrix{{0, 3, 24, 8}, {1, 0, 8, 0}, {1, 1, 1, 2}, {1, 0, 6, 1}}));
  EXPECT_EQ(code_of([] { quotient_matrix(star_graph(3), Partition{{{0, 1}, {2, 3}}}); }),
            ErrorCode::kNotEquitable);
}

TEST(DistanceQuotientMatrix, Examples) {
  EXPECT_EQ(distance_quotient_matrix(complete_graph(5), Partition{{{0, 1, 2, 3, 4}}}), (IntMatrix{{4}}));
  const FiniteGroup gpq = make_group(Spec::gpq(2, 3));
  EXPECT_EQ(distance_quotient_matrix(enhanced_power_graph(gpq),
                                     family_partition(gpq, FamilyPartition::kGpqSylow)),
            (IntMatrix{{0, 2, 1, 1, 1}, {1, 1, 2, 2, 2}, {1, 4, 0, 2, 2}, {1, 4, 2, 0, 2}, {1, 4, 2, 2, 0}}));
  const FiniteGroup dic = make_group(Spec::dicyclic(3));
  EXPECT_EQ(distance_quotient_matrix(enhanced_power_graph(dic),
                                     family_partition(dic, FamilyPartition::kDicyclic)),
            (IntMatrix{{1, 4, 2, 2, 2}, {2, 3, 4, 4, 4}, {2, 8, 1, 4, 4}, {2, 8, 4, 1, 4}, {2, 8, 4, 4, 1}}));
}

TEST(DistanceQuotientMatrix, Errors) {
  const Graph c7 = cycle_graph(7);
  const Partition one{{{0, 1, 2, 3, 4, 5, 6}}};
  ASSERT_TRUE(is_equitable(c7, one));
  EXPECT_EQ(code_of([&] { distance_quotient_matrix(c7, one); }), ErrorCode::kDiameterExceedsTwo);
  EXPECT_EQ(code_of([] { distance_quotient_matrix(star_graph(3), Partition{{{0, 1}, {2, 3}}}); }),
            ErrorCode::kNotEquitable);
}

TEST(DistanceQuotientMatrix, EqualsBlockRowSumsAndDivides) {
  for (const auto& [spec, which] : family_cases()) {
    const FiniteGroup g = make_group(spec);
    const Partition p = family_partition(g, which);
    for (const Graph& gr : claimed_graphs(g, which)) {
      const IntMatrix d = distance_matrix(gr);
      const IntMatrix td = distance_quotient_matrix(gr, p);
      EXPECT_EQ(td, block_row_sum_quotient(d, p)) << spec.to_string();
      EXPECT_EQ(quotient_matrix(gr, p), block_row_sum_quotient(adjacency_matrix(gr), p));
      EXPECT_NO_THROW(poly_exact_div(char_poly(d), char_poly(td))) << spec.to_string();
    }
  }
}

TEST(BlockRowSumQuotient, RejectsUnevenBlocks) {
  const IntMatrix m{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  EXPECT_EQ(block_row_sum_quotient(m, Partition{{{0, 2}, {1}}}), (IntMatrix{{2, 1}, {2, 0}}));
  EXPECT_EQ(code_of([&] { block_row_sum_quotient(m, Partition{{{0, 1}, {2}}}); }), ErrorCode::kNotEquitable);
  EXPECT_EQ(code_of([] { block_row_sum_quotient(IntMatrix(2, 3), Partition{{{0, 1}}}); }),
            ErrorCode::kNotSquare);
}

TEST(FamilyPartition, CellSizes) {
  const FiniteGroup gpq = make_group(Spec::gpq(2, 3));
  EXPECT_EQ(sizes(family_partition(gpq, FamilyPartition::kGpqSylow)),
            (std::vector<std::size_t>{1, 2, 1, 1, 1}));
  const FiniteGroup g37 = make_group(Spec::gpq(3, 7));
  EXPECT_EQ(sizes(family_partition(g37, FamilyPartition::kGpqSylow)),
            (std::vector<std::size_t>{1, 6, 2, 2, 2, 2, 2, 2, 2}));

  const FiniteGroup el = make_group(Spec::product(Spec::elementary_abelian(2, 2),
                                                  Spec::elementary_abelian(3, 2)));
  std::vector<std::size_t> fine{1, 1, 1, 1};
  fine.insert(fine.end(), 12, 2);
  fine.insert(fine.end(), 4, 2);
  EXPECT_EQ(sizes(family_partition(el, FamilyPartition::kElabProductFine)), fine);
  EXPECT_EQ(sizes(family_partition(el, FamilyPartition::kElabProductCoarse)),
            (std::vector<std::size_t>{1, 3, 24, 8}));

  const FiniteGroup ez = make_group(Spec::product(Spec::elementary_abelian(2, 2), Spec::cyclic(3)));
  EXPECT_EQ(sizes(family_partition(ez, FamilyPartition::kElabTimesCyclic)),
            (std::vector<std::size_t>{3, 3, 3, 3}));
  const FiniteGroup el9 = make_group(Spec::elementary_abelian(3, 2));
  EXPECT_EQ(sizes(family_partition(el9, FamilyPartition::kElabTimesCyclic)),
            (std::vector<std::size_t>{1, 2, 2, 2, 2}));

  const FiniteGroup d8 = make_group(Spec::dihedral(4));
  EXPECT_EQ(family_partition(d8, FamilyPartition::kDihedral),
            (Partition{{{0}, {1, 2, 3}, {4}, {5}, {6}, {7}}}));
  const FiniteGroup dic = make_group(Spec::dicyclic(3));
  EXPECT_EQ(family_partition(dic, FamilyPartition::kDicyclic),
            (Partition{{{0, 3}, {1, 2, 4, 5}, {6, 9}, {7, 10}, {8, 11}}}));
}

TEST(FamilyPartition, EquitableWhereClaimed) {
  for (const auto& [spec, which] : family_cases()) {
    const FiniteGroup g = make_group(spec);
    const Partition p = family_partition(g, which);
    p.validate(g.order());
    EXPECT_EQ(p.cells[0][0], 0u);
    for (const Graph& gr : claimed_graphs(g, which)) EXPECT_TRUE(is_equitable(gr, p)) << spec.to_string();
  }
}

TEST(FamilyPartition, FineCellsAreTheNamedSets) {
  // W_{i,j} = <(a_i,b_j)> minus the two axis subgroups.
  const FiniteGroup g = make_group(Spec::product(Spec::elementary_abelian(2, 2),
                                                 Spec::elementary_abelian(3, 1)));
  const Partition fine = family_partition(g, FamilyPartition::kElabProductFine);
  ASSERT_EQ(fine.size(), 1u + 3 + 3 + 1);
  for (std::size_t k = 4; k < 7; ++k) {
    const auto& cell = fine.cells[k];
    const auto sub = cyclic_subgroup(g, cell[0]);
    EXPECT_EQ(sub.size(), 6u);
    std::vector<Vertex> expected;
    for (Element x : sub)
      if (element_order(g, x) == 6) expected.push_back(x);
    EXPECT_EQ(cell, expected);
  }
}

TEST(FamilyPartition, Mismatches) {
  const FiniteGroup gpq = make_group(Spec::gpq(2, 3));
  EXPECT_EQ(code_of([&] { family_partition(gpq, FamilyPartition::kDihedral); }), ErrorCode::kFamilyMismatch);
  EXPECT_EQ(code_of([&] { family_partition(gpq, FamilyPartition::kElabProductFine); }),
            ErrorCode::kFamilyMismatch);
  const FiniteGroup bare(2, {0, 1, 1, 0});
  EXPECT_EQ(code_of([&] { family_partition(bare, FamilyPartition::kGpqSylow); }), ErrorCode::kFamilyMismatch);
  const FiniteGroup same_prime = make_group(Spec::product(Spec::elementary_abelian(2, 1),
                                                          Spec::elementary_abelian(2, 1)));
  EXPECT_EQ(code_of([&] { family_partition(same_prime, FamilyPartition::kElabProductCoarse); }),
            ErrorCode::kFamilyMismatch);
}

TEST(FamilyPartition, Names) {
  for (auto which : {FamilyPartition::kGpqSylow, FamilyPartition::kDihedral, FamilyPartition::kDicyclic,
                     FamilyPartition::kElabProductCoarse, FamilyPartition::kElabProductFine,
                     FamilyPartition::kElabTimesCyclic})
    EXPECT_EQ(parse_family_partition(family_partition_name(which)), which);
  EXPECT_EQ(code_of([] { parse_family_partition("nope"); }), ErrorCode::kParseError);
}

TEST(CyclicDivisorPartition, Z12) {
  EXPECT_EQ(cyclic_divisor_partition(12),
            (Partition{{{0, 4, 6, 10}, {5}, {3, 7}, {2, 8}, {1, 9}}}));
  const Graph outer = cyclic_divisor_outer_graph(12);
  EXPECT_EQ(outer.vertex_count(), 5u);
  EXPECT_EQ(outer.edge_count(), 7u);
  // Divisors 2,3,4,6 sit at vertices 1..4: 2|4, 2|6, 3|6.
  EXPECT_TRUE(outer.has_edge(1, 3) && outer.has_edge(1, 4) && outer.has_edge(2, 4));
  EXPECT_FALSE(outer.has_edge(1, 2) || outer.has_edge(3, 4) || outer.has_edge(2, 3));
  EXPECT_EQ(cyclic_divisor_partition(7).size(), 1u);
  EXPECT_EQ(code_of([] { cyclic_divisor_partition(1); }), ErrorCode::kInvalidFamilyParameters);
}

TEST(CyclicDivisorPartition, EquitableOnProperPowerGraph) {
  for (unsigned long n = 2; n <= 40; ++n) {
    const Graph pstar = proper_power_graph(make_group(Spec::cyclic(static_cast<long>(n))));
    EXPECT_TRUE(is_equitable(pstar, cyclic_divisor_partition(n))) << n;
  }
}

}  // namespace
}  // namespace powerspec
