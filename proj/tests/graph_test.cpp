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

#include "oracles.hpp"
#include "powerspec/error.hpp"
#include "powerspec/graph.hpp"
#include "powerspec/partition.hpp"

namespace powerspec {
namespace {

using Spec = GroupFamilySpec;

std::vector<Spec> sweep_specs() {
  std::vector<Spec> out;
  for (long n = 1; n <= 16; ++n) out.push_back(Spec::cyclic(n));
  for (long n = 3; n <= 12; ++n) out.push_back(Spec::dihedral(n));
  for (long n = 3; n <= 8; ++n) out.push_back(Spec::dicyclic(n));
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 7}, {2, 11}})
    out.push_back(Spec::gpq(p, q));
  for (auto [p, n] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}})
    out.push_back(Spec::elementary_abelian(p, n));
  out.push_back(Spec::product(Spec::elementary_abelian(2, 2), Spec::elementary_abelian(3, 2)));
  out.push_back(Spec::product(Spec::elementary_abelian(2, 2), Spec::cyclic(3)));
  out.push_back(Spec::product(Spec::dihedral(3), Spec::cyclic(2)));
  return out;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_subgraph(const Graph& a, const Graph& b) {
  for (Vertex u = 0; u < a.vertex_count(); ++u)
    for (Vertex v : a.neighbors(u))
      if (!b.has_edge(u, v)) return false;
  return true;
}

TEST(Graph, AddEdgeIsIdempotentAndChecked) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_THROW(g.add_edge(2, 2), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
}

TEST(Graph, WideRowsCrossWordBoundaries) {
  Graph g(130);
  g.add_edge(0, 129);
  g.add_edge(64, 65);
  EXPECT_EQ(g.neighbors(129), std::vector<Vertex>{0});
  EXPECT_EQ(g.neighbors(65), std::vector<Vertex>{64});
  EXPECT_EQ(g.words_per_row(), 3u);
}

TEST(PowerGraph, CyclicOfPrimeOrderIsComplete) {
  for (long p : {2, 3, 5, 7, 13}) EXPECT_TRUE(is_complete(power_graph(make_group(Spec::cyclic(p)))));
}

TEST(PowerGraph, ElementaryAbelianEqualsEnhanced) {
  for (auto [p, n] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}}) {
    const FiniteGroup g = make_group(Spec::elementary_abelian(p, n));
    EXPECT_EQ(power_graph(g), enhanced_power_graph(g));
  }
}

TEST(PowerGraph, D6) {
  const Graph g = power_graph(make_group(Spec::dihedral(3)));
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
  for (Vertex r = 3; r < 6; ++r) EXPECT_EQ(g.neighbors(r), std::vector<Vertex>{0});
}

TEST(EnhancedPowerGraph, CyclicIsComplete) {
  for (long n : {1, 4, 6, 12, 30}) EXPECT_TRUE(is_complete(enhanced_power_graph(make_group(Spec::cyclic(n)))));
}

TEST(EnhancedPowerGraph, El4IsAStar) {
  const Graph g = enhanced_power_graph(make_group(Spec::elementary_abelian(2, 2)));
  EXPECT_EQ(g, star_graph(3));
}

TEST(EnhancedPowerGraph, Dic12JoinForm) {
  const FiniteGroup g = make_group(Spec::dicyclic(3));
  const Graph epg = enhanced_power_graph(g);
  const JoinSpec spec{star_graph(4), {complete_graph(2), complete_graph(4), complete_graph(2),
                                      complete_graph(2), complete_graph(2)}};
  const Partition cells = family_partition(g, FamilyPartition::kDicyclic);
  EXPECT_TRUE(verify_join_form(epg, spec, cells.flatten()));
}

TEST(GroupGraphs, MatchBruteForceDefinitions) {
  for (const auto& s : sweep_specs()) {
    const FiniteGroup g = make_group(s);
    EXPECT_EQ(power_graph(g), oracle::power_graph(g)) << s.to_string();
    EXPECT_EQ(enhanced_power_graph(g), oracle::enhanced_power_graph(g)) << s.to_string();
  }
}

TEST(GroupGraphs, PowerIsSubgraphOfEnhancedAndDiameterAtMostTwo) {
  for (const auto& s : sweep_specs()) {
    const FiniteGroup g = make_group(s);
    const Graph pg = power_graph(g), epg = enhanced_power_graph(g);
    EXPECT_TRUE(is_subgraph(pg, epg)) << s.to_string();
    EXPECT_LE(diameter(epg), 2u) << s.to_string();
    EXPECT_LE(diameter(pg), 2u) << s.to_string();
    EXPECT_EQ(epg.degree(0), g.order() - 1);
  }
}

TEST(GroupGraphs, ElabProductComponentwiseCriteria) {
  const FiniteGroup a = make_group(Spec::elementary_abelian(2, 2));
  const FiniteGroup b = make_group(Spec::elementary_abelian(3, 2));
  const FiniteGroup g = make_group(Spec::product(Spec::elementary_abelian(2, 2),
                                                 Spec::elementary_abelian(3, 2)));
  const Graph pg = power_graph(g), epg = enhanced_power_graph(g);
  const Graph pa = power_graph(a), pb = power_graph(b);
  const auto in = [](const FiniteGroup& grp, Element y, Element x) {
    const auto sub = cyclic_subgroup(grp, x);
    return std::binary_search(sub.begin(), sub.end(), y);
  };
  const std::size_t nb = b.order();
  for (Element u = 0; u < g.order(); ++u)
    for (Element v = u + 1; v < g.order(); ++v) {
      const Element a1 = u / nb, b1 = u % nb, a2 = v / nb, b2 = v % nb;
      const bool shared = (a1 == a2 || a1 == 0 || a2 == 0 || pa.has_edge(a1, a2)) &&
                          (b1 == b2 || b1 == 0 || b2 == 0 || pb.has_edge(b1, b2));
      EXPECT_EQ(epg.has_edge(u, v), shared);
      const bool v_in_u = in(a, a2, a1) && in(b, b2, b1);
      const bool u_in_v = in(a, a1, a2) && in(b, b1, b2);
      EXPECT_EQ(pg.has_edge(u, v), v_in_u || u_in_v);
    }
  EXPECT_EQ(pg.edge_count(), 123u);
  EXPECT_EQ(epg.edge_count(), 147u);
}

TEST(PowerGraph, PowerEqualsEnhancedForPrimePowerCyclicSubgroups) {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {3, 7}, {2, 13}}) {
    const FiniteGroup g = make_group(Spec::gpq(p, q));
    EXPECT_EQ(power_graph(g), enhanced_power_graph(g));
  }
  for (long n : {4, 8}) {
    const FiniteGroup g = make_group(Spec::dicyclic(n));
    EXPECT_EQ(power_graph(g), enhanced_power_graph(g));
  }
  const FiniteGroup dic12 = make_group(Spec::dicyclic(3));
  EXPECT_NE(power_graph(dic12), enhanced_power_graph(dic12));
}

TEST(InducedSubgraph, Examples) {
  const std::vector<Vertex> keep{0, 2, 3};
  EXPECT_EQ(induced_subgraph(complete_graph(4), keep), complete_graph(3));
  const Graph z6 = proper_power_graph(make_group(Spec::cyclic(6)));
  EXPECT_EQ(z6.vertex_count(), 5u);
  // Elements 1 and 5 generate Z_6; they are vertices 0 and 4.
  EXPECT_EQ(z6.degree(0), 4u);
  EXPECT_EQ(z6.degree(4), 4u);
  const Graph el9 = proper_power_graph(make_group(Spec::elementary_abelian(3, 2)));
  EXPECT_EQ(el9.vertex_count(), 8u);
  EXPECT_EQ(el9.edge_count(), 4u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(el9.degree(v), 1u);
  EXPECT_FALSE(is_connected(el9));
  const std::vector<Vertex> repeated{1, 1};
  EXPECT_THROW(induced_subgraph(complete_graph(3), repeated), Error);
}

TEST(GraphJoin, Examples) {
  EXPECT_EQ(graph_join({complete_graph(2), {complete_graph(1), complete_graph(1)}}), complete_graph(2));
  EXPECT_EQ(graph_join({star_graph(3), std::vector<Graph>(4, complete_graph(1))}), star_graph(3));
  const FiniteGroup g = make_group(Spec::gpq(2, 3));
  const JoinSpec spec{star_graph(4), {complete_graph(1), complete_graph(2), complete_graph(1),
                                      complete_graph(1), complete_graph(1)}};
  const Partition cells = family_partition(g, FamilyPartition::kGpqSylow);
  EXPECT_TRUE(verify_join_form(enhanced_power_graph(g), spec, cells.flatten()));
}

TEST(GraphJoin, Counts) {
  const JoinSpec spec{path_graph(3), {complete_graph(2), path_graph(3), complete_graph(4)}};
  const Graph g = graph_join(spec);
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 1u + 2u + 6u + 2 * 3 + 3 * 4);
  EXPECT_THROW(graph_join({path_graph(3), {complete_graph(1)}}), Error);
}

TEST(DistanceMatrix, Examples) {
  EXPECT_EQ(distance_matrix(complete_graph(3)), (IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(distance_matrix(path_graph(3)), (IntMatrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  EXPECT_EQ(distance_matrix(star_graph(3)),
            (IntMatrix{{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}}));
  Graph disconnected(3);
  disconnected.add_edge(0, 1);
  try {
    distance_matrix(disconnected);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedGraph);
  }
}

TEST(DistanceMatrix, MatchesFloydWarshallAndIsAMetric) {
  std::vector<Graph> graphs{path_graph(70), cone(path_graph(9)), graph_join({path_graph(4), {complete_graph(3), path_graph(2), complete_graph(1), complete_graph(2)}})};
  for (const auto& s : sweep_specs()) {
    const FiniteGroup g = make_group(s);
    graphs.push_back(power_graph(g));
    graphs.push_back(enhanced_power_graph(g));
  }
  for (const auto& g : graphs) {
    const IntMatrix d = distance_matrix(g);
    EXPECT_EQ(d, oracle::floyd_warshall(g));
    EXPECT_TRUE(d.is_symmetric());
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(d(i, i), 0);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; k += 7) EXPECT_LE(d(i, j), d(i, k) + d(k, j));
    }
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(complete_graph(5)), 1u);
  EXPECT_EQ(diameter(star_graph(3)), 2u);
  EXPECT_EQ(diameter(path_graph(70)), 69u);
  EXPECT_THROW(diameter(Graph(2)), Error);
  EXPECT_THROW(diameter(Graph()), Error);
}

TEST(AdjacencyMatrix, Star) {
  EXPECT_EQ(adjacency_matrix(star_graph(2)), (IntMatrix{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
}

TEST(VerifyJoinForm, D6AndSwappedBijection) {
  const FiniteGroup g = make_group(Spec::dihedral(3));
  const JoinSpec spec{star_graph(4), {complete_graph(1), complete_graph(2), complete_graph(1),
                                      complete_graph(1), complete_graph(1)}};
  std::vector<Vertex> bijection = family_partition(g, FamilyPartition::kDihedral).flatten();
  const Graph epg = enhanced_power_graph(g);
  EXPECT_TRUE(verify_join_form(epg, spec, bijection));
  std::swap(bijection[1], bijection[3]);
  EXPECT_FALSE(verify_join_form(epg, spec, bijection));
  const std::vector<Vertex> short_map{0, 1, 2};
  EXPECT_THROW(verify_join_form(epg, spec, short_map), Error);
  const std::vector<Vertex> not_bijective{0, 0, 2, 3, 4, 5};
  EXPECT_THROW(verify_join_form(epg, spec, not_bijective), Error);
}

TEST(VerifyJoinForm, CyclicDivisorForm) {
  for (unsigned long n : {6ul, 8ul, 12ul, 30ul}) {
    const Graph pstar = proper_power_graph(make_group(Spec::cyclic(static_cast<long>(n))));
    const Partition cells = cyclic_divisor_partition(n);
    JoinSpec spec{cyclic_divisor_outer_graph(n), {}};
    for (const auto& cell : cells.cells) spec.parts.push_back(complete_graph(cell.size()));
    EXPECT_TRUE(verify_join_form(pstar, spec, cells.flatten())) << n;
  }
}

TEST(Figure1, GammaExamples) {
  EXPECT_EQ(figure1_gamma(1, 1), path_graph(3));
  const Graph g34 = figure1_gamma(3, 4);
  EXPECT_EQ(g34.vertex_count(), 19u);
  EXPECT_EQ(g34.edge_count(), 24u);
  // 1 - W1 - X1 - W2 - 2 with vertices V1=0, V2=1, W1=2, W2=3, X1=4.
  const Graph g21 = figure1_gamma(2, 1);
  EXPECT_EQ(g21.edge_count(), 4u);
  EXPECT_TRUE(g21.has_edge(0, 2) && g21.has_edge(2, 4) && g21.has_edge(4, 3) && g21.has_edge(3, 1));
  // V_i is adjacent to exactly its own row of W.
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex w = 3; w < 15; ++w) EXPECT_EQ(g34.has_edge(i, w), (w - 3) / 4 == i);
}

TEST(Figure1, GammaPrimeExamples) {
  EXPECT_EQ(figure1_gamma_prime(1, 1), complete_graph(3));
  EXPECT_EQ(figure1_gamma_prime(3, 4).edge_count(), 36u);
}

TEST(VerifyJoinForm, ElabProductConeForms) {
  const long p = 2, q = 3;
  const unsigned alpha = 3, beta = 4;
  const FiniteGroup g = make_group(Spec::product(Spec::elementary_abelian(p, 2),
                                                 Spec::elementary_abelian(q, 2)));
  const auto bijection = family_partition(g, FamilyPartition::kElabProductFine).flatten();
  std::vector<Graph> parts{complete_graph(1)};
  for (unsigned i = 0; i < alpha; ++i) parts.push_back(complete_graph(p - 1));
  for (unsigned k = 0; k < alpha * beta; ++k) parts.push_back(complete_graph((p - 1) * (q - 1)));
  for (unsigned j = 0; j < beta; ++j) parts.push_back(complete_graph(q - 1));
  EXPECT_TRUE(verify_join_form(power_graph(g), {cone(figure1_gamma(alpha, beta)), parts}, bijection));
  EXPECT_TRUE(verify_join_form(enhanced_power_graph(g), {cone(figure1_gamma_prime(alpha, beta)), parts},
                               bijection));
  EXPECT_FALSE(verify_join_form(power_graph(g), {cone(figure1_gamma_prime(alpha, beta)), parts},
                                bijection));
}

}  // namespace
}  // namespace powerspec
