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


#ifndef POWERSPEC_GRAPH_HPP_
#define POWERSPEC_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "powerspec/group.hpp"
#include "powerspec/matrix.hpp"

namespace powerspec {

using Vertex = std::uint32_t;

// Simple undirected graph on vertices 0..n-1, stored as one adjacency
// bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  // Idempotent. Throws Error(kInvalidGraph) for loops or bad indices.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::span<const std::uint64_t> row_bits(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
// K_{1,leaves}, center is vertex 0.
Graph star_graph(std::size_t leaves);
// K_1 + g: a new vertex 0 adjacent to every vertex of g (shifted by one).
Graph cone(const Graph& g);

// i ~ j iff i ∈ <j> or j ∈ <i>. Vertex order is element order.
Graph power_graph(const FiniteGroup& g);
// i ~ j iff some cyclic subgroup contains both.
Graph enhanced_power_graph(const FiniteGroup& g);
// Power graph with the identity removed; vertex k is element k + 1.
Graph proper_power_graph(const FiniteGroup& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

struct JoinSpec {
  Graph outer;
  std::vector<Graph> parts;
};

// outer[parts...]: blocks laid out consecutively in part order.
Graph graph_join(const JoinSpec& spec);

bool is_connected(const Graph& g);
// Throws Error(kDisconnectedGraph).
IntMatrix distance_matrix(const Graph& g);
IntMatrix adjacency_matrix(const Graph& g);
// Throws Error(kDisconnectedGraph); the empty graph is rejected as well.
unsigned diameter(const Graph& g);

// bijection[join_vertex] = vertex of g. Checks labeled edge-set equality.
// Throws Error(kSizeMismatch) when the sizes disagree or the map is not a
// bijection.
bool verify_join_form(const Graph& g, const JoinSpec& spec, std::span<const Vertex> bijection);

// The outer graph of the power-graph join form of El(p^n) x El(q^m), on
// alpha + alpha*beta + beta vertices: V_i, then W_{i,j} row-major, then X_j.
Graph figure1_gamma(unsigned alpha, unsigned beta);
// figure1_gamma plus every edge V_i -- X_j.
Graph figure1_gamma_prime(unsigned alpha, unsigned beta);

}  // namespace powerspec

#endif  // POWERSPEC_GRAPH_HPP_
