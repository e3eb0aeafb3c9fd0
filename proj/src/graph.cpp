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


#include "powerspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "powerspec/error.hpp"

namespace powerspec {

namespace {

constexpr unsigned kUnreached = std::numeric_limits<unsigned>::max();

// BFS distances from source; kUnreached for other components.
std::vector<unsigned> bfs_levels(const Graph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.words_per_row();
  std::vector<unsigned> dist(n, kUnreached);
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  dist[source] = 0;
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier[source / 64] |= std::uint64_t{1} << (source % 64);
  for (unsigned level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        const auto row = g.row_bits(v);
        for (std::size_t k = 0; k < words; ++k) next[k] |= row[k];
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      for (std::uint64_t bits = next[w]; bits != 0; bits &= bits - 1) {
        dist[w * 64 + std::countr_zero(bits)] = level;
        any = true;
      }
    }
    if (!any) break;
    std::swap(frontier, next);
  }
  return dist;
}

}  // namespace

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), bits_(n_ * words_, 0) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw Error(ErrorCode::kInvalidGraph, "edge {" + std::to_string(u) + "," +
                                              std::to_string(v) + "} has an out-of-range endpoint");
  }
  if (u == v) throw Error(ErrorCode::kInvalidGraph, "self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++edges_;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row_bits(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto row = row_bits(v);
  for (std::size_t w = 0; w < words_; ++w)
    for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph cone(const Graph& g) {
  Graph out(g.vertex_count() + 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out.add_edge(0, v + 1);
    for (Vertex u : g.neighbors(v))
      if (u > v) out.add_edge(u + 1, v + 1);
  }
  return out;
}

Graph power_graph(const FiniteGroup& grp) {
  Graph g(grp.order());
  for (Element x = 0; x < grp.order(); ++x)
    for (Element y : cyclic_subgroup(grp, x))
      if (y != x) g.add_edge(x, y);
  return g;
}

Graph enhanced_power_graph(const FiniteGroup& grp) {
  Graph g(grp.order());
  for (const auto& sub : cyclic_subgroups(grp))
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) g.add_edge(sub[i], sub[j]);
  return g;
}

Graph proper_power_graph(const FiniteGroup& grp) {
  std::vector<Vertex> keep;
  for (Vertex v = 1; v < grp.order(); ++v) keep.push_back(v);
  return induced_subgraph(power_graph(grp), keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidGraph, "induced_subgraph: repeated vertex");
  }
  if (!sorted.empty() && sorted.back() >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidGraph, "induced_subgraph: vertex out of range");
  }
  Graph out(sorted.size());
  for (Vertex i = 0; i < sorted.size(); ++i)
    for (Vertex j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j])) out.add_edge(i, j);
  return out;
}

Graph graph_join(const JoinSpec& spec) {
  const std::size_t p = spec.outer.vertex_count();
  if (spec.parts.size() != p) {
    throw Error(ErrorCode::kSizeMismatch, "join has " + std::to_string(spec.parts.size()) +
                                              " parts for an outer graph on " + std::to_string(p) +
                                              " vertices");
  }
  std::vector<Vertex> offset(p + 1, 0);
  for (std::size_t i = 0; i < p; ++i)
    offset[i + 1] = offset[i] + static_cast<Vertex>(spec.parts[i].vertex_count());
  Graph out(offset[p]);
  for (std::size_t i = 0; i < p; ++i) {
    const Graph& part = spec.parts[i];
    for (Vertex u = 0; u < part.vertex_count(); ++u)
      for (Vertex v : part.neighbors(u))
        if (v > u) out.add_edge(offset[i] + u, offset[i] + v);
    for (Vertex j : spec.outer.neighbors(static_cast<Vertex>(i))) {
      if (j <= i) continue;
      for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
        for (Vertex v = offset[j]; v < offset[j + 1]; ++v) out.add_edge(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  for (unsigned d : bfs_levels(g, 0))
    if (d == kUnreached) return false;
  return true;
}

IntMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix d(n, n);
  for (Vertex s = 0; s < n; ++s) {
    const auto levels = bfs_levels(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (levels[t] == kUnreached) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "vertices " + std::to_string(s) + " and " + std::to_string(t) +
                        " lie in different components");
      }
      d(s, t) = levels[t];
    }
  }
  return d;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix a(n, n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) a(u, v) = 1;
  return a;
}

unsigned diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::kDisconnectedGraph, "diameter of the empty graph");
  unsigned best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (unsigned d : bfs_levels(g, s)) {
      if (d == kUnreached) throw Error(ErrorCode::kDisconnectedGraph, "graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

bool verify_join_form(const Graph& g, const JoinSpec& spec, std::span<const Vertex> bijection) {
  const Graph joined = graph_join(spec);
  const std::size_t n = joined.vertex_count();
  if (n != g.vertex_count() || bijection.size() != n) {
    throw Error(ErrorCode::kSizeMismatch,
                "join form has " + std::to_string(n) + " vertices, graph has " +
                    std::to_string(g.vertex_count()) + ", bijection has " +
                    std::to_string(bijection.size()));
  }
  std::vector<bool> hit(n, false);
  for (Vertex v : bijection) {
    if (v >= n || hit[v]) throw Error(ErrorCode::kSizeMismatch, "vertex map is not a bijection");
    hit[v] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (joined.has_edge(u, v) != g.has_edge(bijection[u], bijection[v])) return false;
  return true;
}

Graph figure1_gamma(unsigned alpha, unsigned beta) {
  Graph g(alpha + alpha * beta + beta);
  for (unsigned i = 0; i < alpha; ++i)
    for (unsigned j = 0; j < beta; ++j) {
      const Vertex w = alpha + i * beta + j;
      g.add_edge(i, w);
      g.add_edge(alpha + alpha * beta + j, w);
    }
  return g;
}

Graph figure1_gamma_prime(unsigned alpha, unsigned beta) {
  Graph g = figure1_gamma(alpha, beta);
  for (unsigned i = 0; i < alpha; ++i)
    for (unsigned j = 0; j < beta; ++j) g.add_edge(i, alpha + alpha * beta + j);
  return g;
}

}  // namespace powerspec
