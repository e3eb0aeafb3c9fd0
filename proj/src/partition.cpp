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


#include "powerspec/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "powerspec/error.hpp"

namespace powerspec {

namespace {

using Counts = std::vector<std::size_t>;

// Neighbor counts of v per cell.
Counts signature(const Graph& g, Vertex v, const std::vector<std::size_t>& cell_of,
                 std::size_t cells) {
  Counts c(cells, 0);
  for (Vertex u : g.neighbors(v)) ++c[cell_of[u]];
  return c;
}

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorCode::kFamilyMismatch, what);
}

const GroupFamilySpec& require_family(const FiniteGroup& g, FamilyPartition which) {
  if (!g.family()) {
    mismatch("partition " + std::string(family_partition_name(which)) +
             " needs a group built from a named family");
  }
  return *g.family();
}

bool is_elab(const GroupFamilySpec& s) { return s.family == Family::kElementaryAbelian; }

// Order-p subgroups of El(p^n) minus the identity, lexicographic order.
std::vector<std::vector<Element>> punctured_lines(const GroupFamilySpec& elab) {
  auto subs = cyclic_subgroups(make_group(elab));
  std::vector<std::vector<Element>> out;
  for (auto& s : subs) {
    if (s.size() == 1) continue;
    s.erase(s.begin());
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Vertex> product_cell(std::span<const Element> a, std::span<const Element> b,
                                 std::size_t nb) {
  std::vector<Vertex> cell;
  for (Element x : a)
    for (Element y : b) cell.push_back(static_cast<Vertex>(x * nb + y));
  std::sort(cell.begin(), cell.end());
  return cell;
}

std::vector<Element> range(Element lo, Element hi) {
  std::vector<Element> r(hi - lo);
  std::iota(r.begin(), r.end(), lo);
  return r;
}

Partition gpq_sylow(const FiniteGroup& g, const GroupFamilySpec& f) {
  if (f.family != Family::kGpq) mismatch("gpq-sylow needs a gpq group");
  const auto p = static_cast<std::size_t>(f.params[0]);
  const auto q = static_cast<Element>(f.params[1]);
  Partition out{{{0}, range(1, q)}};
  for (auto& s : cyclic_subgroups(g)) {
    if (s.size() != p) continue;
    s.erase(s.begin());
    out.cells.push_back(std::move(s));
  }
  return out;
}

Partition dihedral_cells(const GroupFamilySpec& f) {
  if (f.family != Family::kDihedral) mismatch("dihedral partition needs a dihedral group");
  const auto n = static_cast<Element>(f.params[0]);
  Partition out{{{0}, range(1, n)}};
  for (Element i = 0; i < n; ++i) out.cells.push_back({n + i});
  return out;
}

Partition dicyclic_cells(const GroupFamilySpec& f) {
  if (f.family != Family::kDicyclic) mismatch("dicyclic partition needs a dicyclic group");
  const auto n = static_cast<Element>(f.params[0]);
  Partition out{{{0, n}, {}}};
  for (Element i = 1; i < 2 * n; ++i)
    if (i != n) out.cells[1].push_back(i);
  for (Element i = 0; i < n; ++i) out.cells.push_back({2 * n + i, 3 * n + i});
  return out;
}

void require_elab_pair(const GroupFamilySpec& f, FamilyPartition which) {
  if (f.family != Family::kDirectProduct || !is_elab(f.factors[0]) || !is_elab(f.factors[1])) {
    mismatch(std::string(family_partition_name(which)) + " needs El(p^n) x El(q^m)");
  }
  if (f.factors[0].params[0] == f.factors[1].params[0]) {
    mismatch(std::string(family_partition_name(which)) + " needs distinct primes p != q");
  }
}

Partition elab_coarse(const GroupFamilySpec& f) {
  require_elab_pair(f, FamilyPartition::kElabProductCoarse);
  const auto na = static_cast<Element>(f.factors[0].order());
  const auto nb = static_cast<Element>(f.factors[1].order());
  const std::vector<Element> e{0};
  const auto a = range(1, na), b = range(1, nb);
  return Partition{{{0}, product_cell(a, e, nb), product_cell(a, b, nb), product_cell(e, b, nb)}};
}

Partition elab_fine(const GroupFamilySpec& f) {
  require_elab_pair(f, FamilyPartition::kElabProductFine);
  const auto nb = static_cast<std::size_t>(f.factors[1].order());
  const auto lines_a = punctured_lines(f.factors[0]);
  const auto lines_b = punctured_lines(f.factors[1]);
  const std::vector<Element> e{0};
  Partition out{{{0}}};
  for (const auto& a : lines_a) out.cells.push_back(product_cell(a, e, nb));
  for (const auto& a : lines_a)
    for (const auto& b : lines_b) out.cells.push_back(product_cell(a, b, nb));
  for (const auto& b : lines_b) out.cells.push_back(product_cell(e, b, nb));
  return out;
}

Partition elab_times_cyclic(const GroupFamilySpec& f) {
  const GroupFamilySpec* elab = nullptr;
  long m = 1;
  if (is_elab(f)) {
    elab = &f;
  } else if (f.family == Family::kDirectProduct && is_elab(f.factors[0]) &&
             f.factors[1].family == Family::kCyclic) {
    elab = &f.factors[0];
    m = f.factors[1].params[0];
  } else {
    mismatch("elab-times-cyclic needs El(p^n) x Z_m or El(p^n)");
  }
  const auto nb = static_cast<std::size_t>(m);
  const std::vector<Element> e{0};
  const auto z = range(0, static_cast<Element>(m));
  Partition out{{product_cell(e, z, nb)}};
  for (const auto& a : punctured_lines(*elab)) out.cells.push_back(product_cell(a, z, nb));
  return out;
}

}  // namespace

void Partition::validate(std::size_t vertex_count) const {
  std::vector<bool> seen(vertex_count, false);
  std::size_t covered = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    if (cell.empty()) throw Error(ErrorCode::kNotAPartition, "cell " + std::to_string(c) + " is empty");
    for (std::size_t k = 0; k < cell.size(); ++k) {
      const Vertex v = cell[k];
      if (v >= vertex_count) {
        throw Error(ErrorCode::kNotAPartition, "vertex " + std::to_string(v) + " is out of range");
      }
      if (k > 0 && cell[k - 1] >= v) {
        throw Error(ErrorCode::kNotAPartition, "cell " + std::to_string(c) + " is not ascending");
      }
      if (seen[v]) {
        throw Error(ErrorCode::kNotAPartition, "vertex " + std::to_string(v) + " lies in two cells");
      }
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != vertex_count) {
    throw Error(ErrorCode::kNotAPartition, "cells cover " + std::to_string(covered) + " of " +
                                               std::to_string(vertex_count) + " vertices");
  }
}

std::vector<std::size_t> Partition::cell_index(std::size_t vertex_count) const {
  validate(vertex_count);
  std::vector<std::size_t> out(vertex_count);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (Vertex v : cells[c]) out[v] = c;
  return out;
}

std::vector<Vertex> Partition::flatten() const {
  std::vector<Vertex> out;
  for (const auto& cell : cells) out.insert(out.end(), cell.begin(), cell.end());
  return out;
}

bool is_equitable(const Graph& g, const Partition& p) {
  const auto cell_of = p.cell_index(g.vertex_count());
  for (const auto& cell : p.cells) {
    const Counts first = signature(g, cell[0], cell_of, p.size());
    for (std::size_t k = 1; k < cell.size(); ++k)
      if (signature(g, cell[k], cell_of, p.size()) != first) return false;
  }
  return true;
}

Partition coarsest_equitable_partition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> color(n, 0);
  std::size_t colors = n == 0 ? 0 : 1;
  for (;;) {
    std::map<std::pair<std::size_t, Counts>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      auto key = std::make_pair(color[v], signature(g, v, color, colors));
      next[v] = ids.emplace(std::move(key), ids.size()).first->second;
    }
    const bool stable = ids.size() == colors;
    color = std::move(next);
    colors = ids.size();
    if (stable) break;
  }
  Partition out;
  out.cells.resize(colors);
  for (Vertex v = 0; v < n; ++v) out.cells[color[v]].push_back(v);
  return out;
}

IntMatrix quotient_matrix(const Graph& g, const Partition& p) {
  if (!is_equitable(g, p)) throw Error(ErrorCode::kNotEquitable, "partition is not equitable");
  const auto cell_of = p.cell_index(g.vertex_count());
  IntMatrix t(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Counts c = signature(g, p.cells[i][0], cell_of, p.size());
    for (std::size_t j = 0; j < p.size(); ++j) t(i, j) = static_cast<unsigned long>(c[j]);
  }
  return t;
}

IntMatrix distance_quotient_matrix(const Graph& g, const Partition& p) {
  IntMatrix t = quotient_matrix(g, p);
  const unsigned d = diameter(g);
  if (d > 2) {
    throw Error(ErrorCode::kDiameterExceedsTwo, "graph has diameter " + std::to_string(d));
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      const BigInt size = static_cast<unsigned long>(p.cells[j].size());
      t(i, j) = i == j ? BigInt(2 * size - 2 - t(i, j)) : BigInt(2 * size - t(i, j));
    }
  return t;
}

IntMatrix block_row_sum_quotient(const IntMatrix& m, const Partition& p) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "block_row_sum_quotient needs a square matrix");
  p.validate(m.rows());
  IntMatrix t(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (std::size_t k = 0; k < p.cells[i].size(); ++k) {
        BigInt sum = 0;
        for (Vertex v : p.cells[j]) sum += m(p.cells[i][k], v);
        if (k == 0) {
          t(i, j) = sum;
        } else if (sum != t(i, j)) {
          throw Error(ErrorCode::kNotEquitable, "block (" + std::to_string(i) + "," +
                                                    std::to_string(j) +
                                                    ") has non-constant row sums");
        }
      }
    }
  return t;
}

std::string_view family_partition_name(FamilyPartition which) {
  switch (which) {
    case FamilyPartition::kGpqSylow: return "gpq-sylow";
    case FamilyPartition::kDihedral: return "dihedral";
    case FamilyPartition::kDicyclic: return "dicyclic";
    case FamilyPartition::kElabProductCoarse: return "elab-product-coarse";
    case FamilyPartition::kElabProductFine: return "elab-product-fine";
    case FamilyPartition::kElabTimesCyclic: return "elab-times-cyclic";
  }
  return "unknown";
}

FamilyPartition parse_family_partition(std::string_view name) {
  for (auto which : {FamilyPartition::kGpqSylow, FamilyPartition::kDihedral,
                     FamilyPartition::kDicyclic, FamilyPartition::kElabProductCoarse,
                     FamilyPartition::kElabProductFine, FamilyPartition::kElabTimesCyclic}) {
    if (family_partition_name(which) == name) return which;
  }
  throw Error(ErrorCode::kParseError, "unknown partition '" + std::string(name) + "'");
}

Partition family_partition(const FiniteGroup& g, FamilyPartition which) {
  const GroupFamilySpec& f = require_family(g, which);
  switch (which) {
    case FamilyPartition::kGpqSylow: return gpq_sylow(g, f);
    case FamilyPartition::kDihedral: return dihedral_cells(f);
    case FamilyPartition::kDicyclic: return dicyclic_cells(f);
    case FamilyPartition::kElabProductCoarse: return elab_coarse(f);
    case FamilyPartition::kElabProductFine: return elab_fine(f);
    case FamilyPartition::kElabTimesCyclic: return elab_times_cyclic(f);
  }
  mismatch("unknown partition");
}

Partition cyclic_divisor_partition(unsigned long n) {
  if (n < 2) throw Error(ErrorCode::kInvalidFamilyParameters, "P*(Z_n) needs n >= 2");
  const auto td = totient_and_divisors(n);
  std::vector<unsigned long> orders{n};
  orders.insert(orders.end(), td.divisors.begin(), td.divisors.end());
  Partition out;
  out.cells.resize(orders.size());
  for (unsigned long x = 1; x < n; ++x) {
    const unsigned long order = n / std::gcd(x, n);
    const auto it = order == n ? orders.begin()
                               : std::lower_bound(orders.begin() + 1, orders.end(), order);
    out.cells[static_cast<std::size_t>(it - orders.begin())].push_back(static_cast<Vertex>(x - 1));
  }
  return out;
}

Graph cyclic_divisor_outer_graph(unsigned long n) {
  if (n < 2) throw Error(ErrorCode::kInvalidFamilyParameters, "P*(Z_n) needs n >= 2");
  const auto divisors = totient_and_divisors(n).divisors;
  Graph delta(divisors.size());
  for (Vertex i = 0; i < divisors.size(); ++i)
    for (Vertex j = i + 1; j < divisors.size(); ++j)
      if (divisors[j] % divisors[i] == 0) delta.add_edge(i, j);
  return cone(delta);
}

}  // namespace powerspec
