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


#include "powerspec/io.hpp"

#include <sstream>

#include "powerspec/error.hpp"

namespace powerspec::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

// Runs f, turning json library exceptions into kParseError.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

BigInt parse_bigint(const json& j) {
  if (!j.is_string()) parse_error("coefficient must be a decimal string");
  BigInt v;
  if (v.set_str(j.get<std::string>(), 10) != 0) {
    parse_error("bad decimal integer '" + j.get<std::string>() + "'");
  }
  return v;
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  json table = json::array();
  for (Element a = 0; a < n; ++a) {
    const auto row = g.table_row(a);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return {{"order", n}, {"identity", g.identity()}, {"table", table}, {"labels", g.labels()}};
}

FiniteGroup group_from_json(const json& j) {
  return guarded("group", [&] {
    const auto n = j.at("order").get<std::size_t>();
    if (j.contains("identity") && j.at("identity").get<long>() != 0) {
      throw Error(ErrorCode::kInvalidGroupTable, "identity must be element 0");
    }
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) {
      throw Error(ErrorCode::kInvalidGroupTable, "table must have " + std::to_string(n) + " rows");
    }
    std::vector<Element> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw Error(ErrorCode::kInvalidGroupTable, "every table row must have " + std::to_string(n) + " entries");
      }
      for (const auto& v : row) table.push_back(v.get<Element>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup(n, std::move(table), std::move(labels));
  });
}

json partition_to_json(const Partition& p) { return {{"cells", p.cells}}; }

Partition partition_from_json(const json& j) {
  return guarded("partition", [&] {
    return Partition{j.at("cells").get<std::vector<std::vector<Vertex>>>()};
  });
}

json polynomial_to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const json& j) {
  return guarded("polynomial", [&] {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_bigint(c));
    return IntPolynomial(std::move(coeffs));
  });
}

json factored_to_json(const FactoredPoly& f) {
  json factors = json::array();
  for (const auto& factor : f.factors()) {
    json entry = polynomial_to_json(factor.poly);
    entry["mult"] = factor.multiplicity;
    factors.push_back(entry);
  }
  return {{"factors", factors}};
}

FactoredPoly factored_from_json(const json& j) {
  return guarded("factored polynomial", [&] {
    FactoredPoly f;
    for (const auto& entry : j.at("factors")) {
      const long mult = entry.at("mult").get<long>();
      if (mult < 1) parse_error("factor multiplicity must be positive");
      f.add(polynomial_from_json(entry), static_cast<unsigned>(mult));
    }
    return f;
  });
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& v : m.row(r)) row.push_back(v.get_str());
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json report_to_json(const VerificationReport& r) {
  json params = json::object();
  for (const auto& [name, value] : r.test_case.params) params[name] = value;
  json j = {
      {"theorem", theorem_name(r.test_case.id)},
      {"params", params},
      {"graph", graph_kind_name(r.test_case.graph)},
      {"matrix", matrix_kind_name(r.test_case.matrix)},
      {"equal", r.equal},
      {"informational", r.informational},
      {"group_order", r.group_order},
      {"elapsed_ms", r.elapsed_ms},
      {"closed_form", factored_to_json(r.closed_form)},
      {"closed_form_expanded", polynomial_to_json(expand(r.closed_form))},
      {"brute_force", polynomial_to_json(r.brute_force)},
  };
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string matrix_to_csv(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

std::string labeled_matrix_to_csv(const IntMatrix& m, const std::vector<std::string>& labels) {
  if (labels.size() != m.rows() || labels.size() != m.cols()) {
    throw Error(ErrorCode::kSizeMismatch, "need one label per row and column");
  }
  std::ostringstream out;
  for (const auto& l : labels) out << ',' << csv_field(l);
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << csv_field(labels[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << m(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

std::string graph_to_dot(const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != g.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "need one label per vertex");
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\""
        << dot_escape(labels.empty() ? std::to_string(v) : labels[v]) << "\"];\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (v > u) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace powerspec::io
