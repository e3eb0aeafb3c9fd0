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


#include "powerspec/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "powerspec/error.hpp"
#include "powerspec/graph.hpp"
#include "powerspec/group.hpp"
#include "powerspec/io.hpp"
#include "powerspec/partition.hpp"
#include "powerspec/verify.hpp"

namespace powerspec::cli {

namespace {

struct Config {
  std::string family;
  std::map<std::string, long> values;
  std::string graph = "enhanced";
  std::string matrix = "distance";
  std::string format;
  std::string output;
  std::vector<std::string> theorems;
  bool all = false;
  long max_order = 64;
  unsigned jobs = 1;
  std::map<std::string, std::string> ranges;
  std::string what = "group";
  std::string partition;
  bool no_timing = false;
};

[[noreturn]] void usage(const std::string& what) {
  throw Error(ErrorCode::kInvalidArguments, what);
}

long need(const Config& c, const std::string& name) {
  const auto it = c.values.find(name);
  if (it == c.values.end()) usage("--" + name + " is required for family " + c.family);
  return it->second;
}

GroupFamilySpec family_spec(const Config& c) {
  GroupFamilySpec spec;
  const auto& f = c.family;
  if (f.empty()) usage("--family is required");
  if (f == "cyclic") {
    spec = GroupFamilySpec::cyclic(need(c, "n"));
  } else if (f == "elementary-abelian") {
    spec = GroupFamilySpec::elementary_abelian(need(c, "p"), need(c, "n"));
  } else if (f == "dihedral") {
    spec = GroupFamilySpec::dihedral(need(c, "n"));
  } else if (f == "dicyclic") {
    spec = GroupFamilySpec::dicyclic(need(c, "n"));
  } else if (f == "gpq") {
    spec = GroupFamilySpec::gpq(need(c, "p"), need(c, "q"));
  } else if (f == "elab-product") {
    spec = GroupFamilySpec::product(GroupFamilySpec::elementary_abelian(need(c, "p"), need(c, "n")),
                                    GroupFamilySpec::elementary_abelian(need(c, "q"), need(c, "m")));
    if (need(c, "p") == need(c, "q")) usage("elab-product requires p != q");
  } else if (f == "elab-times-cyclic") {
    spec = GroupFamilySpec::product(GroupFamilySpec::elementary_abelian(need(c, "p"), need(c, "n")),
                                    GroupFamilySpec::cyclic(need(c, "m")));
  } else {
    usage("unknown family '" + f + "'");
  }
  spec.validate();
  return spec;
}

GraphKind graph_kind(const std::string& s) {
  if (s == "power") return GraphKind::kPower;
  if (s == "enhanced") return GraphKind::kEnhanced;
  return GraphKind::kProperPower;
}

MatrixKind matrix_kind(const std::string& s) {
  return s == "adjacency" ? MatrixKind::kAdjacency : MatrixKind::kDistance;
}

Graph build_graph(const FiniteGroup& g, GraphKind kind) {
  switch (kind) {
    case GraphKind::kPower: return power_graph(g);
    case GraphKind::kEnhanced: return enhanced_power_graph(g);
    case GraphKind::kProperPower: return proper_power_graph(g);
  }
  return {};
}

std::vector<std::string> vertex_labels(const FiniteGroup& g, GraphKind kind) {
  std::vector<std::string> labels = g.labels();
  if (kind == GraphKind::kProperPower) labels.erase(labels.begin());
  return labels;
}

IntMatrix build_matrix(const Graph& gr, MatrixKind kind) {
  return kind == MatrixKind::kAdjacency ? adjacency_matrix(gr) : distance_matrix(gr);
}

std::pair<long, long> parse_range(const std::string& name, const std::string& text) {
  const auto colon = text.find(':');
  const auto number = [&](std::string_view s) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      usage("--" + name + "-range expects a:b, got '" + text + "'");
    }
    return v;
  };
  if (colon == std::string::npos) usage("--" + name + "-range expects a:b, got '" + text + "'");
  const std::string_view all(text);
  const long lo = number(all.substr(0, colon)), hi = number(all.substr(colon + 1));
  if (lo > hi) usage("--" + name + "-range is empty: " + text);
  return {lo, hi};
}

// The theorem whose closed form covers this family and graph, if any.
std::optional<TheoremCase> matching_theorem(const Config& c, GraphKind graph, MatrixKind matrix) {
  const bool dist = matrix == MatrixKind::kDistance;
  const bool pg = graph == GraphKind::kPower, epg = graph == GraphKind::kEnhanced;
  std::optional<TheoremId> id;
  std::map<std::string, long> params;
  const auto take = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) params[n] = c.values.at(n);
  };
  if (c.family == "gpq" && epg && dist) {
    id = TheoremId::kEpgGpqDistance;
    take({"p", "q"});
  } else if (c.family == "dihedral" && dist && (pg || epg)) {
    id = pg ? TheoremId::kPgDihedralDistance : TheoremId::kEpgDihedralDistance;
    take({"n"});
  } else if (c.family == "dicyclic" && dist && (pg || epg)) {
    id = pg ? TheoremId::kPgDicyclicDistance : TheoremId::kEpgDicyclicDistance;
    take({"n"});
  } else if (c.family == "elab-product" && (pg || epg)) {
    id = pg ? (dist ? TheoremId::kPgElabProductDistance : TheoremId::kPgElabProductAdjacency)
            : (dist ? TheoremId::kEpgElabProductDistance : TheoremId::kEpgElabProductAdjacency);
    take({"p", "n", "q", "m"});
  } else if (c.family == "elab-times-cyclic" && epg && dist) {
    id = TheoremId::kEpgElabTimesCyclicDistance;
    take({"p", "n", "m"});
  } else if (c.family == "elementary-abelian" && dist && (pg || epg)) {
    id = pg ? TheoremId::kPgElabDistance : TheoremId::kEpgElabDistance;
    take({"p", "n"});
  }
  if (!id) return std::nullopt;
  TheoremCase tc = TheoremCase::make(*id, params);
  try {
    tc.validate();
  } catch (const Error&) {
    return std::nullopt;
  }
  if (tc.informational()) return std::nullopt;
  return tc;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  usage("--format must be one of " + list + " here");
}

void cmd_group(const Config& c, std::ostream& out) {
  const std::string format = c.format.empty() ? "json" : c.format;
  require_format(format, {"json", "text"});
  const FiniteGroup g = make_group(family_spec(c));
  if (format == "json") {
    out << io::group_to_json(g).dump() << '\n';
    return;
  }
  out << "group " << g.family()->to_string() << "\norder " << g.order() << "\nabelian "
      << (g.is_abelian() ? "yes" : "no") << "\ncyclic subgroups " << cyclic_subgroups(g).size()
      << '\n';
  for (Element x = 0; x < g.order(); ++x)
    out << x << ' ' << g.label(x) << " order " << element_order(g, x) << '\n';
}

void cmd_graph(const Config& c, std::ostream& out) {
  const std::string format = c.format.empty() ? "dot" : c.format;
  require_format(format, {"dot", "json", "csv", "text"});
  const FiniteGroup g = make_group(family_spec(c));
  const GraphKind kind = graph_kind(c.graph);
  const Graph gr = build_graph(g, kind);
  const auto labels = vertex_labels(g, kind);
  if (format == "dot") {
    out << io::graph_to_dot(gr, labels);
  } else if (format == "csv") {
    out << io::labeled_matrix_to_csv(build_matrix(gr, matrix_kind(c.matrix)), labels);
  } else if (format == "json") {
    io::json edges = io::json::array();
    for (Vertex u = 0; u < gr.vertex_count(); ++u)
      for (Vertex v : gr.neighbors(u))
        if (v > u) edges.push_back({u, v});
    out << io::json{{"vertices", gr.vertex_count()}, {"edges", edges}, {"labels", labels}}.dump()
        << '\n';
  } else {
    out << "vertices " << gr.vertex_count() << "\nedges " << gr.edge_count() << "\nconnected "
        << (is_connected(gr) ? "yes" : "no") << '\n';
    if (gr.vertex_count() > 0 && is_connected(gr)) out << "diameter " << diameter(gr) << '\n';
  }
}

void cmd_spectrum(const Config& c, std::ostream& out) {
  const std::string format = c.format.empty() ? "json" : c.format;
  require_format(format, {"json", "text"});
  const FiniteGroup g = make_group(family_spec(c));
  const GraphKind graph = graph_kind(c.graph);
  const MatrixKind matrix = matrix_kind(c.matrix);
  std::optional<FactoredPoly> factored;
  IntPolynomial poly;
  if (const auto tc = matching_theorem(c, graph, matrix)) {
    const VerificationReport r = verify(*tc);
    if (!r.error.empty()) throw Error(ErrorCode::kInternalExactnessViolation, r.error);
    poly = r.brute_force;
    if (r.equal) factored = r.closed_form;
  } else {
    poly = brute_force_char_poly(g, graph, matrix);
  }
  if (format == "json") {
    out << io::polynomial_to_json(poly).dump() << '\n';
  } else if (factored) {
    out << factored->to_string() << '\n';
  } else {
    out << poly.to_string() << '\n';
  }
}

Partition chosen_partition(const Config& c, const FiniteGroup& g, const Graph& gr) {
  if (c.partition.empty()) return coarsest_equitable_partition(gr);
  if (c.graph == "proper-power") usage("named partitions apply to the power and enhanced power graphs");
  return family_partition(g, parse_family_partition(c.partition));
}

void cmd_export(const Config& c, std::ostream& out) {
  const FiniteGroup g = make_group(family_spec(c));
  const GraphKind kind = graph_kind(c.graph);
  const auto& what = c.what;
  if (what == "group") {
    require_format(c.format.empty() ? "json" : c.format, {"json"});
    out << io::group_to_json(g).dump() << '\n';
    return;
  }
  const Graph gr = build_graph(g, kind);
  if (what == "graph") {
    const std::string format = c.format.empty() ? "dot" : c.format;
    require_format(format, {"dot"});
    out << io::graph_to_dot(gr, vertex_labels(g, kind));
    return;
  }
  if (what == "adjacency" || what == "distance") {
    const std::string format = c.format.empty() ? "csv" : c.format;
    require_format(format, {"csv", "json"});
    const IntMatrix m = build_matrix(gr, matrix_kind(what));
    if (format == "csv") {
      out << io::labeled_matrix_to_csv(m, vertex_labels(g, kind));
    } else {
      out << io::matrix_to_json(m).dump() << '\n';
    }
    return;
  }
  const Partition p = chosen_partition(c, g, gr);
  if (what == "partition") {
    require_format(c.format.empty() ? "json" : c.format, {"json"});
    out << io::partition_to_json(p).dump() << '\n';
    return;
  }
  const std::string format = c.format.empty() ? "csv" : c.format;
  require_format(format, {"csv", "json"});
  const IntMatrix t = what == "quotient" ? quotient_matrix(gr, p) : distance_quotient_matrix(gr, p);
  out << (format == "csv" ? io::matrix_to_csv(t) : io::json(io::matrix_to_json(t)).dump() + "\n");
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const std::string format = c.format.empty() ? "jsonl" : c.format;
  require_format(format, {"jsonl", "json", "text"});
  if (c.max_order < 6) usage("--max-order must be at least 6");
  if (c.jobs < 1) usage("--jobs must be at least 1");
  if (!c.all && c.theorems.empty()) usage("verify needs --theorem or --all");
  SweepOptions options;
  options.max_order = c.max_order;
  options.jobs = c.jobs;
  for (const auto& name : c.theorems) options.theorems.push_back(parse_theorem(name));
  for (const auto& [name, text] : c.ranges) options.ranges[name] = parse_range(name, text);
  for (const auto& [name, value] : c.values) {
    if (options.ranges.count(name)) usage("--" + name + " and --" + name + "-range conflict");
    options.ranges[name] = {value, value};
  }
  // Exact parameters must satisfy the hypotheses of every requested theorem.
  if (!options.theorems.empty()) {
    for (TheoremId id : options.theorems) {
      std::map<std::string, long> exact;
      bool complete = true;
      for (const auto& name : theorem_parameters(id)) {
        const auto it = c.values.find(name);
        if (it == c.values.end()) {
          complete = false;
          break;
        }
        exact[name] = it->second;
      }
      if (complete) TheoremCase::make(id, exact).validate();
    }
  }
  const auto reports = verify_sweep(options);
  std::size_t equal = 0, falsified = 0, info = 0;
  io::json array = io::json::array();
  for (const auto& r : reports) {
    if (r.informational) {
      ++info;
    } else if (r.equal) {
      ++equal;
    } else {
      ++falsified;
    }
    io::json j = io::report_to_json(r);
    if (c.no_timing) j.erase("elapsed_ms");
    if (format == "jsonl") {
      out << j.dump() << '\n';
    } else if (format == "json") {
      array.push_back(std::move(j));
    } else {
      const char* tag = r.informational ? "INFO" : r.equal ? "PASS" : "FAIL";
      out << tag << ' ' << r.test_case.to_string() << " order=" << r.group_order;
      if (!r.error.empty()) out << " error=" << r.error;
      out << '\n';
    }
  }
  if (format == "json") out << array.dump() << '\n';
  err << reports.size() << " cases: " << equal << " equal, " << falsified << " unequal, " << info
      << " informational\n";
  if (reports.empty()) err << "warning: no case matched the filters\n";
  return falsified > 0 ? kExitFalsified : kExitOk;
}

void add_family_options(CLI::App* app, Config& c) {
  app->add_option("--family", c.family, "cyclic, elementary-abelian, dihedral, dicyclic, gpq, elab-product, elab-times-cyclic");
  for (const char* name : {"p", "q", "n", "m"}) {
    app->add_option_function<long>(std::string("--") + name,
                                   [&c, name](long v) { c.values[name] = v; },
                                   std::string("family parameter ") + name);
  }
}

void add_graph_options(CLI::App* app, Config& c) {
  app->add_option("--graph", c.graph, "power, enhanced or proper-power")
      ->check(CLI::IsMember({"power", "enhanced", "proper-power"}));
  app->add_option("--matrix", c.matrix, "adjacency or distance")
      ->check(CLI::IsMember({"adjacency", "distance"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact spectra of power graphs and enhanced power graphs of finite groups",
               "powerspec"};
  app.require_subcommand(1, 1);

  auto* group = app.add_subcommand("group", "Print a group's Cayley table");
  add_family_options(group, c);
  auto* graph = app.add_subcommand("graph", "Print a group graph");
  add_family_options(graph, c);
  add_graph_options(graph, c);
  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial of a group graph matrix");
  add_family_options(spectrum, c);
  add_graph_options(spectrum, c);
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against brute force");
  verify_cmd->add_option("--theorem", c.theorems, "theorem id, repeatable");
  verify_cmd->add_flag("--all", c.all, "every theorem");
  verify_cmd->add_option("--max-order", c.max_order, "largest group order in the sweep");
  verify_cmd->add_option("--jobs", c.jobs, "parallel workers");
  verify_cmd->add_flag("--no-timing", c.no_timing, "omit elapsed_ms for byte-stable output");
  for (const char* name : {"p", "q", "n", "m"}) {
    verify_cmd->add_option_function<long>(std::string("--") + name,
                                          [&c, name](long v) { c.values[name] = v; },
                                          std::string("exact value of ") + name);
    verify_cmd->add_option_function<std::string>(
        std::string("--") + name + "-range", [&c, name](const std::string& v) { c.ranges[name] = v; },
        std::string("inclusive range a:b for ") + name);
  }
  auto* export_cmd = app.add_subcommand("export", "Write a group, graph, matrix or partition");
  add_family_options(export_cmd, c);
  add_graph_options(export_cmd, c);
  export_cmd->add_option("--what", c.what, "group, graph, adjacency, distance, partition, quotient, distance-quotient")
      ->check(CLI::IsMember({"group", "graph", "adjacency", "distance", "partition", "quotient",
                             "distance-quotient"}));
  export_cmd->add_option("--partition", c.partition, "named family partition; coarsest equitable when omitted");
  for (auto* sub : {group, graph, spectrum, verify_cmd, export_cmd}) {
    sub->add_option("--format", c.format, "json, jsonl, csv, dot or text");
    sub->add_option("--output", c.output, "write data here instead of standard output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*group) {
      cmd_group(c, buffer);
    } else if (*graph) {
      cmd_graph(c, buffer);
    } else if (*spectrum) {
      cmd_spectrum(c, buffer);
    } else if (*verify_cmd) {
      code = cmd_verify(c, buffer, err);
    } else {
      cmd_export(c, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (c.output.empty()) {
    out << buffer.str();
  } else {
    file.open(c.output, std::ios::binary);
    if (!file) {
      err << "error: InvalidArguments: cannot open " << c.output << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace powerspec::cli
