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


#ifndef POWERSPEC_IO_HPP_
#define POWERSPEC_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "powerspec/graph.hpp"
#include "powerspec/group.hpp"
#include "powerspec/matrix.hpp"
#include "powerspec/partition.hpp"
#include "powerspec/polynomial.hpp"
#include "powerspec/verify.hpp"

namespace powerspec::io {

using nlohmann::json;

// {"order": n, "identity": 0, "table": [[...], ...], "labels": [...]}
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

// {"cells": [[v, ...], ...]}
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

// {"coeffs": ["c0", "c1", ...]}, decimal strings, ascending degree.
json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);

// {"factors": [{"coeffs": [...], "mult": k}, ...]}
json factored_to_json(const FactoredPoly& f);
FactoredPoly factored_from_json(const json& j);

// {"rows": r, "cols": c, "entries": [["..."], ...]}
json matrix_to_json(const IntMatrix& m);

// One JSON-lines record.
json report_to_json(const VerificationReport& r);

// Decimal CSV, one row per line, no header.
std::string matrix_to_csv(const IntMatrix& m);
// Header row of vertex labels (leading empty cell), then one labeled row
// per vertex.
std::string labeled_matrix_to_csv(const IntMatrix& m, const std::vector<std::string>& labels);

// Undirected DOT; labels default to vertex indices when empty.
std::string graph_to_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace powerspec::io

#endif  // POWERSPEC_IO_HPP_
