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


#ifndef POWERSPEC_VERIFY_HPP_
#define POWERSPEC_VERIFY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerspec/group.hpp"
#include "powerspec/polynomial.hpp"
#include "powerspec/theorems.hpp"

namespace powerspec {

enum class TheoremId {
  kEpgGpqDistance,
  kEpgDihedralDistance,
  kPgDihedralDistance,
  kEpgDicyclicDistance,
  kPgDicyclicDistance,
  kPgElabProductAdjacency,
  kPgElabProductDistance,
  kEpgElabProductAdjacency,
  kEpgElabProductDistance,
  kEpgElabTimesCyclicDistance,
  kEpgElabDistance,
  kPgElabDistance,
};

const std::vector<TheoremId>& all_theorems();
std::string_view theorem_name(TheoremId id);
// Throws Error(kParseError).
TheoremId parse_theorem(std::string_view name);
// Parameter names in canonical order, e.g. {"p", "q"}.
const std::vector<std::string>& theorem_parameters(TheoremId id);

struct TheoremCase {
  TheoremId id = TheoremId::kEpgGpqDistance;
  std::map<std::string, long> params;
  GraphKind graph = GraphKind::kEnhanced;
  MatrixKind matrix = MatrixKind::kDistance;

  // Fills graph/matrix from the theorem and checks that exactly the
  // theorem's parameters are present.
  static TheoremCase make(TheoremId id, std::map<std::string, long> params);

  long param(const std::string& name) const { return params.at(name); }
  GroupFamilySpec group_spec() const;
  long group_order() const;
  // Throws Error(kHypothesisViolated).
  void validate() const;
  // True when the closed form is not claimed for these parameters and the
  // case is run for information only.
  bool informational() const;
  std::string to_string() const;
};

struct VerificationReport {
  TheoremCase test_case;
  FactoredPoly closed_form;
  IntPolynomial brute_force;
  bool equal = false;
  bool informational = false;
  long group_order = 0;
  double elapsed_ms = 0.0;
  // Set when construction or evaluation failed; equal is then false.
  std::string error;
  std::string note;
};

VerificationReport verify(const TheoremCase& test_case);

struct SweepOptions {
  long max_order = 64;
  // Empty means every theorem.
  std::vector<TheoremId> theorems;
  // Inclusive bounds per parameter name, e.g. {"n", {3, 12}}.
  std::map<std::string, std::pair<long, long>> ranges;
  unsigned jobs = 1;
};

// Every case satisfying the hypotheses, the order bound and the ranges,
// sorted by theorem then parameters.
std::vector<TheoremCase> enumerate_cases(const SweepOptions& options);

// Runs enumerate_cases(options); results keep that order regardless of jobs.
std::vector<VerificationReport> verify_sweep(const SweepOptions& options);

// Brute-force characteristic polynomial of the requested graph and matrix.
IntPolynomial brute_force_char_poly(const FiniteGroup& g, GraphKind graph, MatrixKind matrix);

}  // namespace powerspec

#endif  // POWERSPEC_VERIFY_HPP_
