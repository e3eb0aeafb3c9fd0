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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "powerspec/cli.hpp"
#include "powerspec/io.hpp"

namespace powerspec {
namespace {

using io::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(Cli, SpectrumJson) {
  const auto r = run({"spectrum", "--family", "gpq", "--p", "2", "--q", "3", "--graph", "enhanced",
                      "--matrix", "distance"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j, json::parse(R"({"coeffs":["-52","-204","-285","-174","-42","0","1"]})"));
}

TEST(Cli, SpectrumTextUsesFactoredForm) {
  const auto r = run({"spectrum", "--family", "gpq", "--p", "2", "--q", "3", "--graph", "enhanced",
                      "--matrix", "distance", "--format", "text"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("(x + 2)^2"), std::string::npos);
  const auto plain = run({"spectrum", "--family", "cyclic", "--n", "4", "--graph", "power", "--matrix",
                          "adjacency", "--format", "text"});
  EXPECT_EQ(plain.code, cli::kExitOk);
  EXPECT_FALSE(plain.out.empty());
}

TEST(Cli, GroupJson) {
  const auto r = run({"group", "--family", "dihedral", "--n", "4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(io::group_from_json(json::parse(r.out)).order(), 8u);
}

TEST(Cli, GraphDot) {
  const auto r = run({"graph", "--family", "dicyclic", "--n", "3", "--graph", "enhanced", "--format", "dot"});
  EXPECT_EQ(r.code, cli::kExitOk);
  std::size_t nodes = 0;
  for (const auto& line : lines_of(r.out))
    if (line.find("[label=") != std::string::npos) ++nodes;
  EXPECT_EQ(nodes, 12u);
  EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
}

TEST(Cli, VerifyDihedralRange) {
  const auto r = run({"verify", "--theorem", "epg-dihedral-distance", "--n-range", "3:12", "--no-timing"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 10u);
  for (const auto& line : lines) {
    const json j = json::parse(line);
    EXPECT_EQ(j["theorem"], "epg-dihedral-distance");
    EXPECT_EQ(j["equal"], true);
    EXPECT_FALSE(j.contains("elapsed_ms"));
  }
}

TEST(Cli, VerifyIsDeterministicWithoutTiming) {
  const std::vector<std::string> args{"verify", "--all", "--max-order", "24", "--no-timing", "--jobs", "3"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, VerifyExactCase) {
  const auto r = run({"verify", "--theorem", "epg-gpq-distance", "--p", "3", "--q", "7", "--no-timing"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(lines_of(r.out).size(), 1u);
  const auto bad = run({"verify", "--theorem", "epg-gpq-distance", "--p", "3", "--q", "5"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
}

TEST(Cli, ExportQuotient) {
  const auto r = run({"export", "--family", "gpq", "--p", "2", "--q", "3", "--graph", "enhanced", "--what",
                      "distance-quotient", "--partition", "gpq-sylow", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["rows"], 5);
  EXPECT_EQ(j["entries"][0][1], "2");
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "powerspec_cli_test_partition.json";
  std::filesystem::remove(path);
  const auto r = run({"export", "--family", "dihedral", "--n", "3", "--what", "partition", "--format", "json",
                      "--output", path.string()});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j, json::parse(R"({"cells":[[0],[1,2],[3,4,5]]})"));
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--max-order", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"graph", "--family", "foo", "--n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"spectrum", "--family", "dihedral", "--n", "3", "--graph", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"export", "--family", "dihedral", "--n", "4", "--what", "quotient", "--partition",
                 "gpq-sylow"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace powerspec
