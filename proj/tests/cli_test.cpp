// Copyright 2026 The spexm Authors
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

#include <cstdio>
#include <filesystem>
#include <algorithm>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "spexm/canonical.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"
#include "spexm/verify.hpp"

namespace spexm {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "spexm");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

TEST(Cli, FamilyRhoPrintsValueAndExactLine) {
  const CliRun r = run_cli({"family", "--spec", "S:7:3", "--rho"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 2U);
  EXPECT_EQ(ls[0], "3.000000000000000");
  EXPECT_EQ(ls[1].rfind("exact: rho = sqrt(9)", 0), 0U) << ls[1];
}

TEST(Cli, FamilyPrintsGraph6) {
  const CliRun r = run_cli({"family", "--spec", "star:9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, write_graph6(build_family(families::Star{9})) + "\n");
}

TEST(Cli, RhoFromFlagAndStdin) {
  const std::string star = write_graph6(build_family(families::Star{9}));
  const CliRun a = run_cli({"rho", "--g6", star});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("3.000000000000000 residual=", 0), 0U) << a.out;
  const CliRun b = run_cli({"rho"}, star + "\n" + write_graph6(build_family(families::Complete{4})) + "\n");
  ASSERT_EQ(b.code, 0);
  const auto ls = lines(b.out);
  ASSERT_EQ(ls.size(), 2U);
  EXPECT_EQ(ls[1].rfind("3.000000000000000", 0), 0U);
}

TEST(Cli, CertifyPrintsExactRemainder) {
  const std::string book = write_graph6(build_family(families::CompleteSplit{6, 2}));
  const CliRun r = run_cli({"certify", "--g6", book, "--p", "1", "--q", "8"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(0, 0) divides"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"certify", "--g6", book, "--p", "1"}).code, cli::kExitUsage);
}

TEST(Cli, EnumPrintsSortedClasses) {
  const CliRun r = run_cli({"enum", "--edges", "3"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5U);
  EXPECT_TRUE(std::is_sorted(ls.begin(), ls.end()));
  const CliRun all = run_cli({"enum", "--edges", "6", "--forbid", "C3"});
  const CliRun c = run_cli({"enum", "--edges", "6", "--forbid", "C3", "--count"});
  EXPECT_EQ(c.out, std::to_string(lines(all.out).size()) + "\n");
}

TEST(Cli, SearchPrintsGraphAndTrace) {
  const CliRun r = run_cli({"search", "--edges", "10", "--forbid", "C4", "--restarts", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2U);
  EXPECT_EQ(ls[0], canonical_form(build_family(families::Star{10})));
  EXPECT_NE(ls[1].find("\"trace\""), std::string::npos);
}

TEST(Cli, VerifyPassExitsZeroWithValidReport) {
  const CliRun r = run_cli({"verify", "--theorem", "T1.2", "--m", "10..10", "--threads", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(report_schema_errors(r.out).empty());
}

TEST(Cli, VerifyOutputDoesNotDependOnThreads) {
  const CliRun a = run_cli({"verify", "--theorem", "T1.3ii", "--m", "9..10", "--threads", "1"});
  const CliRun b = run_cli({"verify", "--theorem", "T1.3ii", "--m", "9..10", "--threads", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip_meta(a.out), strip_meta(b.out));
}

TEST(Cli, RefusalExitsThree) {
  const CliRun r = run_cli({"verify", "--theorem", "T1.2", "--m", "16"});
  EXPECT_EQ(r.code, cli::kExitRefused);
  EXPECT_NE(r.err.find("refused"), std::string::npos);
}

TEST(Cli, FailedAuditExitsTwo) {
  const CliRun r = run_cli({"audit", "--g6", write_graph6(Graph(4, {{0, 1}, {2, 3}})), "--forbid", "C5"});
  EXPECT_EQ(r.code, cli::kExitViolations);
}

TEST(Cli, UsageErrorsExitSixtyFour) {
  EXPECT_EQ(run_cli({"family", "--spec", "S:7:3", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"rho", "--g6", "D?"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"family", "--spec", "S:5:3"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"enum", "--edges", "3", "--format", "csv"}).code, cli::kExitUsage);
  const CliRun r = run_cli({"verify", "--theorem", "T1.2"});
  EXPECT_EQ(r.code, cli::kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
  for (const char* sub : {"family", "rho", "certify", "enum", "search", "verify", "scan", "witness", "audit"}) {
    const CliRun s = run_cli({sub, "--help"});
    EXPECT_EQ(s.code, 0) << sub;
    EXPECT_FALSE(s.out.empty());
  }
}

TEST(Cli, OutFileAppendsReports) {
  const auto path = std::filesystem::temp_directory_path() / "spexm_cli_test.jsonl";
  std::filesystem::remove(path);
  for (int i = 0; i < 2; ++i) {
    const CliRun r = run_cli({"verify", "--theorem", "R4.1", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_TRUE(report_schema_errors(buf.str()).empty());
  EXPECT_EQ(lines(buf.str()).size(), 4U);
  std::filesystem::remove(path);
}

TEST(Cli, WitnessListsCycles) {
  const CliRun r = run_cli({"witness", "--g6", write_graph6(build_family(families::Complete{4})), "--k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C3:"), std::string::npos);
  EXPECT_NE(r.out.find("C4:"), std::string::npos);
}

TEST(Cli, ScanRunsConjecture) {
  const CliRun r = run_cli({"scan", "--conjecture", "6.2", "--r", "1", "--m", "6..8", "--format", "text"});
  EXPECT_TRUE(r.code == 0 || r.code == cli::kExitViolations) << r.err;
  EXPECT_NE(r.out.find("C6.2"), std::string::npos);
}

}  // namespace
}  // namespace spexm
