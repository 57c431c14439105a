// Copyright 2026 The Authors.
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

// Runs the chowpoly binary and checks its output and exit status.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "chow/chow_forms.h"
#include "chow/schubert.h"
#include "chow/serialize.h"
#include "test_support.h"

namespace chow {
namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string command =
      std::string(CHOWPOLY_BINARY) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path TempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("chowpoly_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(ComputeCommandTest, GoldenValue) {
  const Result r = RunCli("compute --k 3 --n 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(Contains(r.out, "monomial: 1 + 11*x + x^2\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "convolution: 1 + 11*x + x^2\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "AGREE\n")) << r.out;
}

TEST(ComputeCommandTest, SingleMethodPrintsPolynomialOnly) {
  const Result r = RunCli("compute --k 3 --n 5 --method gamma-perm");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 + 11*x + x^2\n");
  EXPECT_EQ(RunCli("compute --k 1 --n 4 --method monomial").out, "1\n");
  const Result all = RunCli("compute --k 1 --n 4");
  EXPECT_TRUE(Contains(all.out, "gamma-eulerian: 1\n")) << all.out;
}

TEST(ComputeCommandTest, AugmentedJson) {
  const Result r = RunCli("compute --k 4 --n 5 --augmented --multivariate "
                       "--format json");
  ASSERT_EQ(r.status, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("agree").get<bool>());
  for (const auto& [name, poly] : j.at("methods").items()) {
    EXPECT_EQ(UniPolyFromJson(poly), testing::BruteForceEulerian(5)) << name;
  }
  for (const auto& [name, poly] : j.at("multivariate").items()) {
    EXPECT_EQ(SqfMultiPolyFromJson(poly),
              MultivariateClosedForm(4, 5, MultivariateBasis::kMonomial,
                                     ChowKind::kAugmented))
        << name;
  }
}

TEST(ComputeCommandTest, Csv) {
  const Result r = RunCli("compute --k 3 --n 5 --method monomial --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "form,power,coefficient\n"
            "monomial,0,1\nmonomial,1,11\nmonomial,2,1\n");
}

TEST(ComputeCommandTest, InvalidInput) {
  EXPECT_EQ(RunCli("compute --k 6 --n 5").status, 2);
  EXPECT_EQ(RunCli("compute --k 0 --n 5").status, 2);
  EXPECT_EQ(RunCli("compute --k 3 --n 5 --method nope").status, 2);
  EXPECT_EQ(RunCli("compute --n 5").status, 2);
  EXPECT_EQ(RunCli("").status, 2);
}

TEST(OracleCommandTest, Equal) {
  for (const std::string args :
       {"--k 3 --n 5", "--k 1 --n 1", "--k 4 --n 7", "--k 4 --n 7 --augmented"}) {
    const Result r = RunCli("oracle " + args);
    EXPECT_EQ(r.status, 0) << args;
    EXPECT_TRUE(Contains(r.out, "EQUAL\n")) << r.out;
  }
  const Result r = RunCli("oracle --k 3 --n 5");
  EXPECT_TRUE(Contains(r.out, "chain: 1 + 11*x + x^2\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "x^1: 11\n")) << r.out;
}

TEST(OracleCommandTest, Json) {
  const Result r = RunCli("oracle --k 3 --n 6 --format json");
  ASSERT_EQ(r.status, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("equal").get<bool>());
  EXPECT_EQ(UniPolyFromJson(j.at("chain")),
            ClosedForm(3, 6, FormMethod::kMonomial, ChowKind::kChow));
}

TEST(OracleCommandTest, ResourceGuard) {
  EXPECT_EQ(RunCli("oracle --k 3 --n 9").status, 2);
  EXPECT_EQ(RunCli("oracle --k 0 --n 3 --augmented").status, 2);
}

TEST(CensusCommandTest, CsvRoundTrip) {
  const Result r = RunCli("census --n 5 --format csv");
  ASSERT_EQ(r.status, 0);
  const CensusTable parsed = CensusFromCsv(5, r.out);
  const CensusTable direct = RunCensus(5);
  EXPECT_EQ(parsed.cells, direct.cells);
  EXPECT_EQ(parsed.CountRankCogirthAbove(2, 2, true), 11u);
  EXPECT_EQ(RunCli("census --n 1 --format csv").out,
            "rank,loops,cogirth,count\n0,1,inf,1\n1,0,1,1\n");
}

TEST(CensusCommandTest, JsonRoundTrip) {
  const Result r = RunCli("census --n 4 --format json --verify");
  ASSERT_EQ(r.status, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(CensusFromJson(j.at("census")).cells, RunCensus(4).cells);
  EXPECT_TRUE(j.at("verification").at("passed").get<bool>());
}

TEST(CensusCommandTest, Verify) {
  const Result r = RunCli("census --n 6 --verify --jobs 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(Contains(r.out, "expansion k=6: PASS\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "VERIFIED\n")) << r.out;
  EXPECT_FALSE(Contains(r.out, "FIRST MISMATCH")) << r.out;
}

TEST(CensusCommandTest, JobsDoNotChangeOutput) {
  EXPECT_EQ(RunCli("census --n 6 --format csv --jobs 1").out,
            RunCli("census --n 6 --format csv --jobs 4").out);
}

TEST(CensusCommandTest, ResourceGuard) {
  EXPECT_EQ(RunCli("census --n 9").status, 2);
  EXPECT_EQ(RunCli("census --n 0").status, 2);
}

TEST(SequencesCommandTest, MatchesExtraction) {
  const Result r = RunCli("sequences --coeff 1 --k 3 --n-from 3 --n-to 6 "
                       "--format csv");
  ASSERT_EQ(r.status, 0);
  std::ostringstream expected;
  expected << "n,value\n";
  for (int n = 3; n <= 6; ++n) {
    expected << n << ","
             << ClosedForm(3, n, FormMethod::kMonomial, ChowKind::kChow)
                    .Coefficient(1)
                    .get_str()
             << "\n";
  }
  EXPECT_EQ(r.out, expected.str());

  const Result two = RunCli("sequences --coeff 1 --k 2 --n-from 2 --n-to 7");
  EXPECT_EQ(two.out, "n=2 1\nn=3 1\nn=4 1\nn=5 1\nn=6 1\nn=7 1\n");

  const Result c2 = RunCli("sequences --coeff 2 --k 5 --n-from 6 --n-to 6 "
                        "--format json");
  const nlohmann::json j = nlohmann::json::parse(c2.out);
  EXPECT_EQ(j.at("rows").at(0).at("value").get<std::string>(),
            ClosedForm(5, 6, FormMethod::kMonomial, ChowKind::kChow)
                .Coefficient(2)
                .get_str());
  EXPECT_EQ(RunCli("sequences --coeff 3 --k 2 --n-from 2 --n-to 3").status, 2);
  EXPECT_EQ(RunCli("sequences --k 4 --n-from 2 --n-to 3").status, 2);
}

TEST(MatroidCommandTest, ExportImport) {
  const std::filesystem::path path = TempFile("u24.json");
  const Result exported =
      RunCli("matroid --uniform-k 2 --uniform-n 4 --export " + path.string());
  ASSERT_EQ(exported.status, 0);
  EXPECT_TRUE(Contains(exported.out, "chow 1 + x\n")) << exported.out;

  const Result imported =
      RunCli("matroid --input " + path.string() + " --format json");
  ASSERT_EQ(imported.status, 0);
  const nlohmann::json j = nlohmann::json::parse(imported.out);
  EXPECT_EQ(MatroidFromJson(j.at("matroid")), UniformMatroid(2, 4));
  EXPECT_EQ(UniPolyFromJson(j.at("chow")),
            ClosedForm(2, 4, FormMethod::kMonomial, ChowKind::kChow));
  EXPECT_EQ(UniPolyFromJson(j.at("augmented_chow")),
            ClosedForm(2, 4, FormMethod::kMonomial, ChowKind::kAugmented));
  std::filesystem::remove(path);
}

TEST(MatroidCommandTest, SchubertWithLoops) {
  const Result r = RunCli("matroid --schubert-n 4 --subset 2,3");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(Contains(r.out, "loops {1}\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "cogirth 2\n")) << r.out;
  EXPECT_FALSE(Contains(r.out, "chow ")) << r.out;
}

TEST(MatroidCommandTest, BadInput) {
  const std::filesystem::path path = TempFile("bad.json");
  std::ofstream(path) << R"({"n": 4, "rank": 2, "bases": [[1, 2], [3, 4]]})";
  EXPECT_EQ(RunCli("matroid --input " + path.string()).status, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(RunCli("matroid --input /nonexistent/file.json").status, 2);
  EXPECT_EQ(RunCli("matroid").status, 2);
}

}  // namespace
}  // namespace chow
