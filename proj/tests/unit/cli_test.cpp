// Copyright 2026 The SmartEmbed Authors
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
#include <string>
#include <vector>

#include "cli.hpp"
#include "smartembed/detect/report_json.hpp"
#include "smartembed/embedding/model_io.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/simindex/matrix_io.hpp"
#include "support/detection.hpp"

namespace smartembed {
namespace {

namespace fs = std::filesystem;
namespace det = testing::detection;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "smartembed");
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string bytesOf(const fs::path& p) { return det::readText(p); }

/// One seed-corpus index built through the command line, shared by the suite.
class CliPipeline : public ::testing::Test {
 protected:
  static fs::path dir_;

  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("smartembed_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const std::string bugdb = det::seedBugDb().string();
    ASSERT_EQ(runCli({"ingest", (det::seedDir() / "corpus").string(), "--out", p("manifest.json")}).code, 0);
    ASSERT_EQ(runCli({"train", "--manifest", p("manifest.json"), "--out", p("model.bin"), "--bugdb", bugdb, "--dim",
                      "100", "--epochs", "10", "--seed", "42"})
                  .code,
              0);
    ASSERT_EQ(runCli({"index", "--manifest", p("manifest.json"), "--model", p("model.bin"), "--out", p("corpus.mat"),
                      "--bugdb", bugdb, "--bug-out", p("bugs.mat"), "--report", p("report.json")})
                  .code,
              0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string p(const std::string& name) { return (dir_ / name).string(); }
};

fs::path CliPipeline::dir_;

TEST(CliUsage, NoSubcommandPrintsHelpAndExitsOne) {
  const Result r = runCli({});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("Subcommands:"), std::string::npos);
}

TEST(CliUsage, HelpExitsZeroAndShowsDefaults) {
  const Result r = runCli({"train", "--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("--dim"), std::string::npos);
  EXPECT_NE(r.out.find("[100]"), std::string::npos);
  EXPECT_NE(r.out.find("[0.05]"), std::string::npos);
}

TEST(CliUsage, UnknownFlagAndMissingRequiredAreUsageErrors) {
  EXPECT_EQ(runCli({"pairs", "--corpus", "x.mat"}).code, cli::kExitUsage);  // no default threshold
  EXPECT_EQ(runCli({"pairs", "--corpus", "x.mat", "--threshold", "0.9", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"pairs", "--corpus", "x.mat", "--threshold", "1.5"}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"serialize", "--file", "x.sol", "--level", "function"}).code, cli::kExitUsage);
  EXPECT_EQ(runCli({"index", "--manifest", "m", "--model", "m", "--out", "o", "--bugdb", "b"}).code,
            cli::kExitUsage);
  EXPECT_EQ(runCli({"frobnicate"}).code, cli::kExitUsage);
}

TEST(CliUsage, MissingInputFileIsInputError) {
  const Result r = runCli({"serialize", "--file", "/nonexistent/x.sol"});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(CliUsage, SerializeMatchesLibraryDocuments) {
  const fs::path file = det::fixtureDir() / "wallet_fork.sol";
  const frontend::AnalyzedSource src = frontend::analyzeSource(det::readText(file), file.string());

  const Result contract = runCli({"serialize", "--file", file.string()});
  ASSERT_EQ(contract.code, 0) << contract.err;
  EXPECT_EQ(contract.out, frontend::formatDocumentLine(frontend::contractDocument(src)) + "\n");

  const Result stmts = runCli({"serialize", "--file", file.string(), "--level", "statement"});
  ASSERT_EQ(stmts.code, 0) << stmts.err;
  std::string expected;
  for (const auto& d : frontend::statementDocuments(src)) expected += frontend::formatDocumentLine(d) + "\n";
  EXPECT_EQ(stmts.out, expected);

  const Result raw = runCli({"serialize", "--file", file.string(), "--raw"});
  ASSERT_EQ(raw.code, 0);
  EXPECT_NE(raw.out, contract.out);
  EXPECT_NE(raw.out.find("guardian"), std::string::npos);  // identifiers keep their spelling
}

TEST(CliUsage, ParseErrorReportsPosition) {
  const fs::path bad = fs::temp_directory_path() / "smartembed_cli_bad.sol";
  std::ofstream(bad) << "contract {\n";
  const Result r = runCli({"serialize", "--file", bad.string()});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  fs::remove(bad);
}

TEST(CliUsage, ConfigFileSuppliesAbsentFlags) {
  const std::vector<std::string> values{"threshold", "corpus"};
  const std::vector<std::string> flags{"stats", "json"};
  const std::string cfg = "# defaults\nthreshold = 0.9\nstats = true\njson = false\nunrelated = 3\n";

  EXPECT_EQ(cli::configArguments(cfg, {"smartembed", "pairs"}, values, flags),
            (std::vector<std::string>{"--threshold", "0.9", "--stats"}));
  // flags given on the command line win
  EXPECT_EQ(cli::configArguments(cfg, {"smartembed", "pairs", "--threshold", "0.5"}, values, flags),
            (std::vector<std::string>{"--stats"}));
  EXPECT_EQ(cli::configArguments(cfg, {"smartembed", "pairs", "--threshold=0.5", "--stats"}, values, flags),
            std::vector<std::string>{});
  EXPECT_EQ(cli::configArguments("--corpus = \"a b.mat\"\n", {}, values, flags),
            (std::vector<std::string>{"--corpus", "a b.mat"}));
  EXPECT_ANY_THROW(cli::configArguments("threshold 0.9\n", {}, values, flags));
  EXPECT_ANY_THROW(cli::configArguments("stats = maybe\n", {}, values, flags));
}

TEST(CliUsage, UnreadableConfigIsUsageError) {
  EXPECT_EQ(runCli({"--config", "/nonexistent/cfg", "pairs", "--corpus", "x", "--threshold", "1"}).code,
            cli::kExitUsage);
}

TEST_F(CliPipeline, ArtifactsMatchLibraryBuild) {
  const auto& lib = det::seededArtifacts();
  const fs::path libC = dir_ / "lib_corpus.mat";
  const fs::path libB = dir_ / "lib_bugs.mat";
  simindex::saveMatrix(lib.corpus, libC);
  simindex::saveMatrix(*lib.bugMatrix, libB);
  EXPECT_EQ(bytesOf(p("corpus.mat")), bytesOf(libC));
  EXPECT_EQ(bytesOf(p("bugs.mat")), bytesOf(libB));
  EXPECT_TRUE(fs::exists(p("report.json")));
}

TEST_F(CliPipeline, ClonesJsonRoundTripsAndFindsSelf) {
  const fs::path query = det::seedDir() / "corpus" / "escrow.sol";
  const Result r = runCli({"clones", "--file", query.string(), "--corpus", p("corpus.mat"), "--model",
                           p("model.bin"), "--top", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const detect::CloneReport report = detect::cloneReportFromJson(r.out);
  ASSERT_EQ(report.matches.size(), 3u);
  EXPECT_EQ(report.matches[0].sourceRef, "escrow.sol");
  EXPECT_DOUBLE_EQ(report.matches[0].similarity, 1.0);
  EXPECT_EQ(detect::cloneReportToJson(report), r.out);

  const Result text = runCli({"clones", "--file", query.string(), "--corpus", p("corpus.mat"), "--model",
                              p("model.bin"), "--top", "3"});
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("escrow.sol"), std::string::npos);
}

TEST_F(CliPipeline, BugsReportPlantedStatement) {
  const fs::path query = det::fixtureDir() / "overflow_fork.sol";
  const Result r = runCli({"bugs", "--file", query.string(), "--bugmat", p("bugs.mat"), "--bugdb",
                           det::seedBugDb().string(), "--model", p("model.bin"), "--json", "--verbose"});
  ASSERT_EQ(r.code, 0) << r.err;
  const detect::BugReport report = detect::bugReportFromJson(r.out);
  EXPECT_DOUBLE_EQ(report.thresholdUsed, 0.95);
  ASSERT_FALSE(report.findings.empty());
  EXPECT_EQ(report.findings[0].startLine, 8u);
  EXPECT_EQ(report.findings[0].bugId, "BUG-001");
  EXPECT_GE(report.allMatches.size(), report.findings.size());

  const Result strict = runCli({"bugs", "--file", query.string(), "--bugmat", p("bugs.mat"), "--bugdb",
                                det::seedBugDb().string(), "--model", p("model.bin"), "--threshold", "1"});
  ASSERT_EQ(strict.code, 0);
  EXPECT_NE(strict.out.find("BUG-001"), std::string::npos);  // the verbatim copy is exact
}

TEST_F(CliPipeline, EmptyFileIsInputError) {
  const fs::path empty = dir_ / "empty.sol";
  std::ofstream(empty) << "// nothing here\n";
  const Result r = runCli({"clones", "--file", empty.string(), "--corpus", p("corpus.mat"), "--model",
                           p("model.bin")});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("EmptyContract"), std::string::npos);
}

TEST_F(CliPipeline, PairsJsonAndStatsAgree) {
  const Result j = runCli({"pairs", "--corpus", p("corpus.mat"), "--threshold", "0.8", "--json"});
  ASSERT_EQ(j.code, 0) << j.err;
  const detect::ClonePairsResult parsed = detect::clonePairsFromJson(j.out);
  const detect::ClonePairsResult lib =
      detect::detectClonePairs(simindex::loadMatrix(p("corpus.mat")), 0.8);
  EXPECT_EQ(parsed, lib);

  const Result s = runCli({"pairs", "--corpus", p("corpus.mat"), "--threshold", "0.8", "--stats"});
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("clone pairs   " + std::to_string(lib.stats.clonePairCount)), std::string::npos);
}

TEST_F(CliPipeline, ConfigFileDrivesSubcommand) {
  const fs::path cfg = dir_ / "pairs.cfg";
  std::ofstream(cfg) << "corpus = " << p("corpus.mat") << "\nthreshold = 0.8\njson = true\n";
  const Result r = runCli({"--config", cfg.string(), "pairs"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(detect::clonePairsFromJson(r.out).stats.threshold, 0.8);
}

TEST_F(CliPipeline, DimensionMismatchIsInputError) {
  ASSERT_EQ(runCli({"train", "--manifest", p("manifest.json"), "--out", p("small.bin"), "--dim", "8", "--epochs",
                    "1"})
                .code,
            0);
  const fs::path query = det::seedDir() / "corpus" / "escrow.sol";
  const Result r =
      runCli({"clones", "--file", query.string(), "--corpus", p("corpus.mat"), "--model", p("small.bin")});
  EXPECT_EQ(r.code, cli::kExitInput);
}

}  // namespace
}  // namespace smartembed
