#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "coauth/cli.hpp"
#include "coauth/macrostats.hpp"
#include "coauth/report_io.hpp"
#include "support/random_graphs.hpp"

namespace coauth {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = COAUTH_FIXTURE_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    out_ = fs::temp_directory_path() /
           ("coauth_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(out_);
  }
  void TearDown() override { fs::remove_all(out_); }

  int build(const std::string& corpus, const std::string& spec = "fixture_spec.json") {
    return cli::run({"build", "--corpus", (kFixtures / corpus).string(), "--spec",
                     (kFixtures / spec).string(), "--out", out_.string()});
  }

  std::string file(const std::string& name) const { return read_file(out_ / name); }

  fs::path out_;
};

TEST_F(CliTest, BuildThreeRecordCorpus) {
  ASSERT_EQ(build("three_records.jsonl", "three_records_spec.json"), cli::kOk);
  EXPECT_EQ(file("edges.csv"), "author_a,author_b,papers_count\nA,B,1\nB,C,1\n");
  EXPECT_EQ(file("selected_papers.txt"), "p1\np2\n");
  EXPECT_EQ(file("authors.csv"), "author,provenance\nA,seed\nB,seed\nC,expanded\n");
}

TEST_F(CliTest, MissingInputIsUsageError) {
  EXPECT_EQ(cli::run({"build", "--corpus", "/nonexistent.jsonl", "--spec",
                      (kFixtures / "fixture_spec.json").string(), "--out", out_.string()}),
            cli::kUsage);
  EXPECT_EQ(cli::run({"build"}), cli::kUsage);
  EXPECT_EQ(cli::run({"frobnicate"}), cli::kUsage);
}

TEST_F(CliTest, EmptySeedSetBuildsEmptyOutputs) {
  ASSERT_EQ(build("three_records.jsonl", "no_seeds_spec.json"), cli::kOk);
  EXPECT_EQ(file("edges.csv"), "author_a,author_b,papers_count\n");
  EXPECT_EQ(file("selected_papers.txt"), "");
  EXPECT_NE(cli::run({"stats", "--out", out_.string()}), cli::kOk);
}

TEST_F(CliTest, StatsOnTriangleAndPath) {
  ASSERT_EQ(build("triangle.jsonl"), cli::kOk);
  ASSERT_EQ(cli::run({"stats", "--out", out_.string()}), cli::kOk);
  EXPECT_NE(file("macro.csv").find("clustering_avg_local,1\n"), std::string::npos);
  fs::remove_all(out_);
  ASSERT_EQ(build("path.jsonl"), cli::kOk);
  ASSERT_EQ(cli::run({"stats", "--out", out_.string()}), cli::kOk);
  EXPECT_NE(file("macro.csv").find("diameter,2\n"), std::string::npos);
  EXPECT_NE(file("macro.json").find("\"diameter\":2"), std::string::npos);
}

TEST_F(CliTest, StatsWithoutArtifacts) {
  fs::create_directories(out_);
  EXPECT_EQ(cli::run({"stats", "--out", out_.string()}), cli::kUsage);
}

TEST_F(CliTest, StatsEqualsLibraryCall) {
  // 50-author random corpus of two-author papers.
  std::mt19937_64 rng(61);
  const auto g = testing::connected_random(50, 0.05, rng);
  std::vector<PaperRecord> corpus;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v)
        corpus.push_back({"e" + std::to_string(corpus.size()), "Genetic Programming", "PPSN", 2004,
                          {g.name(u), g.name(v)}});
  fs::create_directories(out_);
  write_corpus(corpus, out_ / "corpus.jsonl");
  ASSERT_EQ(cli::run({"build", "--corpus", (out_ / "corpus.jsonl").string(), "--spec",
                      (kFixtures / "fixture_spec.json").string(), "--out", out_.string()}),
            cli::kOk);
  ASSERT_EQ(cli::run({"stats", "--out", out_.string(), "--workers", "3"}), cli::kOk);
  const auto sel = selection_from_records(corpus);
  const auto direct = macro_report(build_graph(sel, corpus), sel, corpus);
  EXPECT_EQ(file("macro.csv"), macro_report_csv(direct));
}

TEST_F(CliTest, RankStarAllMeasures) {
  ASSERT_EQ(build("star.jsonl"), cli::kOk);
  ASSERT_EQ(cli::run({"rank", "--out", out_.string(), "--measures",
                      "degree,betweenness,closeness,power,eigenvector"}),
            cli::kOk);
  for (const char* m : {"degree", "betweenness", "closeness", "power", "eigenvector"}) {
    const auto csv = file(std::string("ranking_") + m + ".csv");
    EXPECT_EQ(csv.rfind("rank,author,score\n1,Hub,", 0), 0u) << m;
    EXPECT_TRUE(fs::exists(out_ / (std::string("ranking_") + m + ".meta.json")));
  }
  const auto fronts = file("fronts.csv");
  EXPECT_EQ(fronts.rfind("front,author,degree,betweenness,closeness,power,eigenvector\n1,Hub,", 0), 0u);
  EXPECT_NE(fronts.find("\n2,Leaf1,"), std::string::npos);
  EXPECT_TRUE(fs::exists(out_ / "scatter_closeness_power.csv"));
  EXPECT_TRUE(fs::exists(out_ / "components.csv"));
  // Only the hub has positive betweenness: the rank fit is skipped.
  EXPECT_FALSE(fs::exists(out_ / "rankfit.csv"));
}

TEST_F(CliTest, RankSingleMeasureDegeneratesToOrdering) {
  ASSERT_EQ(build("path.jsonl"), cli::kOk);
  ASSERT_EQ(cli::run({"rank", "--out", out_.string(), "--measures", "betweenness"}), cli::kOk);
  EXPECT_EQ(file("fronts.csv"), "front,author,betweenness\n1,B,1\n2,A,0\n2,C,0\n");
  EXPECT_EQ(file("ranking_betweenness.csv"), "rank,author,score\n1,B,1\n2,A,0\n3,C,0\n");
}

TEST_F(CliTest, RankUnknownMeasure) {
  ASSERT_EQ(build("path.jsonl"), cli::kOk);
  ::testing::internal::CaptureStderr();
  EXPECT_EQ(cli::run({"rank", "--out", out_.string(), "--measures", "pagerank"}), cli::kUsage);
  const auto err = ::testing::internal::GetCapturedStderr();
  EXPECT_NE(err.find("degree, betweenness, closeness, power, eigenvector"), std::string::npos);
}

TEST_F(CliTest, RankBadBetaIsUsageError) {
  ASSERT_EQ(build("star.jsonl"), cli::kOk);
  EXPECT_EQ(cli::run({"rank", "--out", out_.string(), "--measures", "power", "--beta-frac", "1.5"}),
            cli::kUsage);
}

TEST_F(CliTest, RankConvergenceFailureIsInternalError) {
  ASSERT_EQ(build("path.jsonl"), cli::kOk);
  EXPECT_EQ(cli::run({"rank", "--out", out_.string(), "--measures", "eigenvector", "--max-iter",
                      "1", "--tol", "1e-300"}),
            cli::kInternal);
}

}  // namespace
}  // namespace coauth
