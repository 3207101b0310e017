#include <gtest/gtest.h>

#include <random>

#include "coauth/error.hpp"
#include "coauth/macrostats.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

namespace coauth {
namespace {

struct Fixture {
  std::vector<PaperRecord> corpus;
  CorpusSelection selection;
  CoauthGraph graph;
};

Fixture from_papers(const std::vector<std::vector<std::string>>& papers) {
  Fixture f;
  for (std::size_t i = 0; i < papers.size(); ++i)
    f.corpus.push_back({"p" + std::to_string(i), "t", "v", 2000, papers[i]});
  f.selection = selection_from_records(f.corpus);
  f.graph = build_graph(f.selection, f.corpus);
  return f;
}

TEST(MacroReport, Triangle) {
  const auto f = from_papers({{"A", "B", "C"}});
  const auto r = macro_report(f.graph, f.selection, f.corpus);
  EXPECT_EQ(r.total_papers, 1u);
  EXPECT_EQ(r.total_authors, 3u);
  EXPECT_DOUBLE_EQ(r.mean_papers_per_author, 1.0);
  EXPECT_DOUBLE_EQ(r.mean_authors_per_paper, 3.0);
  EXPECT_DOUBLE_EQ(r.collaborators_per_author, 2.0);
  EXPECT_EQ(r.giant_size, 3u);
  EXPECT_DOUBLE_EQ(r.giant_pct, 100.0);
  EXPECT_EQ(r.second_component, 0u);
  EXPECT_DOUBLE_EQ(r.clustering_avg_local, 1.0);
  EXPECT_DOUBLE_EQ(r.clustering_transitivity, 1.0);
  EXPECT_DOUBLE_EQ(r.mean_distance, 1.0);
  EXPECT_EQ(r.diameter, 1);
}

TEST(MacroReport, PathOfTwoPapers) {
  const auto f = from_papers({{"A", "B"}, {"B", "C"}});
  const auto r = macro_report(f.graph, f.selection, f.corpus);
  EXPECT_DOUBLE_EQ(r.clustering_avg_local, 0.0);
  EXPECT_DOUBLE_EQ(r.mean_distance, 4.0 / 3.0);  // pairs: 1 + 1 + 2
  EXPECT_EQ(r.diameter, 2);
}

TEST(MacroReport, EmptyNetwork) {
  const Fixture f;
  EXPECT_THROW(macro_report(f.graph, f.selection, f.corpus), ValidationError);
}

TEST(MacroReport, ComponentsAndSingleAuthorPapers) {
  const auto f = from_papers({{"A", "B", "C"}, {"C", "D"}, {"E", "F"}, {"G"}, {"A"}});
  const auto r = macro_report(f.graph, f.selection, f.corpus);
  EXPECT_EQ(r.total_papers, 5u);
  EXPECT_EQ(r.total_authors, 7u);
  EXPECT_EQ(r.giant_size, 4u);
  EXPECT_EQ(r.second_component, 2u);
  EXPECT_DOUBLE_EQ(r.giant_pct, 100.0 * 4.0 / 7.0);
  EXPECT_EQ(r.signature_count, 9u);
  EXPECT_DOUBLE_EQ(r.mean_papers_per_author, 9.0 / 7.0);
  EXPECT_DOUBLE_EQ(r.mean_authors_per_paper, 9.0 / 5.0);
  // Local: A=1, B=1, C=1/3 (degree 3, one link); D,E,F,G excluded.
  EXPECT_DOUBLE_EQ(r.clustering_avg_local, (1.0 + 1.0 + 1.0 / 3.0) / 3.0);
  EXPECT_DOUBLE_EQ(r.clustering_transitivity, 3.0 / 5.0);
}

TEST(MacroReport, RandomGraphsMatchOracles) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    const auto g = testing::erdos_renyi(10 + t, 0.12, rng);
    const auto cc = clustering(g);
    EXPECT_EQ(cc.triangles, oracle::triangles(g));
    EXPECT_EQ(cc.connected_triples, oracle::connected_triples(g));
    const auto ps = giant_path_stats(g, 3);
    const auto expect = oracle::giant_paths(g);
    EXPECT_EQ(ps.diameter, expect.diameter);
    EXPECT_DOUBLE_EQ(ps.mean_distance, expect.mean_distance);
    if (ps.pair_count > 0) EXPECT_GE(ps.diameter, ps.mean_distance);
  }
}

TEST(MacroReport, CsvAndJsonKeys) {
  const auto f = from_papers({{"A", "B", "C"}});
  const auto r = macro_report(f.graph, f.selection, f.corpus);
  const auto csv = macro_report_csv(r);
  EXPECT_EQ(csv.substr(0, 10), "key,value\n");
  for (const char* key : {"total_papers", "total_authors", "mean_papers_per_author",
                          "mean_authors_per_paper", "collaborators_per_author", "giant_size",
                          "giant_pct", "second_component", "clustering_avg_local",
                          "clustering_transitivity", "mean_distance", "diameter"}) {
    EXPECT_NE(csv.find(std::string(key) + ','), std::string::npos) << key;
    EXPECT_NE(macro_report_json(r).find('"' + std::string(key) + "\":"), std::string::npos) << key;
  }
  EXPECT_NE(csv.find("mean_distance,1\n"), std::string::npos);
}

}  // namespace
}  // namespace coauth
