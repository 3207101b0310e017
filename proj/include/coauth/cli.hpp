#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "coauth/centrality.hpp"
#include "coauth/scaling.hpp"

namespace coauth::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path spec;
  std::filesystem::path out;
  std::vector<Measure> measures{Measure::betweenness, Measure::closeness, Measure::power,
                                Measure::eigenvector};
  double beta_fraction = kDefaultBetaFraction;
  double alpha = 1.0;
  double tol = kDefaultTol;
  int max_iter = kDefaultMaxIter;
  std::size_t head_cut = kDefaultHeadCut;
  std::size_t max_fronts = 0;  // 0 = all
  int workers = 0;             // 0 = OpenMP default
};

// Artifact file names inside the output directory.
inline constexpr const char* kSelectedIdsFile = "selected_papers.txt";
inline constexpr const char* kAuthorManifestFile = "authors.csv";
inline constexpr const char* kSelectedCorpusFile = "selected_corpus.jsonl";
inline constexpr const char* kEdgeListFile = "edges.csv";
inline constexpr const char* kBuildSummaryFile = "build_summary.json";

/// Parses a comma-separated measure list; throws on unknown tags with a
/// message enumerating the valid ones.
std::vector<Measure> parse_measures(const std::string& list);

void cmd_build(const RunConfig& config);
void cmd_stats(const RunConfig& config);
void cmd_rank(const RunConfig& config);

/// Full command-line entry point; never throws.
int run(int argc, char** argv);
int run(std::vector<std::string> args);

}  // namespace coauth::cli
