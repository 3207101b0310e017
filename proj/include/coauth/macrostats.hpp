#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "coauth/corpus.hpp"
#include "coauth/graph.hpp"

namespace coauth {

/// Macroscopic network measures, one field per summary row.
struct MacroReport {
  std::size_t total_papers = 0;
  std::size_t total_authors = 0;
  double mean_papers_per_author = 0.0;
  double mean_authors_per_paper = 0.0;
  double collaborators_per_author = 0.0;
  std::size_t giant_size = 0;
  double giant_pct = 0.0;
  std::size_t second_component = 0;
  double clustering_avg_local = 0.0;
  double clustering_transitivity = 0.0;
  double mean_distance = 0.0;
  int diameter = 0;

  // Raw totals behind the ratios, kept for exact identity checks.
  std::size_t signature_count = 0;  // sum of per-paper author counts
  std::size_t paper_signatures = 0;  // sum of per-author paper counts
};

struct ClusteringCounts {
  std::uint64_t triangles = 0;
  std::uint64_t connected_triples = 0;
  double avg_local = 0.0;  // over nodes with degree >= 2
};

ClusteringCounts clustering(const CoauthGraph& g);

/// Mean geodesic length over unordered pairs of the giant component and
/// the component's diameter. Pairs in different components are skipped.
struct GiantPathStats {
  double mean_distance = 0.0;
  int diameter = 0;
  std::uint64_t pair_count = 0;
  std::uint64_t length_sum = 0;
};

GiantPathStats giant_path_stats(const CoauthGraph& g, int workers = 0);

/// Throws ValidationError("empty network") when `g` has no nodes.
MacroReport macro_report(const CoauthGraph& g, const CorpusSelection& selection,
                         std::span<const PaperRecord> corpus, int workers = 0);

/// Key/value CSV with header `key,value`.
std::string macro_report_csv(const MacroReport& r);
/// Single JSON object on one line.
std::string macro_report_json(const MacroReport& r);

}  // namespace coauth
