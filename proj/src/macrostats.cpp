#include "coauth/macrostats.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coauth/error.hpp"
#include "coauth/kernels.hpp"
#include "coauth/report_io.hpp"

namespace coauth {

ClusteringCounts clustering(const CoauthGraph& g) {
  ClusteringCounts out;
  const std::size_t n = g.node_count();
  double local_sum = 0.0;
  std::size_t local_nodes = 0;
  for (NodeId u = 0; u < n; ++u) {
    const std::uint64_t d = g.degree(u);
    if (d < 2) continue;
    auto nb = g.neighbors(u);
    std::uint64_t links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) ++links;
    const std::uint64_t pairs = d * (d - 1) / 2;
    out.connected_triples += pairs;
    out.triangles += links;  // each triangle seen from its 3 corners
    local_sum += static_cast<double>(links) / static_cast<double>(pairs);
    ++local_nodes;
  }
  out.triangles /= 3;
  out.avg_local = local_nodes ? local_sum / static_cast<double>(local_nodes) : 0.0;
  return out;
}

GiantPathStats giant_path_stats(const CoauthGraph& g, int workers) {
  GiantPathStats out;
  if (g.node_count() == 0) return out;
  const ComponentMap comps = components(g);
  const kernels::SourceSums sums = kernels::source_sums_parallel(g, workers);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (comps.component_of[u] != 0) continue;
    out.length_sum += sums.farness[u];
    out.diameter = std::max(out.diameter, static_cast<int>(sums.eccentricity[u]));
  }
  // Every unordered pair was counted from both ends.
  out.length_sum /= 2;
  const std::uint64_t giant = comps.sizes.front();
  out.pair_count = giant * (giant - 1) / 2;
  out.mean_distance =
      out.pair_count ? static_cast<double>(out.length_sum) / static_cast<double>(out.pair_count) : 0.0;
  return out;
}

MacroReport macro_report(const CoauthGraph& g, const CorpusSelection& selection,
                         std::span<const PaperRecord> corpus, int workers) {
  const std::size_t n = g.node_count();
  if (n == 0) throw ValidationError("empty network");

  MacroReport r;
  r.total_papers = selection.papers.size();
  r.total_authors = n;
  for (const auto& rec : corpus)
    if (selection.papers.contains(rec.id)) r.signature_count += rec.authors.size();
  for (NodeId u = 0; u < n; ++u) r.paper_signatures += g.paper_count(u);
  if (r.signature_count != r.paper_signatures)
    throw ValidationError("graph was not built from this selection");

  r.mean_papers_per_author = static_cast<double>(r.paper_signatures) / static_cast<double>(n);
  r.mean_authors_per_paper =
      r.total_papers ? static_cast<double>(r.signature_count) / static_cast<double>(r.total_papers) : 0.0;
  r.collaborators_per_author = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);

  const ComponentMap comps = components(g);
  r.giant_size = comps.sizes[0];
  r.giant_pct = 100.0 * static_cast<double>(r.giant_size) / static_cast<double>(n);
  r.second_component = comps.sizes.size() > 1 ? comps.sizes[1] : 0;

  const ClusteringCounts cc = clustering(g);
  r.clustering_avg_local = cc.avg_local;
  r.clustering_transitivity =
      cc.connected_triples
          ? 3.0 * static_cast<double>(cc.triangles) / static_cast<double>(cc.connected_triples)
          : 0.0;

  const GiantPathStats ps = giant_path_stats(g, workers);
  r.mean_distance = ps.mean_distance;
  r.diameter = ps.diameter;
  return r;
}

namespace {

std::vector<std::pair<const char*, std::string>> fields(const MacroReport& r) {
  return {
      {"total_papers", std::to_string(r.total_papers)},
      {"total_authors", std::to_string(r.total_authors)},
      {"mean_papers_per_author", format_double(r.mean_papers_per_author)},
      {"mean_authors_per_paper", format_double(r.mean_authors_per_paper)},
      {"collaborators_per_author", format_double(r.collaborators_per_author)},
      {"giant_size", std::to_string(r.giant_size)},
      {"giant_pct", format_double(r.giant_pct)},
      {"second_component", std::to_string(r.second_component)},
      {"clustering_avg_local", format_double(r.clustering_avg_local)},
      {"clustering_transitivity", format_double(r.clustering_transitivity)},
      {"mean_distance", format_double(r.mean_distance)},
      {"diameter", std::to_string(r.diameter)},
  };
}

}  // namespace

std::string macro_report_csv(const MacroReport& r) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : fields(r)) out += std::string(k) + ',' + v + '\n';
  return out;
}

std::string macro_report_json(const MacroReport& r) {
  // Values are emitted through the same formatter as the CSV so the two
  // files agree digit for digit.
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : fields(r)) {
    if (!first) out += ',';
    first = false;
    out += nlohmann::json(k).dump() + ':' + v;
  }
  out += "}\n";
  return out;
}

}  // namespace coauth
