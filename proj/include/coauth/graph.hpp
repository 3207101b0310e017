#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coauth/corpus.hpp"

namespace coauth {

using NodeId = std::uint32_t;

/// Distance value for nodes not reachable from the BFS source.
inline constexpr std::int32_t kUnreachable = -1;

/// Simple undirected unweighted co-authorship graph in CSR form.
///
/// Nodes are indexed 0..n-1 in lexicographic order of author name, so
/// node order and name order agree. Neighbor lists are sorted. Edge
/// multiplicity (co-signed papers) is kept only as metadata.
class CoauthGraph {
 public:
  CoauthGraph() = default;

  /// Builds from names (must be strictly increasing), per-node paper counts
  /// and an edge list of (u, v, papers) with u != v. Duplicate edges are
  /// merged by summing their paper counts.
  CoauthGraph(std::vector<std::string> names, std::vector<std::uint32_t> paper_count,
              std::span<const std::tuple<NodeId, NodeId, std::uint32_t>> edges);

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
  bool has_edge(NodeId u, NodeId v) const;

  /// Co-signed paper count for an existing edge, 0 otherwise.
  std::uint32_t edge_papers(NodeId u, NodeId v) const;

  const std::string& name(NodeId u) const { return names_[u]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<NodeId> find(std::string_view name) const;

  std::uint32_t paper_count(NodeId u) const noexcept { return paper_count_[u]; }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> paper_count_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<std::uint32_t> weights_;
};

/// Synthetic graph with zero-padded names so name order equals index
/// order. Every node gets paper_count 1. Used by tests and benchmarks.
CoauthGraph make_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

/// Node set = selection.authors; one clique per selected paper.
CoauthGraph build_graph(const CorpusSelection& selection, std::span<const PaperRecord> corpus);

struct DistanceRow {
  NodeId source = 0;
  std::vector<std::int32_t> dist;
  /// Number of distinct geodesics from source; 0 when unreachable.
  std::vector<double> sigma;
};

DistanceRow bfs_row(const CoauthGraph& g, NodeId source);

struct ComponentMap {
  /// Component ids are ranks in `sizes`: 0 is the giant component.
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;

  std::vector<NodeId> members(std::uint32_t component) const;
};

/// Sizes sorted descending; equal sizes ordered by smallest member index.
ComponentMap components(const CoauthGraph& g);

/// CSV `author_a,author_b,papers_count`, one row per edge with a < b.
std::string edge_list_csv(const CoauthGraph& g);

}  // namespace coauth
