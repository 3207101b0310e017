#include "coauth/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <tuple>

#include "coauth/error.hpp"
#include "coauth/report_io.hpp"

namespace coauth {

CoauthGraph::CoauthGraph(std::vector<std::string> names, std::vector<std::uint32_t> paper_count,
                         std::span<const std::tuple<NodeId, NodeId, std::uint32_t>> edges)
    : names_(std::move(names)), paper_count_(std::move(paper_count)) {
  const std::size_t n = names_.size();
  if (paper_count_.size() != n) throw ValidationError("paper_count length differs from node count");
  for (std::size_t i = 1; i < n; ++i)
    if (!(names_[i - 1] < names_[i])) throw ValidationError("node names must be strictly increasing");

  std::vector<std::tuple<NodeId, NodeId, std::uint32_t>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v, w] : edges) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop on node " + names_[u]);
    arcs.emplace_back(u, v, w);
    arcs.emplace_back(v, u, w);
  }
  std::sort(arcs.begin(), arcs.end());

  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < arcs.size();) {
    const auto [u, v, _] = arcs[i];
    std::uint32_t w = 0;
    for (; i < arcs.size() && std::get<0>(arcs[i]) == u && std::get<1>(arcs[i]) == v; ++i)
      w += std::get<2>(arcs[i]);
    targets_.push_back(v);
    weights_.push_back(w);
    ++offsets_[u + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

bool CoauthGraph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t CoauthGraph::edge_papers(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

std::optional<NodeId> CoauthGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<NodeId>(it - names_.begin());
}

CoauthGraph make_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "v%06zu", i);
    names[i] = buf;
  }
  std::vector<std::tuple<NodeId, NodeId, std::uint32_t>> weighted;
  for (auto [u, v] : edges) weighted.emplace_back(u, v, 1);
  std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
    return std::minmax(std::get<0>(a), std::get<1>(a)) < std::minmax(std::get<0>(b), std::get<1>(b));
  });
  auto same = [](const auto& a, const auto& b) {
    return std::minmax(std::get<0>(a), std::get<1>(a)) == std::minmax(std::get<0>(b), std::get<1>(b));
  };
  weighted.erase(std::unique(weighted.begin(), weighted.end(), same), weighted.end());
  return CoauthGraph(std::move(names), std::vector<std::uint32_t>(n, 1), weighted);
}

CoauthGraph build_graph(const CorpusSelection& selection, std::span<const PaperRecord> corpus) {
  // std::map iteration is lexicographic, which fixes node indexing.
  std::vector<std::string> names;
  names.reserve(selection.authors.size());
  for (const auto& [name, _] : selection.authors) names.push_back(name);

  auto index_of = [&](const std::string& name) -> NodeId {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name)
      throw ValidationError("author '" + name + "' of a selected paper is missing from the selection");
    return static_cast<NodeId>(it - names.begin());
  };

  std::vector<std::uint32_t> paper_count(names.size(), 0);
  std::vector<std::tuple<NodeId, NodeId, std::uint32_t>> edges;
  std::size_t found = 0;
  for (const auto& rec : corpus) {
    if (!selection.papers.contains(rec.id)) continue;
    ++found;
    std::vector<NodeId> ids;
    for (const auto& a : rec.authors) ids.push_back(index_of(a));
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ++paper_count[ids[i]];
      for (std::size_t j = i + 1; j < ids.size(); ++j) edges.emplace_back(ids[i], ids[j], 1);
    }
  }
  if (found != selection.papers.size())
    throw ValidationError("selection references paper ids absent from the corpus");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (paper_count[i] == 0)
      throw ValidationError("author '" + names[i] + "' signs no selected paper");
  return CoauthGraph(std::move(names), std::move(paper_count), edges);
}

DistanceRow bfs_row(const CoauthGraph& g, NodeId source) {
  const std::size_t n = g.node_count();
  DistanceRow row{source, std::vector<std::int32_t>(n, kUnreachable), std::vector<double>(n, 0.0)};
  std::vector<NodeId> queue;
  queue.reserve(n);
  row.dist[source] = 0;
  row.sigma[source] = 1.0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (row.dist[v] == kUnreachable) {
        row.dist[v] = row.dist[u] + 1;
        queue.push_back(v);
      }
      if (row.dist[v] == row.dist[u] + 1) row.sigma[v] += row.sigma[u];
    }
  }
  return row;
}

std::vector<NodeId> ComponentMap::members(std::uint32_t component) const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < component_of.size(); ++i)
    if (component_of[i] == component) out.push_back(static_cast<NodeId>(i));
  return out;
}

ComponentMap components(const CoauthGraph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> raw(n, unset);
  std::vector<std::size_t> raw_sizes;  // discovery order == smallest member order
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (raw[s] != unset) continue;
    const auto id = static_cast<std::uint32_t>(raw_sizes.size());
    std::size_t size = 0;
    raw[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (raw[v] == unset) {
          raw[v] = id;
          stack.push_back(v);
        }
      }
    }
    raw_sizes.push_back(size);
  }

  std::vector<std::uint32_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return raw_sizes[a] > raw_sizes[b]; });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  ComponentMap map;
  map.component_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.component_of[i] = rank[raw[i]];
  for (auto id : order) map.sizes.push_back(raw_sizes[id]);
  return map;
}

std::string edge_list_csv(const CoauthGraph& g) {
  std::string out = "author_a,author_b,papers_count\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      out += csv_field(g.name(u)) + ',' + csv_field(g.name(v)) + ',' +
             std::to_string(g.edge_papers(u, v)) + '\n';
    }
  }
  return out;
}

}  // namespace coauth
