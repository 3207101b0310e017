#include "coauth/kernels.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace coauth::kernels {

namespace {

// Fixed partition of the source range; partials are summed chunk by chunk
// in index order, so results are the same for any thread count.
constexpr std::size_t kSourceChunks = 64;
constexpr std::size_t kFrontBlock = 256;

/// Reusable BFS buffers for one thread.
struct BfsWorkspace {
  explicit BfsWorkspace(std::size_t n) : dist(n, kUnreachable), sigma(n, 0.0), delta(n, 0.0) {
    order.reserve(n);
  }

  std::vector<std::int32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;

  void reset() {
    for (NodeId v : order) {
      dist[v] = kUnreachable;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
    order.clear();
  }

  void bfs(const CoauthGraph& g, NodeId s, bool count_paths) {
    reset();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          order.push_back(v);
        }
        if (count_paths && dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }
  }

  /// Brandes back-propagation of the last BFS; adds dependencies into `acc`.
  void accumulate(const CoauthGraph& g, std::vector<double>& acc) {
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeId w = order[i];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (NodeId v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] * coeff;
      acc[w] += delta[w];
    }
  }
};

void sweep_one(const CoauthGraph& g, NodeId s, BfsWorkspace& ws, SourceSums& out) {
  ws.bfs(g, s, false);
  std::uint64_t far = 0;
  std::int32_t ecc = 0;
  for (NodeId v : ws.order) {
    far += static_cast<std::uint64_t>(ws.dist[v]);
    ecc = std::max(ecc, ws.dist[v]);
  }
  out.farness[s] = far;
  out.eccentricity[s] = ecc;
  out.reached[s] = static_cast<std::uint32_t>(ws.order.size() - 1);
}

SourceSums make_sums(std::size_t n) {
  return {std::vector<std::uint64_t>(n, 0), std::vector<std::int32_t>(n, 0),
          std::vector<std::uint32_t>(n, 0)};
}

std::vector<std::size_t> lexicographic_descending(std::span<const double> values, std::size_t rows,
                                                  std::size_t k) {
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double* ra = values.data() + a * k;
    const double* rb = values.data() + b * k;
    return std::lexicographical_compare(rb, rb + k, ra, ra + k);
  });
  return order;
}

}  // namespace

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

SourceSums source_sums_serial(const CoauthGraph& g) {
  const std::size_t n = g.node_count();
  SourceSums out = make_sums(n);
  BfsWorkspace ws(n);
  for (NodeId s = 0; s < n; ++s) sweep_one(g, s, ws, out);
  return out;
}

SourceSums source_sums_parallel(const CoauthGraph& g, int workers) {
  const std::size_t n = g.node_count();
  SourceSums out = make_sums(n);
#pragma omp parallel num_threads(resolve_workers(workers))
  {
    BfsWorkspace ws(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s)
      sweep_one(g, static_cast<NodeId>(s), ws, out);
  }
  return out;
}

std::vector<double> betweenness_serial(const CoauthGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> acc(n, 0.0);
  BfsWorkspace ws(n);
  for (NodeId s = 0; s < n; ++s) {
    ws.bfs(g, s, true);
    ws.accumulate(g, acc);
  }
  // Each unordered pair was seen from both endpoints.
  for (double& x : acc) x /= 2.0;
  return acc;
}

std::vector<double> betweenness_parallel(const CoauthGraph& g, int workers) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  const std::size_t chunks = std::min(kSourceChunks, n);
  std::vector<std::vector<double>> partial(chunks);
#pragma omp parallel num_threads(resolve_workers(workers))
  {
    BfsWorkspace ws(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const std::size_t begin = n * static_cast<std::size_t>(c) / chunks;
      const std::size_t end = n * (static_cast<std::size_t>(c) + 1) / chunks;
      std::vector<double> acc(n, 0.0);
      for (std::size_t s = begin; s < end; ++s) {
        ws.bfs(g, static_cast<NodeId>(s), true);
        ws.accumulate(g, acc);
      }
      partial[static_cast<std::size_t>(c)] = std::move(acc);
    }
  }
  std::vector<double> total(n, 0.0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < n; ++i) total[i] += p[i];
  for (double& x : total) x /= 2.0;
  return total;
}

std::vector<std::uint32_t> front_ranks_serial(std::span<const double> values, std::size_t rows,
                                              std::size_t k) {
  const auto order = lexicographic_descending(values, rows, k);
  std::vector<std::uint32_t> front(rows, 0);
  // A dominator is lexicographically greater, so it precedes u in `order`.
  for (std::size_t p = 0; p < rows; ++p) {
    const std::size_t u = order[p];
    const double* ru = values.data() + u * k;
    std::uint32_t best = 0;
    for (std::size_t q = 0; q < p; ++q) {
      const std::size_t v = order[q];
      if (front[v] > best && dominates_raw(values.data() + v * k, ru, k)) best = front[v];
    }
    front[u] = best + 1;
  }
  return front;
}

std::vector<std::uint32_t> front_ranks_parallel(std::span<const double> values, std::size_t rows,
                                                std::size_t k, int workers) {
  const auto order = lexicographic_descending(values, rows, k);
  std::vector<std::uint32_t> front(rows, 0);
  std::vector<std::uint32_t> best(kFrontBlock, 0);
  const int threads = resolve_workers(workers);
  for (std::size_t b0 = 0; b0 < rows; b0 += kFrontBlock) {
    const std::size_t b1 = std::min(rows, b0 + kFrontBlock);
    // Rows before b0 are final; scan them in parallel for each block row.
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t p = static_cast<std::int64_t>(b0); p < static_cast<std::int64_t>(b1); ++p) {
      const double* ru = values.data() + order[static_cast<std::size_t>(p)] * k;
      std::uint32_t m = 0;
      for (std::size_t q = 0; q < b0; ++q) {
        const std::size_t v = order[q];
        if (front[v] > m && dominates_raw(values.data() + v * k, ru, k)) m = front[v];
      }
      best[static_cast<std::size_t>(p) - b0] = m;
    }
    for (std::size_t p = b0; p < b1; ++p) {
      const std::size_t u = order[p];
      const double* ru = values.data() + u * k;
      std::uint32_t m = best[p - b0];
      for (std::size_t q = b0; q < p; ++q) {
        const std::size_t v = order[q];
        if (front[v] > m && dominates_raw(values.data() + v * k, ru, k)) m = front[v];
      }
      front[u] = m + 1;
    }
  }
  return front;
}

}  // namespace coauth::kernels
