#pragma once

// Data-parallel kernels. Every `*_parallel` kernel has a `*_serial`
// reference kept for testing and benchmarking. Parallel results do not
// depend on the worker count: floating-point partials are reduced in a
// fixed order and integer aggregates are exact.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth::kernels {

/// Maps a user worker count to an OpenMP thread count (<= 0 selects the
/// runtime default).
int resolve_workers(int workers);

/// Per-source aggregates of one all-sources BFS sweep.
struct SourceSums {
  std::vector<std::uint64_t> farness;      // sum of distances to reachable nodes
  std::vector<std::int32_t> eccentricity;  // max distance to a reachable node
  std::vector<std::uint32_t> reached;      // reachable nodes, excluding the source
};

SourceSums source_sums_serial(const CoauthGraph& g);
SourceSums source_sums_parallel(const CoauthGraph& g, int workers);

/// Unordered-pair betweenness (each {j,k} counted once).
std::vector<double> betweenness_serial(const CoauthGraph& g);
std::vector<double> betweenness_parallel(const CoauthGraph& g, int workers);

/// a dominates b: a >= b everywhere and a > b somewhere (maximization).
inline bool dominates_raw(const double* a, const double* b, std::size_t k) noexcept {
  bool strict = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

/// 1-based non-dominated front of each row of a row-major `rows x k`
/// matrix. Front of u = 1 + max front over rows dominating u.
std::vector<std::uint32_t> front_ranks_serial(std::span<const double> values, std::size_t rows,
                                              std::size_t k);
std::vector<std::uint32_t> front_ranks_parallel(std::span<const double> values, std::size_t rows,
                                                std::size_t k, int workers);

}  // namespace coauth::kernels
