#include <gtest/gtest.h>

#include <random>

#include "coauth/kernels.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

namespace coauth {
namespace {

TEST(Kernels, BetweennessParallelMatchesSerial) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::erdos_renyi(40 + t * 7, 0.08, rng);
    const auto serial = kernels::betweenness_serial(g);
    const auto parallel = kernels::betweenness_parallel(g, 4);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
      EXPECT_NEAR(serial[i], parallel[i], 1e-9 * (1.0 + serial[i]));
  }
}

TEST(Kernels, BetweennessBitwiseIndependentOfWorkerCount) {
  std::mt19937_64 rng(22);
  const auto g = testing::connected_random(300, 0.01, rng);
  const auto one = kernels::betweenness_parallel(g, 1);
  for (int w : {2, 3, 4, 8}) EXPECT_EQ(kernels::betweenness_parallel(g, w), one) << w;
}

TEST(Kernels, SourceSumsParallelMatchesSerialAndOracle) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    const auto g = testing::erdos_renyi(35, 0.07, rng);
    const auto s = kernels::source_sums_serial(g);
    const auto p = kernels::source_sums_parallel(g, 4);
    EXPECT_EQ(s.farness, p.farness);
    EXPECT_EQ(s.eccentricity, p.eccentricity);
    EXPECT_EQ(s.reached, p.reached);
    const auto d = oracle::floyd_warshall(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      std::uint64_t far = 0;
      int ecc = 0;
      std::uint32_t reached = 0;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == u || d[u][v] >= oracle::kInf) continue;
        far += static_cast<std::uint64_t>(d[u][v]);
        ecc = std::max(ecc, d[u][v]);
        ++reached;
      }
      EXPECT_EQ(s.farness[u], far);
      EXPECT_EQ(s.eccentricity[u], ecc);
      EXPECT_EQ(s.reached[u], reached);
    }
  }
}

TEST(Kernels, FrontRanksParallelMatchesSerialAndOracle) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + static_cast<std::size_t>(t) * 23;  // crosses block edges
    const std::size_t k = 1 + static_cast<std::size_t>(t) % 4;
    const auto v = testing::random_scores(rows, k, 6, rng);
    const auto serial = kernels::front_ranks_serial(v, rows, k);
    EXPECT_EQ(kernels::front_ranks_parallel(v, rows, k, 3), serial);
    EXPECT_EQ(oracle::naive_fronts(v, rows, k), serial);
  }
}

TEST(Kernels, EmptyInputs) {
  const CoauthGraph g;
  EXPECT_TRUE(kernels::betweenness_parallel(g, 2).empty());
  EXPECT_TRUE(kernels::source_sums_parallel(g, 2).farness.empty());
  EXPECT_TRUE(kernels::front_ranks_parallel({}, 0, 2, 2).empty());
}

}  // namespace
}  // namespace coauth
