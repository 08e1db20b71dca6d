#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sturan/generators.hpp"
#include "sturan/spectral.hpp"

namespace sturan {
namespace {

TEST(SpectralRadiusTest, Examples) {
  const auto k5 = spectral_radius(complete_graph(5));
  EXPECT_TRUE(k5.converged);
  EXPECT_NEAR(k5.value, 4.0, 1e-9);

  const auto k23 = spectral_radius(complete_multipartite({2, 3}));
  EXPECT_TRUE(k23.converged);
  EXPECT_NEAR(k23.value, std::sqrt(6.0), 1e-9);

  const auto c5 = spectral_radius(cycle_graph(5));
  EXPECT_NEAR(c5.value, 2.0, 1e-9);
}

TEST(SpectralRadiusTest, EdgelessAndErrors) {
  const auto empty = spectral_radius(Graph(4));
  EXPECT_EQ(empty.value, 0.0);
  EXPECT_EQ(empty.residual, 0.0);
  EXPECT_TRUE(empty.converged);
  EXPECT_THROW(spectral_radius(Graph(0)), DomainError);
  EXPECT_THROW(spectral_radius(complete_graph(3), 0.0), DomainError);
}

TEST(SpectralRadiusTest, IterationCapReportsNotConverged) {
  // Path P_30 converges slowly; one step cannot meet 1e-10.
  Graph path(30);
  for (Vertex v = 1; v < 30; ++v) path.add_edge(v - 1, v);
  const auto est = spectral_radius(path, 1e-10, 1);
  EXPECT_FALSE(est.converged);
  EXPECT_EQ(est.iterations, 1u);
  EXPECT_GT(est.residual, 0.0);
}

TEST(SpectralRadiusTest, DisconnectedGraphsReachGlobalPerronRoot) {
  // K4 plus a disjoint K_{2,3}: mu = 3.
  Graph g(9);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
  for (Vertex u = 4; u < 6; ++u)
    for (Vertex v = 6; v < 9; ++v) g.add_edge(u, v);
  const auto est = spectral_radius(g);
  EXPECT_TRUE(est.converged);
  EXPECT_NEAR(est.value, 3.0, 1e-9);
}

TEST(SpectralRadiusTest, MatchesDenseOracleOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t m = oracle::pair_count(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const auto est = spectral_radius(g);
      EXPECT_NEAR(est.value, oracle::largest_eigenvalue(g), 1e-8) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(SpectralRadiusTest, AverageDegreeFloorAndCeiling) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 5 + seed % 40;
    const Graph g = gnp(n, 0.05 + 0.015 * static_cast<double>(seed), seed);
    const auto est = spectral_radius(g);
    const double avg = 2.0 * static_cast<double>(edge_count(g)) / static_cast<double>(n);
    EXPECT_GE(est.upper(), avg - 1e-9);
    EXPECT_GE(est.value, avg - 1e-9);  // Rayleigh quotients never fall below the start
    EXPECT_LE(est.lower(), static_cast<double>(n) - 1.0 + 1e-9);
    EXPECT_GE(est.residual, 0.0);
  }
}

TEST(SpectralRadiusTest, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gnp(20, 0.3, static_cast<std::uint64_t>(trial));
    const auto before = spectral_radius(g);
    Vertex u, v;
    do {
      u = static_cast<Vertex>(rng() % 20);
      v = static_cast<Vertex>(rng() % 20);
    } while (u == v || g.has_edge(u, v));
    g.add_edge(u, v);
    const auto after = spectral_radius(g);
    EXPECT_GE(after.value, before.value - before.residual - after.residual);
  }
}

TEST(QuotientTest, Examples) {
  EXPECT_NEAR(quotient_mu_multipartite({3, 3}), 3.0, 1e-12);
  EXPECT_NEAR(quotient_mu_multipartite({2, 3}), std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(quotient_mu_multipartite({1, 1, 1}), 2.0, 1e-12);
  EXPECT_THROW(quotient_mu_multipartite({4}), DomainError);
}

TEST(QuotientTest, BipartiteClosedForm) {
  // mu(K_{a,b}) = sqrt(ab)
  for (std::size_t a = 1; a <= 30; a += 3)
    for (std::size_t b = 1; b <= 30; b += 4)
      EXPECT_NEAR(quotient_mu_multipartite({a, b}), std::sqrt(static_cast<double>(a * b)),
                  1e-12 * static_cast<double>(a + b));
}

TEST(QuotientTest, AgreesWithPowerIteration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    const std::size_t parts = 2 + rng() % 5;
    for (std::size_t i = 0; i < parts; ++i) {
      const std::size_t s = 1 + rng() % 30;
      sizes.push_back(s);
      total += s;
    }
    const PartSizes ps(sizes);
    const auto est = spectral_radius(complete_multipartite(ps));
    EXPECT_NEAR(est.value, quotient_mu_multipartite(ps), est.residual + 1e-6) << "total=" << total;
  }
}

TEST(QuotientTest, AgreesWithDenseOracle) {
  for (const auto& sizes : oracle::partitions_up_to(9)) {
    if (sizes.size() < 2) continue;
    const PartSizes ps(sizes);
    EXPECT_NEAR(quotient_mu_multipartite(ps), oracle::largest_eigenvalue(complete_multipartite(ps)), 1e-9);
  }
}

}  // namespace
}  // namespace sturan
