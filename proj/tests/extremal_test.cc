#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sturan/cliques.hpp"
#include "sturan/coloring.hpp"
#include "sturan/embedding.hpp"
#include "sturan/extremal.hpp"
#include "sturan/generators.hpp"

namespace sturan {
namespace {

TEST(ChromaticTest, Examples) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3u);
  EXPECT_EQ(chromatic_number(complete_graph(4)), 4u);
  EXPECT_EQ(chromatic_number(petersen_graph()), 3u);
  EXPECT_EQ(chromatic_number(Graph(0)), 0u);
  EXPECT_EQ(chromatic_number(Graph(4)), 1u);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2u);
  EXPECT_THROW(chromatic_number(Graph(17)), DomainError);
}

TEST(ChromaticTest, AgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gnp(4 + seed % 6, 0.2 + 0.15 * static_cast<double>(seed % 5), seed);
    const std::size_t chi = chromatic_number(g);
    EXPECT_EQ(chi, oracle::chromatic_by_enumeration(g)) << "seed=" << seed;
    EXPECT_TRUE(is_colorable(g, chi));
    if (chi > 0) EXPECT_FALSE(is_colorable(g, chi - 1));
  }
}

TEST(ChromaticTest, TuranGraphs) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t r = 1; r <= 5; ++r) EXPECT_EQ(chromatic_number(turan_graph(n, r)), std::min(n, r));
}

TEST(ChromaticTest, AtLeastCliqueNumber) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gnp(6 + seed % 10, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
    std::size_t largest = 0;
    for (std::size_t r = 1; r <= g.order(); ++r)
      if (count_cliques(g, r) > 0) largest = r;
    EXPECT_GE(chromatic_number(g), largest);
  }
}

TEST(ContainsSubgraphTest, Examples) {
  EXPECT_FALSE(contains_subgraph(complete_multipartite({3, 3}), complete_graph(3)));
  EXPECT_TRUE(contains_subgraph(petersen_graph(), cycle_graph(5)));
  EXPECT_FALSE(contains_subgraph(cycle_graph(5), complete_multipartite({2, 2})));
  EXPECT_TRUE(contains_subgraph(complete_graph(3), Graph(0)));
  EXPECT_FALSE(contains_subgraph(complete_graph(3), Graph(4)));
  EXPECT_THROW(contains_subgraph(complete_graph(12), Graph(11)), DomainError);
}

TEST(ContainsSubgraphTest, AgreesWithInjectionOracle) {
  const std::vector<Graph> patterns = {complete_graph(3), cycle_graph(4), cycle_graph(5),
                                       complete_multipartite({1, 3}), complete_multipartite({2, 2}),
                                       Graph(4, {{0, 1}, {1, 2}, {2, 3}}), complete_graph(4),
                                       Graph(5, {{0, 1}, {2, 3}})};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph host = gnp(4 + seed % 4, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
    for (const auto& f : patterns)
      EXPECT_EQ(contains_subgraph(host, f), oracle::contains_by_injection(host, f)) << "seed=" << seed;
  }
}

TEST(SpexScanTest, TriangleExamples) {
  EXPECT_NEAR(spex_scan(4, complete_graph(3)).mu.value, 2.0, 1e-6);
  EXPECT_NEAR(spex_scan(5, complete_graph(3)).mu.value, std::sqrt(6.0), 1e-6);
  const auto six = spex_scan(6, complete_graph(3));
  EXPECT_NEAR(six.mu.value, 3.0, 1e-6);
  EXPECT_FALSE(contains_subgraph(six.witness, complete_graph(3)));
  EXPECT_EQ(edge_count(six.witness), 9u);
}

TEST(SpexScanTest, Errors) {
  EXPECT_THROW(spex_scan(0, complete_graph(3)), DomainError);
  EXPECT_THROW(spex_scan(9, complete_graph(3)), DomainError);
  EXPECT_THROW(spex_scan(4, Graph(2)), DomainError);
}

TEST(SpexScanTest, MatchesBruteForce) {
  const std::vector<Graph> forbidden = {complete_graph(3), complete_graph(4), cycle_graph(5), cycle_graph(4)};
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : forbidden) {
      const auto result = spex_scan(n, f);
      EXPECT_NEAR(result.mu.value, oracle::spex_brute_force(n, f), 1e-8) << "n=" << n;
      EXPECT_FALSE(contains_subgraph(result.witness, f));
    }
}

TEST(SpexScanTest, AtLeastTuranGraph) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t r = 3; r <= 4; ++r) {
      const auto result = spex_scan(n, complete_graph(r));
      EXPECT_GE(result.mu.upper(), oracle::largest_eigenvalue(turan_graph(n, r - 1)) - 1e-9);
    }
}

TEST(GapTest, Triangle) {
  const auto six = theorem2_gap(6, complete_graph(3));
  EXPECT_EQ(six.r, 3u);
  EXPECT_NEAR(six.lower, 0.5, 1e-9);
  EXPECT_NEAR(six.upper, 0.5, 1e-6);
  EXPECT_NEAR(six.gap, 0.0, 1e-6);
  EXPECT_NEAR(six.turan_floor, 0.5 - 2.0 / (4.0 * 36.0), 1e-12);
  EXPECT_GE(six.lower, six.turan_floor);
  EXPECT_TRUE(six.sandwich_holds);
  EXPECT_TRUE(six.floor_holds);
  EXPECT_EQ(six.verdict, Verdict::confirmed);

  const auto five = theorem2_gap(5, complete_graph(3));
  EXPECT_NEAR(five.lower, std::sqrt(6.0) / 5.0, 1e-9);
  EXPECT_NEAR(five.upper, std::sqrt(6.0) / 5.0, 1e-6);
  EXPECT_EQ(five.verdict, Verdict::confirmed);
}

TEST(GapTest, SandwichForSeveralForbiddenGraphs) {
  for (const auto& f : {complete_graph(3), complete_graph(4), cycle_graph(5)})
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto report = theorem2_gap(n, f);
      EXPECT_LE(report.lower, report.upper + report.upper_residual + 1e-9);
      EXPECT_GE(report.lower, report.edge_density - 1e-12);
      EXPECT_GE(report.edge_density, report.turan_floor - 1e-12);
      EXPECT_EQ(report.verdict, Verdict::confirmed);
    }
}

TEST(GapTest, RejectsBipartiteForbiddenGraphs) {
  EXPECT_THROW(theorem2_gap(6, complete_multipartite({2, 2})), DomainError);
  EXPECT_THROW(theorem2_gap(6, cycle_graph(4)), DomainError);
}

}  // namespace
}  // namespace sturan
