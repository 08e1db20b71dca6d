#include <gtest/gtest.h>

#include <cstdint>
#include <string>

#include "oracles.hpp"
#include "sturan/generators.hpp"
#include "sturan/graph.hpp"
#include "sturan/graph_io.hpp"

namespace sturan {
namespace {

TEST(Graph6Test, DecodesHandEncodedRecords) {
  const Graph single = parse_graph6("@");
  EXPECT_EQ(single.order(), 1u);
  EXPECT_EQ(edge_count(single), 0u);

  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_TRUE(k2.has_edge(0, 1));

  const Graph pair = parse_graph6("A?");
  EXPECT_EQ(pair.order(), 2u);
  EXPECT_EQ(edge_count(pair), 0u);

  EXPECT_EQ(parse_graph6("?").order(), 0u);
}

TEST(Graph6Test, EncodesHandEncodedRecords) {
  EXPECT_EQ(to_graph6(Graph(2, {{0, 1}})), "A_");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6Test, AcceptsHeaderAndTrailingNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6("A_\r\n"), Graph(2, {{0, 1}}));
}

TEST(Graph6Test, MultiByteOrderPrefix) {
  // n = 63: 126 followed by 0, 0, 63 (each +63).
  std::string text = {static_cast<char>(126), static_cast<char>(63), static_cast<char>(63), static_cast<char>(126)};
  text += std::string((63 * 62 / 2 + 5) / 6, '?');
  const Graph g = parse_graph6(text);
  EXPECT_EQ(g.order(), 63u);
  EXPECT_EQ(edge_count(g), 0u);
  EXPECT_THROW(to_graph6(g), UnsupportedError);
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);     // body missing
  EXPECT_THROW(parse_graph6("A__"), ParseError);   // body too long
  EXPECT_THROW(parse_graph6("A `"), ParseError);   // byte 32 out of range
  try {
    parse_graph6("A`");  // 'A' body has one data bit; '`' = 33 sets a padding bit
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  try {
    parse_graph6("B\x7f");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
}

TEST(Graph6Test, RoundTripsGeneratedGraphs) {
  for (std::size_t n = 0; n <= 62; n += 3)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = gnp(n, 0.1 + 0.25 * static_cast<double>(seed), seed);
      EXPECT_EQ(parse_graph6(to_graph6(g)), g) << "n=" << n << " seed=" << seed;
    }
  for (std::size_t n = 1; n <= 62; n += 7)
    for (std::size_t r = 1; r <= 6; ++r) EXPECT_EQ(parse_graph6(to_graph6(turan_graph(n, r))), turan_graph(n, r));
}

TEST(EdgeListTest, RoundTripAndErrors) {
  const Graph g = gnp(20, 0.3, 11);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(to_edge_list(Graph(3, {{0, 2}})), "3 1\n0 2\n");
  EXPECT_EQ(parse_edge_list("3 1\n0 2\n"), Graph(3, {{0, 2}}));

  EXPECT_THROW(parse_edge_list("3 1\n2 0\n"), ParseError);  // u < v required
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);  // v < n
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 x\n"), ParseError);
}

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
  EXPECT_THROW(g.add_edge(0, 3), DomainError);
  EXPECT_THROW(Graph(kMaxOrder + 1), DomainError);
}

TEST(GraphTest, EdgeCountComplementDegrees) {
  EXPECT_EQ(edge_count(complete_graph(5)), 10u);
  EXPECT_EQ(complement(turan_graph(4, 2)), Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(degree_sequence(complete_multipartite({2, 3})), (std::vector<std::size_t>{3, 3, 2, 2, 2}));

  const Graph g = gnp(30, 0.4, 3);
  EXPECT_EQ(complement(complement(g)), g);
  std::size_t degree_sum = 0;
  for (std::size_t d : degree_sequence(g)) degree_sum += d;
  EXPECT_EQ(2 * edge_count(g), degree_sum);
  for (Vertex u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
  }
}

TEST(PartSizesTest, SortsAndValidates) {
  EXPECT_EQ(PartSizes({2, 5, 2}).sizes(), (std::vector<std::size_t>{5, 2, 2}));
  EXPECT_EQ(PartSizes({2, 5, 2}).total(), 9u);
  EXPECT_THROW(PartSizes(std::vector<std::size_t>{}), DomainError);
  EXPECT_THROW(PartSizes({3, 0}), DomainError);
}

TEST(TuranTest, Examples) {
  EXPECT_EQ(turan_part_sizes(7, 3), (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_EQ(edge_count(turan_graph(7, 3)), 16u);
  EXPECT_EQ(turan_graph(6, 2), complete_multipartite({3, 3}));
  EXPECT_EQ(edge_count(turan_graph(6, 2)), 9u);
  EXPECT_EQ(turan_graph(5, 5), complete_graph(5));
  EXPECT_EQ(edge_count(turan_graph(5, 5)), 10u);
  EXPECT_THROW(turan_part_sizes(5, 0), DomainError);
}

TEST(TuranTest, MatchesMultipartiteAndEdgeFormula) {
  for (std::size_t n = 0; n <= 40; ++n)
    for (std::size_t r = 1; r <= 8; ++r) {
      const auto sizes = turan_part_sizes(n, r);
      std::uint64_t squares = 0;
      for (std::size_t s : sizes) squares += s * s;
      EXPECT_EQ(edge_count(turan_graph(n, r)), (n * n - squares) / 2);
      EXPECT_EQ(turan_edge_count(n, r), (n * n - squares) / 2);
      if (n >= r) EXPECT_EQ(turan_graph(n, r), complete_multipartite(PartSizes(sizes)));
    }
}

TEST(MultipartiteGeneratorTest, Examples) {
  EXPECT_EQ(edge_count(complete_multipartite({2, 3})), 6u);
  EXPECT_EQ(complete_multipartite({1, 1, 1}), complete_graph(3));
  const Graph g = complete_multipartite({2, 2, 5});
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(edge_count(g), 24u);
  // Largest part first: vertices 0..4 form the part of size 5.
  EXPECT_FALSE(g.has_edge(0, 4));
  EXPECT_TRUE(g.has_edge(4, 5));
}

TEST(GnpTest, ExtremesAndDeterminism) {
  EXPECT_EQ(edge_count(gnp(10, 0.0, 99)), 0u);
  EXPECT_EQ(gnp(10, 1.0, 99), complete_graph(10));
  EXPECT_EQ(to_graph6(gnp(40, 0.5, 7)), to_graph6(gnp(40, 0.5, 7)));
  EXPECT_NE(gnp(40, 0.5, 7), gnp(40, 0.5, 8));
  EXPECT_THROW(gnp(5, 1.5, 0), DomainError);
}

TEST(GnpTest, GoldenEdgeCount) {
  // Recorded from the counter-based generator; guards cross-platform drift.
  EXPECT_EQ(edge_count(gnp(40, 0.5, 7)), 370u);
  EXPECT_EQ(to_graph6(gnp(12, 0.5, 7)), "Kk[BSud\\|@mD");
}

TEST(GnpTest, PrefixStable) {
  // Pair counters do not depend on n, so G(n) is an induced subgraph of G(n+k).
  const Graph small = gnp(15, 0.5, 3);
  const Graph large = gnp(25, 0.5, 3);
  for (Vertex v = 1; v < 15; ++v)
    for (Vertex u = 0; u < v; ++u) EXPECT_EQ(small.has_edge(u, v), large.has_edge(u, v));
}

TEST(RemoveEdgesTest, RemovesDistinctEdges) {
  const Graph k = complete_graph(100);
  const Graph g = remove_random_edges(k, 50, 2024);
  EXPECT_EQ(edge_count(g), 4900u);
  EXPECT_EQ(g, remove_random_edges(k, 50, 2024));
  EXPECT_THROW(remove_random_edges(Graph(3, {{0, 1}}), 2, 0), DomainError);
}

}  // namespace
}  // namespace sturan
