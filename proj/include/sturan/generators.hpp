#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// Part sizes of the r-partite Turán graph on n vertices: n mod r parts of
/// size ceil(n/r) first, then floor(n/r). Entries are zero when n < r.
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r);

/// Exact edge count of T_r(n), (n^2 - sum s_i^2) / 2.
std::uint64_t turan_edge_count(std::size_t n, std::size_t r);

/// Parts laid out consecutively, largest first.
Graph turan_graph(std::size_t n, std::size_t r);
Graph complete_multipartite(const PartSizes& sizes);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

/// Counter-based uniform draw in [0,1): a pure function of (seed, counter).
double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept;

/// Erdős–Rényi G(n,p). Pair (u,v), u < v, uses counter v(v-1)/2 + u, so the
/// result depends only on (n, p, seed).
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Removes `count` distinct edges chosen by a seeded partial shuffle of edges(g).
Graph remove_random_edges(const Graph& g, std::size_t count, std::uint64_t seed);

}  // namespace sturan
