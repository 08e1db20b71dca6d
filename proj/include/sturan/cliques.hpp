#pragma once

#include <cstddef>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// Vertices in the order they are peeled off by repeatedly removing a vertex
/// of minimum remaining degree (ties by label).
std::vector<Vertex> degeneracy_order(const Graph& g);

/// Exact number of r-cliques. Each clique is counted once, extending along
/// degeneracy order with word-parallel candidate intersections.
/// Throws DomainError for r = 0, OverflowError past 128 bits.
Count count_cliques(const Graph& g, std::size_t r);

/// Brute force over all r-subsets; for cross-checking. Requires n <= 16.
Count oracle_count_cliques(const Graph& g, std::size_t r);

/// Largest r with k_r(G) > 0; 0 for the empty graph.
std::size_t clique_number(const Graph& g);

}  // namespace sturan
