#pragma once

#include <cstddef>

#include "sturan/graph.hpp"

namespace sturan {

inline constexpr std::size_t kMaxColoringOrder = 16;

/// Exact chromatic number by branch and bound: clique number below, a
/// largest-first greedy colouring above, then decreasing k-colourability
/// tests in between. Requires n <= 16.
std::size_t chromatic_number(const Graph& f);

/// True iff f has a proper colouring with at most k colours.
bool is_colorable(const Graph& f, std::size_t k);

}  // namespace sturan
