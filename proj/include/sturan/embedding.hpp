#pragma once

#include <cstddef>

#include "sturan/graph.hpp"

namespace sturan {

inline constexpr std::size_t kMaxPatternOrder = 10;

/// True iff `host` has a (not necessarily induced) subgraph isomorphic to
/// `pattern`. Backtracking injection with neighbourhood intersection and
/// degree pruning. Pattern order must be <= 10.
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace sturan
