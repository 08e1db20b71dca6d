#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Disjoint vertex classes with every cross-class pair adjacent in the host.
/// Classes need not be independent in the host.
struct MultipartiteWitness {
  std::vector<std::vector<Vertex>> parts;

  friend bool operator==(const MultipartiteWitness&, const MultipartiteWitness&) = default;
};

/// Throws DomainError on an out-of-range vertex.
bool verify_witness(const Graph& g, const MultipartiteWitness& w);
/// Also requires the class sizes to match `sizes` in order.
bool verify_witness(const Graph& g, const MultipartiteWitness& w, const PartSizes& sizes);

enum class SearchStatus { found, absent, indeterminate };

struct SearchOutcome {
  SearchStatus status = SearchStatus::absent;
  std::optional<MultipartiteWitness> witness;
  std::uint64_t expansions = 0;
};

/// Exhaustive backtracking for K_r(s_1..s_r) as a subgraph. Parts are filled
/// largest first, vertices in ascending label order, so the witness returned
/// is the lexicographically least one. Running past `budget` vertex
/// placements yields SearchStatus::indeterminate, never absent.
SearchOutcome find_complete_multipartite(const Graph& g, const PartSizes& sizes,
                                         std::uint64_t budget = kDefaultBudget);

struct BicliqueResult {
  std::size_t side = 0;
  /// false when some search ran out of budget; `side` is then a lower bound.
  bool exact = true;
};

/// Largest s such that K_{s,s} is a subgraph. Requires n >= 2.
BicliqueResult max_balanced_biclique(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace sturan
