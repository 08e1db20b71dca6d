#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sturan/graph.hpp"
#include "sturan/spectral.hpp"
#include "sturan/theorems.hpp"

namespace sturan {

inline constexpr std::size_t kMaxSpexOrder = 8;

struct SpexResult {
  SpectralEstimate mu;
  /// First maximal F-free graph (in edge-decision order) attaining mu.
  Graph witness;
  std::uint64_t maximal_graphs = 0;
  std::uint64_t nodes = 0;
};

/// Maximum spectral radius over F-free graphs on n labelled vertices.
///
/// The spectral radius only grows when edges are added, and F-freeness is
/// closed under deleting edges, so only edge-maximal F-free graphs are
/// evaluated. Edges are decided in graph6 order; an edge may be left out
/// only if adding it back is eventually blocked by some copy of F. Branches
/// whose remaining edge budget cannot beat the incumbent (Stanley's bound
/// and the maximum degree) are cut.
///
/// Throws DomainError when n is 0 or exceeds max_order, or when no graph on
/// n vertices avoids F.
SpexResult spex_scan(std::size_t n, const Graph& forbidden, std::size_t max_order = kMaxSpexOrder);

struct GapReport {
  std::size_t n = 0;
  std::size_t r = 0;
  /// mu(T_{r-1}(n)) / n from the exact quotient matrix.
  double lower = 0.0;
  /// spex(n, F) / n.
  double upper = 0.0;
  double upper_residual = 0.0;
  /// 2 e(T_{r-1}(n)) / n^2.
  double edge_density = 0.0;
  /// 1 - 1/(r-1) - (r-1)/(4 n^2).
  double turan_floor = 0.0;
  /// upper - (1 - 1/(r-1)); sign unconstrained at finite n.
  double gap = 0.0;
  bool sandwich_holds = false;
  bool floor_holds = false;
  Verdict verdict = Verdict::vacuous;
  Graph witness;
  std::vector<std::string> notes;
};

/// Finite-n sandwich around the spectral Turán density of F:
/// lower <= upper, and lower >= 2e/n^2 >= 1 - 1/(r-1) - (r-1)/(4n^2) with
/// r = chi(F). Rejects F with chi(F) < 3.
GapReport theorem2_gap(std::size_t n, const Graph& forbidden, std::size_t max_order = kMaxSpexOrder);

}  // namespace sturan
