#pragma once

#include <cstddef>

#include "sturan/graph.hpp"

namespace sturan {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 1'000'000;

/// Largest adjacency eigenvalue with a residual bound. For a symmetric matrix,
/// [value - residual, value + residual] contains an eigenvalue.
struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;

  double lower() const noexcept { return value - residual; }
  double upper() const noexcept { return value + residual; }
};

/// Power iteration from the all-ones vector, shifted by the maximum degree so
/// the iteration matrix is positive semidefinite. Rayleigh quotients are then
/// nondecreasing from the average degree 2e/n, and bipartite graphs converge
/// instead of oscillating. Stops once ||Av - rho v|| <= tol * max(1, n).
/// Hitting max_iter returns converged = false. Throws DomainError for n = 0.
SpectralEstimate spectral_radius(const Graph& g, double tol = kDefaultTolerance,
                                 std::size_t max_iter = kDefaultMaxIterations);

/// Perron root of the quotient matrix B[i][j] = s_j (i != j) of a complete
/// multipartite graph. Bisection over [0, sum s] on the sign of the
/// characteristic polynomial, which for lambda > 0 equals the sign of
/// 1 - sum s_i / (lambda + s_i). Requires at least two parts.
double quotient_mu_multipartite(const PartSizes& sizes);

}  // namespace sturan
