#include "sturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sturan {
namespace {

void multiply(const Graph& g, const std::vector<double>& v, std::vector<double>& out) {
  for (Vertex u = 0; u < g.order(); ++u) {
    double sum = 0.0;
    bits::for_each(g.row(u), [&](std::size_t j) { sum += v[j]; });
    out[u] = sum;
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, double tol, std::size_t max_iter) {
  const std::size_t n = g.order();
  if (n == 0) throw DomainError("spectral radius of the empty vertex set is undefined");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  const double shift = static_cast<double>(max_degree(g));
  const double target = tol * std::max(1.0, static_cast<double>(n));

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  SpectralEstimate est;
  for (;;) {
    multiply(g, v, w);
    ++est.iterations;
    const double rho = dot(v, w);
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - rho * v[i];
      res2 += d * d;
    }
    est.value = rho;
    est.residual = std::sqrt(res2);
    if (est.residual <= target) {
      est.converged = true;
      return est;
    }
    if (est.iterations >= max_iter) return est;

    // residual > 0 implies an edge, so shift > 0 and the next iterate is positive
    for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
    const double norm = std::sqrt(dot(w, w));
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
}

double quotient_mu_multipartite(const PartSizes& sizes) {
  if (sizes.parts() < 2) throw DomainError("quotient spectral radius needs at least two parts");
  const auto total = static_cast<double>(sizes.total());

  // f(lambda) = 1 - sum s_i/(lambda + s_i) is increasing on (0, inf),
  // f(0) = 1 - r < 0, f(total) > 0.
  const auto f = [&](double lambda) {
    double sum = 0.0;
    for (std::size_t s : sizes.sizes()) sum += static_cast<double>(s) / (lambda + static_cast<double>(s));
    return 1.0 - sum;
  };
  double lo = 0.0;
  double hi = total;
  const double width = 1e-13 * total;
  for (int step = 0; step < 200 && hi - lo > width; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sturan
