#include "sturan/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sturan/coloring.hpp"
#include "sturan/embedding.hpp"
#include "sturan/generators.hpp"

namespace sturan {
namespace {

class SpexSearch {
 public:
  SpexSearch(std::size_t n, const Graph& forbidden) : forbidden_(forbidden), current_(n) {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u) order_.emplace_back(u, v);
  }

  SpexResult run() {
    decide(0);
    SpexResult out;
    out.mu = best_->mu;
    out.witness = best_->witness;
    out.maximal_graphs = maximal_;
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Incumbent {
    SpectralEstimate mu;
    Graph witness;
  };

  // Current edges plus every edge not yet decided.
  Graph optimistic(std::size_t next) const {
    Graph g = current_;
    for (std::size_t i = next; i < order_.size(); ++i) g.add_edge(order_[i].first, order_[i].second);
    return g;
  }

  static double spectral_ceiling(const Graph& g) {
    const auto m = static_cast<double>(edge_count(g));
    const double stanley = (std::sqrt(1.0 + 8.0 * m) - 1.0) / 2.0;
    return std::min(stanley, static_cast<double>(max_degree(g)));
  }

  void decide(std::size_t next) {
    ++nodes_;
    if (next == order_.size()) {
      evaluate();
      return;
    }
    if (best_ && spectral_ceiling(optimistic(next)) < best_->mu.value - 1e-9) return;

    const auto [u, v] = order_[next];
    current_.add_edge(u, v);
    const bool blocked = contains_subgraph(current_, forbidden_);
    if (!blocked) decide(next + 1);
    current_.remove_edge(u, v);
    if (blocked) {
      decide(next + 1);
      return;
    }

    // Leaving out an addable edge is only useful if it can still become blocked.
    if (!contains_subgraph(optimistic(next), forbidden_)) return;
    pending_.push_back(order_[next]);
    decide(next + 1);
    pending_.pop_back();
  }

  void evaluate() {
    for (auto [u, v] : pending_) {
      current_.add_edge(u, v);
      const bool blocked = contains_subgraph(current_, forbidden_);
      current_.remove_edge(u, v);
      if (!blocked) return;
    }
    ++maximal_;
    const auto mu = spectral_radius(current_);
    if (!best_ || mu.value > best_->mu.value + 1e-12) best_ = Incumbent{mu, current_};
  }

  const Graph& forbidden_;
  Graph current_;
  std::vector<Edge> order_;
  std::vector<Edge> pending_;
  std::optional<Incumbent> best_;
  std::uint64_t maximal_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SpexResult spex_scan(std::size_t n, const Graph& forbidden, std::size_t max_order) {
  if (n == 0) throw DomainError("spex scan needs n >= 1");
  if (n > max_order)
    throw DomainError("spex scan is exhaustive and limited to n <= " + std::to_string(max_order));
  if (contains_subgraph(Graph(n), forbidden))
    throw DomainError("every graph on " + std::to_string(n) + " vertices contains the forbidden graph");
  return SpexSearch(n, forbidden).run();
}

GapReport theorem2_gap(std::size_t n, const Graph& forbidden, std::size_t max_order) {
  GapReport report;
  report.n = n;
  report.r = chromatic_number(forbidden);
  if (report.r < 3)
    throw DomainError("spectral Turán density needs chromatic number >= 3, got " + std::to_string(report.r));
  const std::size_t parts = report.r - 1;
  const auto spex = spex_scan(n, forbidden, max_order);
  const auto nd = static_cast<double>(n);

  std::vector<std::size_t> sizes;
  for (std::size_t s : turan_part_sizes(n, parts))
    if (s > 0) sizes.push_back(s);
  report.lower = sizes.size() >= 2 ? quotient_mu_multipartite(PartSizes(sizes)) / nd : 0.0;
  report.upper = spex.mu.value / nd;
  report.upper_residual = spex.mu.residual / nd;
  report.witness = spex.witness;

  const auto pd = static_cast<double>(parts);
  report.edge_density = 2.0 * static_cast<double>(turan_edge_count(n, parts)) / (nd * nd);
  report.turan_floor = 1.0 - 1.0 / pd - pd / (4.0 * nd * nd);
  report.gap = report.upper - (1.0 - 1.0 / pd);

  report.sandwich_holds = report.lower <= report.upper + report.upper_residual + 1e-9 / nd;
  const bool density_exact = fact3_check(n, parts).verdict == Verdict::confirmed;
  report.floor_holds = density_exact && report.lower >= report.edge_density - 1e-12;
  if (!report.sandwich_holds) report.notes.push_back("Turán graph beats the exhaustive maximum");
  if (!density_exact) report.notes.push_back("2e(T) / n^2 below the Turán floor");
  if (!report.floor_holds && density_exact) report.notes.push_back("mu(T)/n below 2e(T)/n^2");
  report.verdict = report.sandwich_holds && report.floor_holds ? Verdict::confirmed : Verdict::violation;
  return report;
}

}  // namespace sturan
