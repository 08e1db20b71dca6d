#include "sturan/cliques.hpp"

#include <bit>
#include <cstdint>

namespace sturan {
namespace {

Count checked_add(Count a, Count b) {
  Count sum;
  if (__builtin_add_overflow(a, b, &sum)) throw OverflowError("clique count exceeds 128 bits");
  return sum;
}

class CliqueCounter {
 public:
  CliqueCounter(const Graph& g, std::size_t r) : g_(g), r_(r), words_(g.words_per_row()) {
    const auto order = degeneracy_order(g);
    std::vector<std::size_t> position(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

    forward_.assign(g.order() * words_, 0);
    for (Vertex v = 0; v < g.order(); ++v)
      bits::for_each(g.row(v), [&](std::size_t u) {
        if (position[u] > position[v]) bits::set(forward(v), u);
      });
    scratch_.assign(r * words_, 0);
  }

  Count run() {
    Count total = 0;
    for (Vertex v = 0; v < g_.order(); ++v) total = checked_add(total, extend(forward(v), r_ - 1, 0));
    return total;
  }

 private:
  std::span<bits::Word> forward(Vertex v) { return {forward_.data() + v * words_, words_}; }
  std::span<bits::Word> scratch(std::size_t depth) { return {scratch_.data() + depth * words_, words_}; }

  // Number of ways to pick `need` more mutually adjacent vertices from `candidates`.
  Count extend(std::span<const bits::Word> candidates, std::size_t need, std::size_t depth) {
    const std::size_t available = bits::count(candidates);
    if (need == 1) return available;
    if (available < need) return 0;
    Count total = 0;
    auto next = scratch(depth);
    bits::for_each(candidates, [&](std::size_t u) {
      bits::intersect(candidates, forward(static_cast<Vertex>(u)), next);
      total = checked_add(total, extend(next, need - 1, depth + 1));
    });
    return total;
  }

  const Graph& g_;
  std::size_t r_;
  std::size_t words_;
  std::vector<bits::Word> forward_;
  std::vector<bits::Word> scratch_;
};

}  // namespace

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (!found || degree[v] < degree[best])) {
        best = v;
        found = true;
      }
    removed[best] = true;
    order.push_back(best);
    bits::for_each(g.row(best), [&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  return order;
}

Count count_cliques(const Graph& g, std::size_t r) {
  if (r == 0) throw DomainError("clique size must be at least 1");
  if (r > g.order()) return 0;
  if (r == 1) return g.order();
  if (r == 2) return edge_count(g);
  return CliqueCounter(g, r).run();
}

Count oracle_count_cliques(const Graph& g, std::size_t r) {
  const std::size_t n = g.order();
  if (n > 16) throw DomainError("brute-force clique oracle supports n <= 16");
  if (r == 0) throw DomainError("clique size must be at least 1");
  std::vector<std::uint32_t> adjacency(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      if (g.has_edge(u, v)) adjacency[v] |= 1U << u;

  Count total = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
    bool clique = true;
    for (Vertex v = 0; v < n && clique; ++v)
      if ((mask >> v) & 1U) clique = (mask & ~(1U << v) & ~adjacency[v]) == 0;
    if (clique) ++total;
  }
  return total;
}

std::size_t clique_number(const Graph& g) {
  std::size_t omega = 0;
  while (omega < g.order() && count_cliques(g, omega + 1) > 0) ++omega;
  return omega;
}

}  // namespace sturan
