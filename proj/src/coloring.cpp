#include "sturan/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sturan/cliques.hpp"

namespace sturan {
namespace {

std::vector<Vertex> by_degree(const Graph& f) {
  std::vector<Vertex> order(f.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return f.degree(a) > f.degree(b); });
  return order;
}

std::size_t greedy_colors(const Graph& f) {
  std::vector<int> color(f.order(), -1);
  int used = 0;
  for (Vertex v : by_degree(f)) {
    std::vector<bool> taken(static_cast<std::size_t>(used) + 1, false);
    bits::for_each(f.row(v), [&](std::size_t u) {
      if (color[u] >= 0) taken[static_cast<std::size_t>(color[u])] = true;
    });
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return static_cast<std::size_t>(used);
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& f, std::size_t k) : f_(f), k_(k), order_(by_degree(f)), color_(f.order(), -1) {}

  bool run() { return assign(0, 0); }

 private:
  // Colours beyond used + 1 are symmetric to used + 1 and never tried.
  bool assign(std::size_t i, std::size_t used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      bits::for_each(f_.row(v), [&](std::size_t u) {
        if (color_[u] == static_cast<int>(c)) clash = true;
      });
      if (clash) continue;
      color_[v] = static_cast<int>(c);
      if (assign(i + 1, std::max(used, c + 1))) return true;
      color_[v] = -1;
    }
    return false;
  }

  const Graph& f_;
  std::size_t k_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
};

}  // namespace

bool is_colorable(const Graph& f, std::size_t k) {
  if (f.order() == 0) return true;
  if (k == 0) return false;
  return ColoringSearch(f, k).run();
}

std::size_t chromatic_number(const Graph& f) {
  if (f.order() > kMaxColoringOrder)
    throw DomainError("chromatic number supports n <= 16, got " + std::to_string(f.order()));
  if (f.order() == 0) return 0;
  const std::size_t lower = clique_number(f);
  std::size_t best = greedy_colors(f);
  while (best > lower && is_colorable(f, best - 1)) --best;
  return best;
}

}  // namespace sturan
