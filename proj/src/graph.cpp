#include "sturan/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sturan {

Graph::Graph(std::size_t n) : n_(n), words_(bits::words_for(n)), bits_(n * bits::words_for(n), 0) {
  if (n > kMaxOrder) throw DomainError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return bits::test(row(u), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  bits::set({bits_.data() + u * words_, words_}, v);
  bits::set({bits_.data() + v * words_, words_}, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  bits::reset({bits_.data() + u * words_, words_}, v);
  bits::reset({bits_.data() + v * words_, words_}, u);
}

std::size_t edge_count(const Graph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v);
  return total / 2;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex v = 1; v < g.order(); ++v)
    for (Vertex u = 0; u < v; ++u)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<Edge> edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex v = 1; v < g.order(); ++v)
    bits::for_each(g.row(v), [&](std::size_t u) {
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    });
  return out;
}

PartSizes::PartSizes(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("part sizes must be nonempty");
  for (std::size_t s : sizes_)
    if (s == 0) throw DomainError("part sizes must be positive");
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

std::size_t PartSizes::total() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace sturan
