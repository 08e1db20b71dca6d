#include "sturan/generators.hpp"

#include <string>
#include <utility>

namespace sturan {
namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void connect_parts(Graph& g, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) part_of.insert(part_of.end(), sizes[p], p);
  for (Vertex v = 1; v < part_of.size(); ++v)
    for (Vertex u = 0; u < v; ++u)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
}

}  // namespace

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  if (r == 0) throw DomainError("Turán graph needs r >= 1");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

std::uint64_t turan_edge_count(std::size_t n, std::size_t r) {
  std::uint64_t squares = 0;
  for (std::size_t s : turan_part_sizes(n, r)) squares += std::uint64_t{s} * s;
  return (std::uint64_t{n} * n - squares) / 2;
}

Graph turan_graph(std::size_t n, std::size_t r) {
  Graph g(n);
  connect_parts(g, turan_part_sizes(n, r));
  return g;
}

Graph complete_multipartite(const PartSizes& sizes) {
  Graph g(sizes.total());
  connect_parts(g, sizes.sizes());
  return g;
}

Graph complete_graph(std::size_t n) { return turan_graph(n, n == 0 ? 1 : n); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices, got " + std::to_string(n));
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept {
  const std::uint64_t bits = mix64(mix64(seed) ^ mix64(counter + 0x9e3779b97f4a7c15ULL));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0,1]");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      const std::uint64_t counter = std::uint64_t{v} * (v - 1) / 2 + u;
      if (counter_uniform(seed, counter) < p) g.add_edge(u, v);
    }
  return g;
}

Graph remove_random_edges(const Graph& g, std::size_t count, std::uint64_t seed) {
  auto list = edges(g);
  if (count > list.size()) throw DomainError("cannot remove more edges than the graph has");
  Graph out = g;
  for (std::size_t i = 0; i < count; ++i) {
    const auto span = list.size() - i;
    const auto j = i + static_cast<std::size_t>(counter_uniform(seed, i) * static_cast<double>(span));
    std::swap(list[i], list[j < list.size() ? j : list.size() - 1]);
    out.remove_edge(list[i].first, list[i].second);
  }
  return out;
}

}  // namespace sturan
