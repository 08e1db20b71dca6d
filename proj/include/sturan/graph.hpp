#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sturan/bitset.hpp"

namespace sturan {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Exact counts (cliques, products of part sizes). 128 bits; overflow raises.
using Count = unsigned __int128;

inline constexpr std::size_t kMaxOrder = 10000;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Undirected simple graph on vertices 0..n-1 with bit-packed adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const;
  /// Loops are rejected; adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const bits::Word> row(Vertex u) const noexcept { return {bits_.data() + u * words_, words_}; }
  std::size_t degree(Vertex u) const noexcept { return bits::count(row(u)); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<bits::Word> bits_;
};

std::size_t edge_count(const Graph& g);
Graph complement(const Graph& g);
/// Degrees in nonincreasing order.
std::vector<std::size_t> degree_sequence(const Graph& g);
std::size_t max_degree(const Graph& g);
/// Edges (u, v) with u < v, ordered by v then u (graph6 bit order).
std::vector<Edge> edges(const Graph& g);

/// Positive part sizes of a complete multipartite graph, kept nonincreasing.
class PartSizes {
 public:
  explicit PartSizes(std::vector<std::size_t> sizes);
  PartSizes(std::initializer_list<std::size_t> sizes) : PartSizes(std::vector<std::size_t>(sizes)) {}

  std::size_t parts() const noexcept { return sizes_.size(); }
  std::size_t total() const noexcept;
  std::size_t operator[](std::size_t i) const { return sizes_[i]; }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

  friend bool operator==(const PartSizes&, const PartSizes&) = default;

 private:
  std::vector<std::size_t> sizes_;
};

std::string to_string(Count value);

}  // namespace sturan
