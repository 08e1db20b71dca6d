#include "sturan/embedding.hpp"

#include <string>
#include <vector>

namespace sturan {
namespace {

// Pattern vertices ordered so each one has as many already-ordered
// neighbours as possible; ties go to higher degree, then lower label.
std::vector<Vertex> connectivity_order(const Graph& pattern) {
  const std::size_t k = pattern.order();
  std::vector<bool> taken(k, false);
  std::vector<std::size_t> links(k, 0);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < k; ++v) {
      if (taken[v]) continue;
      if (!found || links[v] > links[best] ||
          (links[v] == links[best] && pattern.degree(v) > pattern.degree(best))) {
        best = v;
        found = true;
      }
    }
    taken[best] = true;
    order.push_back(best);
    bits::for_each(pattern.row(best), [&](std::size_t u) { ++links[u]; });
  }
  return order;
}

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), words_(host.words_per_row()), order_(connectivity_order(pattern)) {
    image_.assign(pattern.order(), 0);
    mapped_.assign(pattern.order(), false);
    used_.assign(words_, 0);
    scratch_.assign((pattern.order() + 1) * words_, 0);
    host_degree_.resize(host.order());
    for (Vertex v = 0; v < host.order(); ++v) host_degree_[v] = host.degree(v);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex f = order_[i];
    std::span<bits::Word> cand{scratch_.data() + i * words_, words_};
    bits::fill(cand, host_.order());
    bits::for_each(pattern_.row(f), [&](std::size_t p) {
      if (mapped_[p]) bits::intersect(cand, host_.row(image_[p]), cand);
    });
    const std::size_t need_degree = pattern_.degree(f);
    for (std::size_t x = bits::next(cand, 0); x != bits::npos; x = bits::next(cand, x + 1)) {
      if (bits::test(used_, x) || host_degree_[x] < need_degree) continue;
      image_[f] = static_cast<Vertex>(x);
      mapped_[f] = true;
      bits::set(used_, x);
      if (extend(i + 1)) return true;
      bits::reset(used_, x);
      mapped_[f] = false;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> mapped_;
  std::vector<bits::Word> used_;
  std::vector<bits::Word> scratch_;
  std::vector<std::size_t> host_degree_;
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > kMaxPatternOrder)
    throw DomainError("pattern order must be <= 10, got " + std::to_string(pattern.order()));
  if (pattern.order() > host.order()) return false;
  if (edge_count(pattern) > edge_count(host)) return false;
  return Embedder(host, pattern).run();
}

}  // namespace sturan
