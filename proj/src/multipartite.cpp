#include "sturan/multipartite.hpp"

#include <string>

namespace sturan {
namespace {

struct BudgetExceeded {};

class MultipartiteSearch {
 public:
  MultipartiteSearch(const Graph& g, const PartSizes& sizes, std::uint64_t budget)
      : g_(g), sizes_(sizes), budget_(budget), words_(g.words_per_row()), total_(sizes.total()) {
    for (std::size_t i = 0; i < sizes.parts(); ++i) {
      part_start_.push_back(slot_part_.size());
      slot_part_.insert(slot_part_.end(), sizes[i], i);
    }
    part_start_.push_back(total_);
    common_.assign((total_ + 1) * words_, 0);
    candidates_.assign((total_ + 1) * words_, 0);
    used_.assign(words_, 0);
    bits::fill(common(0), g.order());
    parts_.resize(sizes.parts());
  }

  SearchOutcome run() {
    SearchOutcome out;
    try {
      if (place(0)) {
        out.status = SearchStatus::found;
        out.witness = MultipartiteWitness{parts_};
      } else {
        out.status = SearchStatus::absent;
      }
    } catch (const BudgetExceeded&) {
      out.status = SearchStatus::indeterminate;
    }
    out.expansions = expansions_;
    return out;
  }

 private:
  std::span<bits::Word> common(std::size_t d) { return {common_.data() + d * words_, words_}; }
  std::span<bits::Word> candidates(std::size_t d) { return {candidates_.data() + d * words_, words_}; }

  // Places the d-th vertex overall. Vertices of part i must be adjacent to all
  // of parts 0..i-1 (common at the part's first slot); later parts must lie in
  // the common neighbourhood of everything placed so far.
  bool place(std::size_t d) {
    if (d == total_) return true;
    const std::size_t part = slot_part_[d];
    const std::size_t start = part_start_[part];
    const std::size_t in_part = d - start;
    const std::size_t need = sizes_[part] - in_part;
    const std::size_t later = total_ - part_start_[part + 1];

    std::size_t from = 0;
    if (in_part > 0)
      from = parts_[part].back() + 1;
    else if (part > 0 && sizes_[part] == sizes_[part - 1])
      from = parts_[part - 1].front() + 1;  // equal-size classes are interchangeable

    auto cand = candidates(d);
    const auto base = common(start);
    for (std::size_t w = 0; w < words_; ++w) cand[w] = base[w] & ~used_[w];
    std::size_t avail = bits::count(cand);
    for (std::size_t x = bits::next(cand, 0); x != bits::npos && x < from; x = bits::next(cand, x + 1)) --avail;

    for (std::size_t x = bits::next(cand, from); x != bits::npos; x = bits::next(cand, x + 1)) {
      if (avail < need) break;
      --avail;
      if (++expansions_ > budget_) throw BudgetExceeded{};

      const auto v = static_cast<Vertex>(x);
      bits::intersect(common(d), g_.row(v), common(d + 1));
      bits::set(used_, x);
      if (bits::count_and_not(common(d + 1), used_) >= later) {
        parts_[part].push_back(v);
        if (place(d + 1)) return true;
        parts_[part].pop_back();
      }
      bits::reset(used_, x);
    }
    return false;
  }

  const Graph& g_;
  const PartSizes& sizes_;
  std::uint64_t budget_;
  std::size_t words_;
  std::size_t total_;
  std::uint64_t expansions_ = 0;
  std::vector<std::size_t> slot_part_;
  std::vector<std::size_t> part_start_;
  std::vector<bits::Word> common_;
  std::vector<bits::Word> candidates_;
  std::vector<bits::Word> used_;
  std::vector<std::vector<Vertex>> parts_;
};

}  // namespace

bool verify_witness(const Graph& g, const MultipartiteWitness& w) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < w.parts.size(); ++i)
    for (Vertex v : w.parts[i]) {
      if (v >= g.order()) throw DomainError("witness vertex " + std::to_string(v) + " out of range");
      if (owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
  for (std::size_t i = 0; i < w.parts.size(); ++i)
    for (std::size_t j = i + 1; j < w.parts.size(); ++j)
      for (Vertex u : w.parts[i])
        for (Vertex v : w.parts[j])
          if (!g.has_edge(u, v)) return false;
  return true;
}

bool verify_witness(const Graph& g, const MultipartiteWitness& w, const PartSizes& sizes) {
  if (w.parts.size() != sizes.parts()) return false;
  for (std::size_t i = 0; i < sizes.parts(); ++i)
    if (w.parts[i].size() != sizes[i]) return false;
  return verify_witness(g, w);
}

SearchOutcome find_complete_multipartite(const Graph& g, const PartSizes& sizes, std::uint64_t budget) {
  if (sizes.total() > g.order()) return {};
  return MultipartiteSearch(g, sizes, budget).run();
}

BicliqueResult max_balanced_biclique(const Graph& g, std::uint64_t budget) {
  if (g.order() < 2) throw DomainError("balanced biclique search needs n >= 2");
  BicliqueResult result;
  for (std::size_t s = 1; 2 * s <= g.order(); ++s) {
    const auto outcome = find_complete_multipartite(g, PartSizes{s, s}, budget);
    if (outcome.status == SearchStatus::absent) return result;
    if (outcome.status == SearchStatus::indeterminate) {
      result.exact = false;
      return result;
    }
    result.side = s;
  }
  return result;
}

}  // namespace sturan
