#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sturan/graph.hpp"
#include "sturan/report_json.hpp"
#include "sturan/theorems.hpp"

namespace sturan {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  std::string id;
  Graph graph;
};

/// Where campaign graphs come from. Every list may be combined; instances are
/// emitted in the order the fields are declared here.
struct SourceSpec {
  std::vector<std::string> graph6;
  std::vector<std::string> files;
  std::string file_format = "graph6";
  std::vector<std::string> gnp;  // "n,p"
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> turan;  // "n,r"
  std::string turan_sweep;         // "n_max,r_max"
  std::vector<std::size_t> complete;
  std::string complete_range;      // "lo,hi"
  std::vector<std::string> multipartite;  // "s1,s2,..."

  bool empty() const;
};

std::vector<Instance> build_corpus(const SourceSpec& spec);
Json describe(const SourceSpec& spec);

/// "K5", "C5", "P4" (path), "petersen", "K2,3" style multipartite, or "g6:<graph6>".
Graph parse_named_graph(std::string_view spec);

std::vector<double> parse_reals(std::string_view list);
std::vector<std::size_t> parse_counts(std::string_view list);

/// One output line of a campaign.
struct Record {
  Json json;
  std::optional<Verdict> verdict;
  bool indeterminate = false;
  /// id, verdict, mu_low, mu_high, k_r, rhs, s_target, t_target
  std::vector<std::string> csv;
};

std::vector<std::string> csv_fields(const TheoremReport& report);
inline constexpr std::string_view kCsvHeader = "id,verdict,mu_low,mu_high,k_r,rhs,s_target,t_target";

/// Runs job(0..count-1) on a worker pool and returns results in index order,
/// so the thread count never affects output. The first exception (by index)
/// is rethrown after all workers finish.
std::vector<Record> run_ordered(std::size_t count, std::size_t threads,
                                const std::function<Record(std::size_t)>& job);

/// SPECTRAL_TURAN_THREADS when set and positive, else 1.
std::size_t default_threads();

}  // namespace sturan
