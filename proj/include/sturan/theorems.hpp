#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturan/graph.hpp"
#include "sturan/multipartite.hpp"
#include "sturan/spectral.hpp"

namespace sturan {

enum class Verdict { confirmed, vacuous, indeterminate, violation };

std::string_view to_string(Verdict v) noexcept;

struct CheckOptions {
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  std::uint64_t budget = kDefaultBudget;
};

/// Outcome of applying one inequality to one instance. A violation is only
/// reported when the inequality fails for every point of every certified
/// interval involved.
struct TheoremReport {
  std::string id;
  std::string check;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<double> c;
  std::optional<SpectralEstimate> mu;
  std::optional<Count> kr;
  bool hypothesis = false;
  Verdict verdict = Verdict::vacuous;
  std::optional<double> rhs;
  std::optional<std::size_t> s_target;
  std::optional<double> t_target;
  /// Named thresholds and intermediate values, in evaluation order.
  std::vector<std::pair<std::string, double>> quantities;
  std::optional<MultipartiteWitness> witness;
  std::vector<std::string> notes;
};

/// Lower bound on k_r(G) from the spectral radius:
/// (mu/n - 1 + 1/r) * r(r-1)/(r+1) * (n/r)^r. Negative means vacuous.
double fact1_rhs(std::size_t n, std::size_t r, double mu);

struct Theorem1Params {
  std::size_t s_target = 0;
  double t_target = 0.0;
  bool precondition_met = false;
  /// (c / r^r)^r ln n before flooring.
  double size_factor = 0.0;
};

/// s = floor((c/r^r)^r ln n), t = n^(1 - c^(r-1)); precondition (c/r^r)^r ln n >= 1.
/// Requires r >= 3, c > 0, n >= 1.
Theorem1Params theorem1_params(std::size_t r, double c, std::size_t n);
/// Same, taking ln n directly so boundary cases with huge n can be evaluated.
Theorem1Params theorem1_params_from_log(std::size_t r, double c, double log_n);

/// Smallest integer strictly greater than t (t within 1e-12 relative of an
/// integer k counts as k).
std::size_t smallest_integer_above(double t);

TheoremReport fact1_check(const Graph& g, std::size_t r, const CheckOptions& opts = {});
TheoremReport fact2_check(const Graph& g, std::size_t r, double c, const CheckOptions& opts = {});
/// Exact integer check of 8 r e(T_r(n)) >= 4 (r-1) n^2 - r^2.
TheoremReport fact3_check(std::size_t n, std::size_t r);
TheoremReport theorem1_check(const Graph& g, std::size_t r, double c, const CheckOptions& opts = {});
/// k_r(G) > c (r-2)/r^r n^r >= (c/r^r) n^r whenever mu(G) >= (1 - 1/(r-1) + c) n.
TheoremReport proof_chain_check(const Graph& g, std::size_t r, double c, const CheckOptions& opts = {});

}  // namespace sturan
