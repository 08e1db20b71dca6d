#include "sturan/theorems.hpp"

#include <cmath>
#include <sstream>

#include "sturan/cliques.hpp"
#include "sturan/generators.hpp"

namespace sturan {
namespace {

constexpr double kSnap = 1e-12;
constexpr double kCompareTol = 1e-9;

// Values within kSnap (relative) of an integer are treated as that integer,
// so parameter boundaries hit by construction are not lost to rounding.
double snap(double x) {
  const double nearest = std::round(x);
  return std::abs(x - nearest) <= kSnap * std::max(1.0, std::abs(x)) ? nearest : x;
}

bool at_least(long double lhs, double rhs) {
  return lhs >= rhs || std::abs(lhs - rhs) <= kSnap * std::max(1.0L, std::abs(lhs));
}

enum class Tri { holds, fails, undecided };

// mu >= threshold over the certified interval.
Tri spectral_hypothesis(const SpectralEstimate& mu, double threshold) {
  if (mu.lower() >= threshold) return Tri::holds;
  if (mu.upper() < threshold) return Tri::fails;
  return Tri::undecided;
}

std::string format(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

TheoremReport base_report(std::string check, const Graph& g, std::size_t r) {
  TheoremReport report;
  report.check = std::move(check);
  report.n = g.order();
  report.r = r;
  return report;
}

// Searches for K_r(s, ..., s, t_min) and maps the outcome onto a verdict.
void search_conclusion(TheoremReport& report, const Graph& g, std::size_t s, std::size_t t_min,
                       std::uint64_t budget) {
  std::vector<std::size_t> sizes(report.r - 1, s);
  sizes.push_back(t_min);
  const PartSizes parts(sizes);
  if (parts.total() > g.order()) {
    report.verdict = Verdict::violation;
    report.notes.push_back("required parts need " + std::to_string(parts.total()) + " vertices but n = " +
                           std::to_string(g.order()));
    return;
  }
  const auto outcome = find_complete_multipartite(g, parts, budget);
  switch (outcome.status) {
    case SearchStatus::found:
      report.verdict = Verdict::confirmed;
      report.witness = outcome.witness;
      break;
    case SearchStatus::absent:
      report.verdict = Verdict::violation;
      report.notes.push_back("exhaustive search found no K_r(s,...,s,t) witness");
      break;
    case SearchStatus::indeterminate:
      report.verdict = Verdict::indeterminate;
      report.notes.push_back("witness search exceeded budget after " + std::to_string(outcome.expansions) +
                             " expansions");
      break;
  }
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::vacuous: return "vacuous";
    case Verdict::indeterminate: return "indeterminate";
    case Verdict::violation: return "VIOLATION";
  }
  return "unknown";
}

double fact1_rhs(std::size_t n, std::size_t r, double mu) {
  const auto nd = static_cast<double>(n);
  const auto rd = static_cast<double>(r);
  return (mu / nd - 1.0 + 1.0 / rd) * (rd * (rd - 1.0) / (rd + 1.0)) * std::pow(nd / rd, rd);
}

std::size_t smallest_integer_above(double t) {
  const double snapped = snap(t);
  if (snapped < 0.0) return 0;
  return static_cast<std::size_t>(std::floor(snapped)) + 1;
}

Theorem1Params theorem1_params_from_log(std::size_t r, double c, double log_n) {
  if (r < 3) throw DomainError("spectral size parameters need r >= 3");
  if (!(c > 0.0)) throw DomainError("spectral size parameters need c > 0");
  if (!(log_n >= 0.0)) throw DomainError("spectral size parameters need n >= 1");
  const auto rd = static_cast<double>(r);
  Theorem1Params p;
  p.size_factor = snap(std::pow(c / std::pow(rd, rd), rd) * log_n);
  p.s_target = static_cast<std::size_t>(std::floor(p.size_factor));
  p.t_target = std::exp((1.0 - std::pow(c, rd - 1.0)) * log_n);
  p.precondition_met = p.size_factor >= 1.0;
  return p;
}

Theorem1Params theorem1_params(std::size_t r, double c, std::size_t n) {
  if (n == 0) throw DomainError("spectral size parameters need n >= 1");
  const auto p = theorem1_params_from_log(r, c, std::log(static_cast<double>(n)));
  Theorem1Params out = p;
  const auto rd = static_cast<double>(r);
  out.t_target = std::pow(static_cast<double>(n), 1.0 - std::pow(c, rd - 1.0));
  return out;
}

TheoremReport fact1_check(const Graph& g, std::size_t r, const CheckOptions& opts) {
  if (r < 2) throw DomainError("clique bound needs r >= 2");
  auto report = base_report("fact1", g, r);
  const auto mu = spectral_radius(g, opts.tol, opts.max_iter);
  const Count k = count_cliques(g, r);
  report.mu = mu;
  report.kr = k;
  report.hypothesis = true;

  const double rhs_low = fact1_rhs(g.order(), r, mu.lower());
  const double rhs_high = fact1_rhs(g.order(), r, mu.upper());
  report.rhs = rhs_low;
  report.quantities = {{"rhs_at_mu_low", rhs_low}, {"rhs_at_mu_high", rhs_high}};
  if (rhs_high < 0.0) report.notes.push_back("bound is negative over the whole interval");

  // rhs is increasing in mu, so failing at mu_low means failing everywhere.
  const auto kd = static_cast<long double>(k);
  report.verdict = kd >= static_cast<long double>(rhs_low) - kCompareTol ? Verdict::confirmed : Verdict::violation;
  if (!mu.converged) report.notes.push_back("power iteration did not reach tolerance");
  return report;
}

TheoremReport fact2_check(const Graph& g, std::size_t r, double c, const CheckOptions& opts) {
  if (r < 2) throw DomainError("clique density check needs r >= 2");
  auto report = base_report("fact2", g, r);
  report.c = c;
  const Count k = count_cliques(g, r);
  report.kr = k;
  if (!(c > 0.0) || g.order() == 0) {
    report.notes.push_back("c must be positive and n >= 1; nothing to check");
    return report;
  }

  const auto rd = static_cast<double>(r);
  const auto nd = static_cast<double>(g.order());
  const double log_n = std::log(nd);
  const double density_threshold = c * std::pow(nd, rd);
  const double size_factor = snap(std::pow(c, rd) * log_n);
  const double t = std::pow(nd, 1.0 - std::pow(c, rd - 1.0));
  report.rhs = density_threshold;
  report.s_target = static_cast<std::size_t>(std::floor(size_factor));
  report.t_target = t;
  report.quantities = {{"density_threshold", density_threshold}, {"size_factor", size_factor}};

  const bool dense = at_least(static_cast<long double>(k), density_threshold);
  const bool large = size_factor >= 1.0;
  report.hypothesis = dense && large;
  if (!dense) report.notes.push_back("k_r below c n^r");
  if (!large) report.notes.push_back("c^r ln n < 1");
  if (!report.hypothesis) return report;

  search_conclusion(report, g, *report.s_target, smallest_integer_above(t), opts.budget);
  return report;
}

TheoremReport fact3_check(std::size_t n, std::size_t r) {
  if (r < 1) throw DomainError("Turán edge bound needs r >= 1");
  TheoremReport report;
  report.check = "fact3";
  report.n = n;
  report.r = r;
  report.hypothesis = true;

  using Wide = __int128;
  const Wide e = static_cast<Wide>(turan_edge_count(n, r));
  const Wide nn = static_cast<Wide>(n) * static_cast<Wide>(n);
  const Wide rr = static_cast<Wide>(r);
  // 2e >= (1 - 1/r) n^2 - r/4, multiplied through by 4r.
  const Wide lhs = 8 * rr * e;
  const Wide rhs = 4 * (rr - 1) * nn - rr * rr;
  report.kr = static_cast<Count>(e);
  report.rhs = (1.0 - 1.0 / static_cast<double>(r)) * static_cast<double>(nn) - static_cast<double>(r) / 4.0;
  report.quantities = {{"two_e", static_cast<double>(2 * e)}, {"slack_times_4r", static_cast<double>(lhs - rhs)}};
  report.verdict = lhs >= rhs ? Verdict::confirmed : Verdict::violation;
  return report;
}

TheoremReport theorem1_check(const Graph& g, std::size_t r, double c, const CheckOptions& opts) {
  if (r < 3) throw DomainError("spectral multipartite check needs r >= 3");
  auto report = base_report("theorem1", g, r);
  report.c = c;
  if (!(c > 0.0) || g.order() == 0) {
    report.notes.push_back("c must be positive and n >= 1; nothing to check");
    return report;
  }
  const auto rd = static_cast<double>(r);
  if (c >= 1.0 / (rd - 1.0)) report.notes.push_back("c >= 1/(r-1): spectral hypothesis is unattainable");

  const auto params = theorem1_params(r, c, g.order());
  report.s_target = params.s_target;
  report.t_target = params.t_target;

  const auto mu = spectral_radius(g, opts.tol, opts.max_iter);
  report.mu = mu;
  const double threshold = (1.0 - 1.0 / (rd - 1.0) + c) * static_cast<double>(g.order());
  report.rhs = threshold;
  report.quantities = {{"hypothesis_threshold", threshold}, {"size_factor", params.size_factor}};

  if (!params.precondition_met) {
    report.notes.push_back("(c/r^r)^r ln n = " + format(params.size_factor) + " < 1");
    return report;
  }
  switch (spectral_hypothesis(mu, threshold)) {
    case Tri::fails:
      report.notes.push_back("mu below (1 - 1/(r-1) + c) n");
      return report;
    case Tri::undecided:
      report.verdict = Verdict::indeterminate;
      report.notes.push_back("spectral interval straddles the hypothesis threshold");
      return report;
    case Tri::holds:
      break;
  }
  report.hypothesis = true;
  search_conclusion(report, g, params.s_target, smallest_integer_above(params.t_target), opts.budget);
  return report;
}

TheoremReport proof_chain_check(const Graph& g, std::size_t r, double c, const CheckOptions& opts) {
  if (r < 3) throw DomainError("proof chain needs r >= 3");
  auto report = base_report("chain", g, r);
  report.c = c;
  if (!(c > 0.0) || g.order() == 0) {
    report.notes.push_back("c must be positive and n >= 1; nothing to check");
    return report;
  }
  const auto rd = static_cast<double>(r);
  const auto nd = static_cast<double>(g.order());
  if (c >= 1.0 / (rd - 1.0)) report.notes.push_back("c >= 1/(r-1): spectral hypothesis is unattainable");

  const auto mu = spectral_radius(g, opts.tol, opts.max_iter);
  report.mu = mu;
  const double threshold = (1.0 - 1.0 / (rd - 1.0) + c) * nd;
  const double scale = std::pow(nd, rd) / std::pow(rd, rd);
  const double strict_bound = c * (rd - 2.0) * scale;
  const double weak_bound = c * scale;
  report.rhs = strict_bound;
  report.quantities = {{"hypothesis_threshold", threshold}, {"strict_bound", strict_bound}, {"weak_bound", weak_bound}};

  switch (spectral_hypothesis(mu, threshold)) {
    case Tri::fails:
      report.notes.push_back("mu below (1 - 1/(r-1) + c) n");
      return report;
    case Tri::undecided:
      report.verdict = Verdict::indeterminate;
      report.notes.push_back("spectral interval straddles the hypothesis threshold");
      return report;
    case Tri::holds:
      break;
  }
  report.hypothesis = true;
  const Count k = count_cliques(g, r);
  report.kr = k;
  const auto kd = static_cast<long double>(k);
  const bool strict_ok = kd > static_cast<long double>(strict_bound) - kCompareTol * std::max(1.0, strict_bound);
  const bool weak_ok = kd >= static_cast<long double>(weak_bound) - kCompareTol * std::max(1.0, weak_bound);
  report.verdict = strict_ok && weak_ok ? Verdict::confirmed : Verdict::violation;
  if (!strict_ok) report.notes.push_back("k_r <= c(r-2)/r^r n^r");
  if (!weak_ok) report.notes.push_back("k_r < (c/r^r) n^r");
  return report;
}

}  // namespace sturan
