#include "sturan/report_json.hpp"

#include <cstdint>
#include <limits>

#include "sturan/graph_io.hpp"

namespace sturan {

Json count_to_json(Count value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(value);
  return to_string(value);
}

Json witness_to_json(const MultipartiteWitness& w) {
  Json parts = Json::array();
  for (const auto& part : w.parts) parts.push_back(part);
  return parts;
}

Json spectral_to_json(const SpectralEstimate& mu) {
  return Json{{"value", mu.value}, {"residual", mu.residual}, {"iterations", mu.iterations},
              {"converged", mu.converged}};
}

Json report_to_json(const TheoremReport& report, const std::string& subcommand) {
  Json j;
  j["id"] = report.id;
  j["subcommand"] = subcommand;
  j["params"] = Json{{"n", report.n}, {"r", report.r}, {"c", report.c ? Json(*report.c) : Json(nullptr)}};
  j["mu"] = report.mu ? spectral_to_json(*report.mu) : Json(nullptr);
  j["kr"] = report.kr ? count_to_json(*report.kr) : Json(nullptr);
  j["verdict"] = std::string(to_string(report.verdict));
  if (report.witness) j["witness"] = witness_to_json(*report.witness);
  j["notes"] = report.notes;

  j["check"] = report.check;
  j["hypothesis"] = report.hypothesis;
  if (report.mu) j["mu_interval"] = Json::array({report.mu->lower(), report.mu->upper()});
  if (report.rhs) j["rhs"] = *report.rhs;
  if (report.s_target) j["s_target"] = *report.s_target;
  if (report.t_target) j["t_target"] = *report.t_target;
  Json quantities = Json::object();
  for (const auto& [name, value] : report.quantities) quantities[name] = value;
  j["quantities"] = quantities;
  return j;
}

Json gap_to_json(const GapReport& report) {
  Json j;
  j["lower"] = report.lower;
  j["upper"] = report.upper;
  j["upper_residual"] = report.upper_residual;
  j["edge_density"] = report.edge_density;
  j["turan_floor"] = report.turan_floor;
  j["gap"] = report.gap;
  j["sandwich_holds"] = report.sandwich_holds;
  j["floor_holds"] = report.floor_holds;
  if (report.witness.order() <= 62) j["witness_graph6"] = to_graph6(report.witness);
  return j;
}

}  // namespace sturan
