#include "sturan/campaign.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "sturan/generators.hpp"
#include "sturan/graph_io.hpp"

namespace sturan {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::size_t parse_count(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw UsageError("expected a nonnegative integer, got '" + std::string(token) + "'");
  return value;
}

double parse_real(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw UsageError("expected a real number, got '" + std::string(token) + "'");
  return value;
}

std::pair<std::size_t, std::size_t> parse_pair(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("expected 'a,b', got '" + std::string(text) + "'");
  return {parse_count(parts[0]), parse_count(parts[1])};
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

void read_file(const std::string& path, const std::string& format, std::vector<Instance>& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  if (format == "edgelist") {
    std::ostringstream text;
    text << in.rdbuf();
    out.push_back({"file:" + path, parse_edge_list(text.str())});
    return;
  }
  if (format != "graph6") throw UsageError("unknown input format '" + format + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    out.push_back({"file:" + path + ":" + std::to_string(line_no), parse_graph6(line)});
  }
}

}  // namespace

bool SourceSpec::empty() const {
  return graph6.empty() && files.empty() && gnp.empty() && turan.empty() && turan_sweep.empty() &&
         complete.empty() && complete_range.empty() && multipartite.empty();
}

std::vector<double> parse_reals(std::string_view list) {
  std::vector<double> out;
  for (auto token : split(list, ',')) out.push_back(parse_real(token));
  return out;
}

std::vector<std::size_t> parse_counts(std::string_view list) {
  std::vector<std::size_t> out;
  for (auto token : split(list, ',')) out.push_back(parse_count(token));
  return out;
}

std::vector<Instance> build_corpus(const SourceSpec& spec) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < spec.graph6.size(); ++i)
    out.push_back({"graph6:" + std::to_string(i), parse_graph6(spec.graph6[i])});
  for (const auto& path : spec.files) read_file(path, spec.file_format, out);
  for (const auto& text : spec.gnp) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw UsageError("--gnp expects 'n,p', got '" + text + "'");
    const std::size_t n = parse_count(parts[0]);
    const double p = parse_real(parts[1]);
    for (std::size_t k = 0; k < spec.count; ++k) {
      const std::uint64_t seed = spec.seed + k;
      out.push_back({"gnp:n=" + std::to_string(n) + ",p=" + std::string(parts[1]) + ",seed=" + std::to_string(seed),
                     gnp(n, p, seed)});
    }
  }
  for (const auto& text : spec.turan) {
    const auto [n, r] = parse_pair(text);
    out.push_back({"turan:n=" + std::to_string(n) + ",r=" + std::to_string(r), turan_graph(n, r)});
  }
  if (!spec.turan_sweep.empty()) {
    const auto [n_max, r_max] = parse_pair(spec.turan_sweep);
    for (std::size_t r = 1; r <= r_max; ++r)
      for (std::size_t n = 1; n <= n_max; ++n)
        out.push_back({"turan:n=" + std::to_string(n) + ",r=" + std::to_string(r), turan_graph(n, r)});
  }
  for (std::size_t n : spec.complete) out.push_back({"complete:n=" + std::to_string(n), complete_graph(n)});
  if (!spec.complete_range.empty()) {
    const auto [lo, hi] = parse_pair(spec.complete_range);
    for (std::size_t n = lo; n <= hi; ++n) out.push_back({"complete:n=" + std::to_string(n), complete_graph(n)});
  }
  for (const auto& text : spec.multipartite)
    out.push_back({"multipartite:" + text, complete_multipartite(PartSizes(parse_counts(text)))});
  return out;
}

Json describe(const SourceSpec& spec) {
  Json j;
  if (!spec.graph6.empty()) j["graph6"] = spec.graph6;
  if (!spec.files.empty()) {
    j["files"] = spec.files;
    j["file_format"] = spec.file_format;
  }
  if (!spec.gnp.empty()) {
    j["gnp"] = spec.gnp;
    j["count"] = spec.count;
    j["seed"] = spec.seed;
  }
  if (!spec.turan.empty()) j["turan"] = spec.turan;
  if (!spec.turan_sweep.empty()) j["turan_sweep"] = spec.turan_sweep;
  if (!spec.complete.empty()) j["complete"] = spec.complete;
  if (!spec.complete_range.empty()) j["complete_range"] = spec.complete_range;
  if (!spec.multipartite.empty()) j["multipartite"] = spec.multipartite;
  return j;
}

Graph parse_named_graph(std::string_view spec) {
  if (spec.starts_with("g6:")) return parse_graph6(spec.substr(3));
  if (spec == "petersen") return petersen_graph();
  if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P')) {
    const auto body = spec.substr(1);
    if (spec[0] == 'K' && body.find(',') != std::string_view::npos)
      return complete_multipartite(PartSizes(parse_counts(body)));
    const std::size_t k = parse_count(body);
    if (spec[0] == 'K') return complete_graph(k);
    if (spec[0] == 'C') return cycle_graph(k);
    Graph path(k);
    for (Vertex v = 1; v < k; ++v) path.add_edge(v - 1, v);
    return path;
  }
  throw UsageError("unknown graph '" + std::string(spec) + "' (try K4, C5, P3, K2,2, petersen, g6:...)");
}

std::vector<std::string> csv_fields(const TheoremReport& report) {
  const auto opt_real = [](const std::optional<double>& x) { return x ? format_real(*x) : std::string(); };
  return {report.id,
          std::string(to_string(report.verdict)),
          report.mu ? format_real(report.mu->lower()) : std::string(),
          report.mu ? format_real(report.mu->upper()) : std::string(),
          report.kr ? to_string(*report.kr) : std::string(),
          opt_real(report.rhs),
          report.s_target ? std::to_string(*report.s_target) : std::string(),
          opt_real(report.t_target)};
}

std::vector<Record> run_ordered(std::size_t count, std::size_t threads,
                                const std::function<Record(std::size_t)>& job) {
  std::vector<Record> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t pool = std::max<std::size_t>(1, std::min(threads, count));
  std::vector<std::thread> workers;
  for (std::size_t t = 1; t < pool; ++t) workers.emplace_back(worker);
  worker();
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::size_t default_threads() {
  if (const char* env = std::getenv("SPECTRAL_TURAN_THREADS")) {
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 1;
}

}  // namespace sturan
