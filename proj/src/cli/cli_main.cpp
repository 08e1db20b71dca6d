#include "sturan/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sturan/campaign.hpp"
#include "sturan/cliques.hpp"
#include "sturan/extremal.hpp"
#include "sturan/generators.hpp"
#include "sturan/graph_io.hpp"
#include "sturan/multipartite.hpp"
#include "sturan/spectral.hpp"
#include "sturan/theorems.hpp"

namespace sturan {
namespace {

constexpr const char* kVersion = STURAN_VERSION;

struct RunOptions {
  double tol = kDefaultTolerance;
  std::uint64_t budget = kDefaultBudget;
  std::size_t threads = 1;
  bool strict = false;
  std::string out_path;
  std::string format = "jsonl";
};

void add_run_options(CLI::App* cmd, RunOptions& run) {
  cmd->add_option("--tol", run.tol, "Spectral residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", run.budget, "Node-expansion budget for witness searches");
  cmd->add_option("--threads", run.threads, "Worker threads (default: $SPECTRAL_TURAN_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", run.strict, "Exit 3 when any result is indeterminate");
  cmd->add_option("--out", run.out_path, "Write reports to this file instead of stdout");
  cmd->add_option("--format", run.format, "Report format")->check(CLI::IsMember({"jsonl", "csv"}));
}

void add_sources(CLI::App* cmd, SourceSpec& src) {
  cmd->add_option("--graph6", src.graph6, "graph6 string (repeatable)");
  cmd->add_option("--in", src.files, "Input file: graph6 lines, or one edge list (repeatable)");
  cmd->add_option("--in-format", src.file_format, "Input file format")->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--gnp", src.gnp, "Random graphs 'n,p' (repeatable)");
  cmd->add_option("--count", src.count, "Random graphs per --gnp spec");
  cmd->add_option("--seed", src.seed, "First seed; instance k uses seed + k");
  cmd->add_option("--turan", src.turan, "Turán graph 'n,r' (repeatable)");
  cmd->add_option("--turan-sweep", src.turan_sweep, "All T_r(n) with 1 <= n <= n_max, 1 <= r <= r_max: 'n_max,r_max'");
  cmd->add_option("--complete", src.complete, "Complete graph K_n (repeatable)");
  cmd->add_option("--complete-range", src.complete_range, "Complete graphs K_lo..K_hi: 'lo,hi'");
  cmd->add_option("--multipartite", src.multipartite, "Complete multipartite graph 's1,s2,...' (repeatable)");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void attach_instance(Json& j, const Instance& inst, const Json& config) {
  if (inst.graph.order() <= 62)
    j["graph6"] = to_graph6(inst.graph);
  else
    j["corpus"] = inst.id;
  j["version"] = kVersion;
  j["config"] = config;
}

Record theorem_record(TheoremReport report, const std::string& subcommand, const Instance* inst,
                      const Json& config) {
  Record rec;
  rec.json = report_to_json(report, subcommand);
  if (inst != nullptr)
    attach_instance(rec.json, *inst, config);
  else {
    rec.json["version"] = kVersion;
    rec.json["config"] = config;
  }
  rec.verdict = report.verdict;
  rec.indeterminate = report.verdict == Verdict::indeterminate;
  rec.csv = csv_fields(report);
  return rec;
}

// Records for informational subcommands carry verdict = null and a status.
Record info_record(const std::string& id, const std::string& subcommand, std::size_t n, std::optional<std::size_t> r,
                   const Json& config) {
  Record rec;
  rec.json["id"] = id;
  rec.json["subcommand"] = subcommand;
  rec.json["params"] = Json{{"n", n}, {"r", r ? Json(*r) : Json(nullptr)}, {"c", nullptr}};
  rec.json["mu"] = nullptr;
  rec.json["kr"] = nullptr;
  rec.json["verdict"] = nullptr;
  rec.json["notes"] = Json::array();
  rec.json["version"] = kVersion;
  rec.json["config"] = config;
  rec.csv = {id, "", "", "", "", "", "", ""};
  return rec;
}

int finish(const std::vector<Record>& records, const RunOptions& run, std::ostream& out) {
  std::ofstream file;
  if (!run.out_path.empty()) {
    file.open(run.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + run.out_path + "'");
  }
  std::ostream& sink = run.out_path.empty() ? out : file;
  if (run.format == "csv") {
    sink << kCsvHeader << '\n';
    for (const auto& rec : records) {
      for (std::size_t i = 0; i < rec.csv.size(); ++i) sink << (i ? "," : "") << csv_escape(rec.csv[i]);
      sink << '\n';
    }
  } else {
    for (const auto& rec : records) sink << rec.json.dump() << '\n';
  }
  sink.flush();

  bool violation = false;
  bool indeterminate = false;
  for (const auto& rec : records) {
    violation = violation || rec.verdict == Verdict::violation;
    indeterminate = indeterminate || rec.indeterminate;
  }
  if (violation) return kExitViolation;
  if (indeterminate && run.strict) return kExitIndeterminate;
  return kExitOk;
}

Json base_config(const std::string& command, const RunOptions& run) {
  return Json{{"command", command}, {"tol", run.tol}, {"budget", run.budget}};
}

std::vector<Instance> require_corpus(const SourceSpec& src) {
  if (src.empty()) throw UsageError("no input graphs; use --graph6, --in, --gnp, --turan, --complete, ...");
  return build_corpus(src);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral Turán toolkit: spectral radius, clique counts, complete multipartite witnesses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunOptions run;
  run.threads = default_threads();
  SourceSpec src;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->require_subcommand(1);
  std::string gen_format = "graph6";
  std::string gen_out;
  std::size_t gen_n = 0;
  std::size_t gen_r = 1;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_sizes;
  auto* gen_turan = gen->add_subcommand("turan", "Turán graph T_r(n)");
  gen_turan->add_option("--n", gen_n)->required();
  gen_turan->add_option("--r", gen_r)->required()->check(CLI::PositiveNumber);
  auto* gen_multi = gen->add_subcommand("multipartite", "Complete multipartite graph");
  gen_multi->add_option("--sizes", gen_sizes, "Part sizes 's1,s2,...'")->required();
  auto* gen_gnp = gen->add_subcommand("gnp", "Random graph G(n,p)");
  gen_gnp->add_option("--n", gen_n)->required();
  gen_gnp->add_option("--p", gen_p)->required()->check(CLI::Range(0.0, 1.0));
  gen_gnp->add_option("--seed", gen_seed);
  for (auto* g : {gen_turan, gen_multi, gen_gnp}) {
    g->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
    g->add_option("--out", gen_out, "Output file");
  }

  // mu
  auto* mu_cmd = app.add_subcommand("mu", "Spectral radius with certified residual");
  std::size_t max_iter = kDefaultMaxIterations;
  add_sources(mu_cmd, src);
  add_run_options(mu_cmd, run);
  mu_cmd->add_option("--max-iter", max_iter, "Power iteration limit");

  // cliques
  auto* cliques_cmd = app.add_subcommand("cliques", "Exact r-clique counts");
  std::string r_list = "3";
  add_sources(cliques_cmd, src);
  add_run_options(cliques_cmd, run);
  cliques_cmd->add_option("--r", r_list, "Clique sizes, comma separated");

  // find-kpartite
  auto* find_cmd = app.add_subcommand("find-kpartite", "Search for a complete multipartite subgraph");
  std::string sizes_text;
  add_sources(find_cmd, src);
  add_run_options(find_cmd, run);
  find_cmd->add_option("--sizes", sizes_text, "Part sizes 's1,s2,...'")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check an inequality on every instance");
  std::string check;
  std::string c_list;
  double c_fraction = 0.0;
  std::size_t n_min = 0, n_max = 0, r_min = 1, r_max = 0;
  verify_cmd->add_option("check", check, "fact1 | fact2 | fact3 | theorem1 | chain")
      ->required()
      ->check(CLI::IsMember({"fact1", "fact2", "fact3", "theorem1", "chain"}));
  add_sources(verify_cmd, src);
  add_run_options(verify_cmd, run);
  verify_cmd->add_option("--r", r_list, "Values of r, comma separated");
  verify_cmd->add_option("--c", c_list, "Values of c, comma separated");
  verify_cmd->add_option("--c-fraction", c_fraction,
                         "Per instance c = f * (mu/n - 1 + 1/(r-1)), skipped when not positive");
  verify_cmd->add_option("--n-min", n_min, "fact3: smallest n");
  verify_cmd->add_option("--n-max", n_max, "fact3: largest n");
  verify_cmd->add_option("--r-min", r_min, "fact3: smallest r");
  verify_cmd->add_option("--r-max", r_max, "fact3: largest r");

  // spex / gap
  auto* spex_cmd = app.add_subcommand("spex", "Maximum spectral radius of F-free graphs on n vertices");
  auto* gap_cmd = app.add_subcommand("gap", "Finite-n sandwich for the spectral Turán density");
  std::string spex_n = "6";
  std::string forbid = "K3";
  std::size_t spex_bound = kMaxSpexOrder;
  for (auto* cmd : {spex_cmd, gap_cmd}) {
    cmd->add_option("--n", spex_n, "Orders, comma separated");
    cmd->add_option("--forbid", forbid, "Forbidden graph: K3, C5, petersen, K2,2, g6:...");
    cmd->add_option("--max-order", spex_bound, "Largest n the exhaustive scan accepts");
    add_run_options(cmd, run);
  }

  // biclique-scan
  auto* biclique_cmd = app.add_subcommand("biclique-scan", "Largest balanced biclique in random graphs");
  std::size_t bic_n = 40;
  double bic_p = 0.5;
  std::uint64_t bic_seed = 1;
  std::size_t bic_count = 20;
  biclique_cmd->add_option("--n", bic_n);
  biclique_cmd->add_option("--p", bic_p)->check(CLI::Range(0.0, 1.0));
  biclique_cmd->add_option("--seed", bic_seed, "First seed");
  biclique_cmd->add_option("--count", bic_count, "Number of seeds");
  add_run_options(biclique_cmd, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (gen_turan->parsed())
        g = turan_graph(gen_n, gen_r);
      else if (gen_multi->parsed())
        g = complete_multipartite(PartSizes(parse_counts(gen_sizes)));
      else
        g = gnp(gen_n, gen_p, gen_seed);
      const std::string text = gen_format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g);
      if (gen_out.empty()) {
        out << text;
      } else {
        std::ofstream file(gen_out, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + gen_out + "'");
        file << text;
      }
      return kExitOk;
    }

    if (mu_cmd->parsed()) {
      const auto corpus = require_corpus(src);
      auto config = base_config("mu", run);
      config["sources"] = describe(src);
      config["max_iter"] = max_iter;
      const auto records = run_ordered(corpus.size(), run.threads, [&](std::size_t i) {
        const auto& inst = corpus[i];
        auto rec = info_record(inst.id, "mu", inst.graph.order(), std::nullopt, config);
        attach_instance(rec.json, inst, config);
        const auto mu = spectral_radius(inst.graph, run.tol, max_iter);
        rec.json["mu"] = spectral_to_json(mu);
        rec.json["average_degree"] = 2.0 * static_cast<double>(edge_count(inst.graph)) /
                                     static_cast<double>(inst.graph.order());
        rec.json["status"] = mu.converged ? "converged" : "not_converged";
        rec.indeterminate = !mu.converged;
        rec.csv[2] = std::to_string(mu.lower());
        rec.csv[3] = std::to_string(mu.upper());
        return rec;
      });
      return finish(records, run, out);
    }

    if (cliques_cmd->parsed()) {
      const auto corpus = require_corpus(src);
      const auto rs = parse_counts(r_list);
      auto config = base_config("cliques", run);
      config["sources"] = describe(src);
      config["r"] = rs;
      const auto records = run_ordered(corpus.size() * rs.size(), run.threads, [&](std::size_t i) {
        const auto& inst = corpus[i / rs.size()];
        const std::size_t r = rs[i % rs.size()];
        auto rec = info_record(inst.id + "/r=" + std::to_string(r), "cliques", inst.graph.order(), r, config);
        attach_instance(rec.json, inst, config);
        const Count k = count_cliques(inst.graph, r);
        rec.json["kr"] = count_to_json(k);
        rec.csv[4] = to_string(k);
        return rec;
      });
      return finish(records, run, out);
    }

    if (find_cmd->parsed()) {
      const auto corpus = require_corpus(src);
      const PartSizes sizes(parse_counts(sizes_text));
      auto config = base_config("find-kpartite", run);
      config["sources"] = describe(src);
      config["sizes"] = sizes.sizes();
      const auto records = run_ordered(corpus.size(), run.threads, [&](std::size_t i) {
        const auto& inst = corpus[i];
        auto rec = info_record(inst.id, "find-kpartite", inst.graph.order(), sizes.parts(), config);
        attach_instance(rec.json, inst, config);
        const auto outcome = find_complete_multipartite(inst.graph, sizes, run.budget);
        rec.json["sizes"] = sizes.sizes();
        rec.json["expansions"] = outcome.expansions;
        switch (outcome.status) {
          case SearchStatus::found:
            rec.json["status"] = "found";
            rec.json["witness"] = witness_to_json(*outcome.witness);
            break;
          case SearchStatus::absent:
            rec.json["status"] = "absent";
            break;
          case SearchStatus::indeterminate:
            rec.json["status"] = "indeterminate";
            rec.json["notes"].push_back("budget exhausted");
            rec.indeterminate = true;
            break;
        }
        rec.csv[1] = rec.json["status"].get<std::string>();
        return rec;
      });
      return finish(records, run, out);
    }

    if (verify_cmd->parsed()) {
      auto config = base_config("verify " + check, run);
      if (check == "fact3") {
        if (r_max == 0) throw UsageError("verify fact3 needs --n-max and --r-max");
        if (r_min == 0) throw UsageError("--r-min must be at least 1");
        config["n_min"] = n_min;
        config["n_max"] = n_max;
        config["r_min"] = r_min;
        config["r_max"] = r_max;
        const std::size_t ns = n_max >= n_min ? n_max - n_min + 1 : 0;
        const std::size_t rs = r_max >= r_min ? r_max - r_min + 1 : 0;
        const auto records = run_ordered(ns * rs, run.threads, [&](std::size_t i) {
          const std::size_t r = r_min + i / std::max<std::size_t>(ns, 1);
          const std::size_t n = n_min + i % std::max<std::size_t>(ns, 1);
          auto report = fact3_check(n, r);
          report.id = "turan:n=" + std::to_string(n) + ",r=" + std::to_string(r);
          return theorem_record(std::move(report), "verify fact3", nullptr, config);
        });
        return finish(records, run, out);
      }

      const auto corpus = require_corpus(src);
      const auto rs = parse_counts(r_list);
      std::vector<double> cs;
      const bool needs_c = check != "fact1";
      if (needs_c) {
        if (!c_list.empty()) cs = parse_reals(c_list);
        if (c_fraction > 0.0) cs.push_back(std::nan(""));  // marker: derive c from mu
        if (cs.empty()) throw UsageError("verify " + check + " needs --c or --c-fraction");
      } else {
        cs.push_back(0.0);
      }
      config["sources"] = describe(src);
      config["r"] = rs;
      if (needs_c) {
        config["c"] = c_list.empty() ? Json::array() : Json(parse_reals(c_list));
        if (c_fraction > 0.0) config["c_fraction"] = c_fraction;
      }
      const CheckOptions opts{run.tol, kDefaultMaxIterations, run.budget};
      const std::size_t per_instance = rs.size() * cs.size();
      const auto records = run_ordered(corpus.size() * per_instance, run.threads, [&](std::size_t i) {
        const auto& inst = corpus[i / per_instance];
        const std::size_t r = rs[(i % per_instance) / cs.size()];
        double c = cs[i % cs.size()];
        std::string id = inst.id + "/r=" + std::to_string(r);
        if (std::isnan(c)) {
          const auto mu = spectral_radius(inst.graph, run.tol);
          c = c_fraction * (mu.lower() / static_cast<double>(inst.graph.order()) - 1.0 +
                            1.0 / (static_cast<double>(r) - 1.0));
          id += "/c=auto";
        } else if (needs_c) {
          std::ostringstream os;
          os << c;
          id += "/c=" + os.str();
        }
        TheoremReport report;
        if (check == "fact1")
          report = fact1_check(inst.graph, r, opts);
        else if (check == "fact2")
          report = fact2_check(inst.graph, r, c, opts);
        else if (check == "theorem1")
          report = theorem1_check(inst.graph, r, c, opts);
        else
          report = proof_chain_check(inst.graph, r, c, opts);
        report.id = id;
        return theorem_record(std::move(report), "verify " + check, &inst, config);
      });
      return finish(records, run, out);
    }

    if (spex_cmd->parsed() || gap_cmd->parsed()) {
      const bool gap = gap_cmd->parsed();
      const Graph forbidden = parse_named_graph(forbid);
      const auto ns = parse_counts(spex_n);
      auto config = base_config(gap ? "gap" : "spex", run);
      config["forbid"] = forbid;
      config["n"] = ns;
      const auto records = run_ordered(ns.size(), run.threads, [&](std::size_t i) {
        const std::size_t n = ns[i];
        const std::string id = "n=" + std::to_string(n) + ",F=" + forbid;
        if (gap) {
          const auto report = theorem2_gap(n, forbidden, spex_bound);
          auto rec = info_record(id, "gap", n, report.r, config);
          rec.json["verdict"] = std::string(to_string(report.verdict));
          rec.json["notes"] = report.notes;
          rec.json["gap_report"] = gap_to_json(report);
          rec.verdict = report.verdict;
          rec.csv[1] = std::string(to_string(report.verdict));
          return rec;
        }
        const auto result = spex_scan(n, forbidden, spex_bound);
        auto rec = info_record(id, "spex", n, std::nullopt, config);
        rec.json["mu"] = spectral_to_json(result.mu);
        rec.json["witness_graph6"] = to_graph6(result.witness);
        rec.json["maximal_graphs"] = result.maximal_graphs;
        rec.json["nodes"] = result.nodes;
        rec.csv[2] = std::to_string(result.mu.lower());
        rec.csv[3] = std::to_string(result.mu.upper());
        return rec;
      });
      return finish(records, run, out);
    }

    if (biclique_cmd->parsed()) {
      auto config = base_config("biclique-scan", run);
      config["n"] = bic_n;
      config["p"] = bic_p;
      config["seed"] = bic_seed;
      config["count"] = bic_count;
      const double alarm = 4.0 * std::log(static_cast<double>(bic_n));
      const auto records = run_ordered(bic_count, run.threads, [&](std::size_t i) {
        const std::uint64_t seed = bic_seed + i;
        const Graph g = gnp(bic_n, bic_p, seed);
        std::ostringstream id;
        id << "gnp:n=" << bic_n << ",p=" << bic_p << ",seed=" << seed;
        auto rec = info_record(id.str(), "biclique-scan", bic_n, 2, config);
        attach_instance(rec.json, Instance{id.str(), g}, config);
        const auto result = max_balanced_biclique(g, run.budget);
        rec.json["seed"] = seed;
        rec.json["side"] = result.side;
        rec.json["exact"] = result.exact;
        rec.json["alarm_bound"] = alarm;
        if (static_cast<double>(result.side) > alarm) rec.json["notes"].push_back("side exceeds 4 ln n");
        if (!result.exact) rec.json["notes"].push_back("budget exhausted; side is a lower bound");
        rec.indeterminate = !result.exact;
        rec.csv[6] = std::to_string(result.side);
        return rec;
      });
      return finish(records, run, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sturan
