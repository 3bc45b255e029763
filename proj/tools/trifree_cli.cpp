// trifree: build, verify and sweep triangle-free overlay graphs and
// S4-free 3-graphs.
//
//   trifree build --n 10000 --eps 0.1 --seed 7 --out runs/
//   trifree verify runs/graph_n10000_s7.edges
//   trifree sweep --constructions overlay,edge-deletion --ns 2000,5000 --seeds 10

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trifree/baselines.hpp"
#include "trifree/construction.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/hypergraph.hpp"
#include "trifree/independence.hpp"
#include "trifree/params.hpp"
#include "trifree/serialize.hpp"
#include "trifree/sweep.hpp"
#include "trifree/triangles.hpp"

namespace {

using namespace trifree;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::int64_t n = 10000;
  double eps = 0.1;
  double beta = kDefaultBeta;
  std::optional<double> kappa;
  bool is_explicit = false;
  std::int64_t N = 0;
  double p = 0.0;
  std::int64_t k = 0;
};

void add_param_flags(CLI::App* app, ParamFlags& f) {
  app->add_option("--n", f.n, "number of vertices");
  app->add_option("--eps", f.eps, "epsilon");
  app->add_option("--beta", f.beta, "edge probability constant");
  app->add_option("--kappa", f.kappa, "independence target constant (default 1 + eps)");
  app->add_flag("--explicit", f.is_explicit, "take N, p, k verbatim");
  app->add_option("--N", f.N, "grid side (explicit mode)");
  app->add_option("--p", f.p, "base edge probability (explicit mode)");
  app->add_option("--k", f.k, "set size (explicit mode)");
}

Params make_params(const ParamFlags& f) {
  if (!f.is_explicit) return derive_params(f.n, f.eps, f.beta, f.kappa);
  if (f.N <= 0 || f.k <= 0) throw UsageError("--explicit needs --N, --p and --k");
  return explicit_params(f.n, f.N, f.p, f.k, f.eps);
}

FileFormat parse_format(const std::string& s) {
  if (s == "edgelist") return FileFormat::kEdgeList;
  if (s == "json") return FileFormat::kJson;
  throw UsageError("unknown format '" + s + "'");
}

std::string fmt(double x, int prec = 6) {
  if (std::isinf(x)) return "inf";
  std::ostringstream os;
  os.precision(prec);
  os << x;
  return os.str();
}

void print_params(const Params& p, std::uint64_t seed) {
  std::cout << "code_version  " << kCodeVersion << "\n"
            << "seed          " << seed << "\n"
            << "mode          " << to_string(p.mode) << "\n"
            << "n             " << p.n << "\n"
            << "N             " << p.N << (p.N_clamped ? "  (clamped to ceil(sqrt n))" : "")
            << "\n"
            << "p             " << fmt(p.p) << "\n"
            << "k             " << p.k << "\n"
            << "eps           " << fmt(p.epsilon) << "  eps1 " << fmt(p.eps1) << "  eps2 "
            << fmt(p.eps2) << "\n"
            << "t1 t2 t3      " << fmt(p.t1) << "  " << fmt(p.t2) << "  " << fmt(p.t3) << "\n";
}

void emit_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << "\n";
  } else {
    write_text_file(path, j.dump(1) + "\n");
  }
}

// ---------------------------------------------------------------- config

// Flat "key = value" lines; '#' starts a comment. Each key becomes --key
// value ahead of the command line, unless the command line sets it itself.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

std::vector<std::string> expand_config(CLI::App& app, const std::vector<std::string>& args) {
  if (args.size() < 2) return args;
  CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args[1]);
  } catch (const CLI::OptionNotFound&) {
    return args;
  }
  std::optional<std::string> config_path;
  std::set<std::string> given;
  for (std::size_t i = 2; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) continue;
    const std::string name = a.substr(0, a.find('='));
    given.insert(name);
    if (name == "--config") {
      if (a.find('=') != std::string::npos)
        config_path = a.substr(a.find('=') + 1);
      else if (i + 1 < args.size())
        config_path = args[i + 1];
    }
  }
  if (!config_path) return args;

  std::vector<std::string> out(args.begin(), args.begin() + 2);
  for (const auto& [key, value] : read_config(*config_path)) {
    const std::string flag = "--" + key;
    if (key == "config") throw UsageError("config files cannot include other configs");
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (!opt) throw UsageError(*config_path + ": unknown key '" + key + "' for " + args[1]);
    if (given.count(flag)) continue;
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1") out.push_back(flag);
      else if (value != "false" && value != "0")
        throw UsageError(*config_path + ": '" + key + "' expects true or false");
    } else {
      out.push_back(flag);
      out.push_back(value);
    }
  }
  out.insert(out.end(), args.begin() + 2, args.end());
  return out;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

int report_checks(const std::vector<Check>& checks, Json& report) {
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    std::printf("  %-28s %-4s %s\n", c.name.c_str(), c.ok ? "ok" : "FAIL", c.detail.c_str());
    arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    ok = ok && c.ok;
  }
  report["checks"] = arr;
  report["pass"] = ok;
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitViolation;
}

Json alpha_json(const IndependenceResult& r) {
  return {{"method", to_string(r.method)},
          {"value", r.value},
          {"optimal", r.optimal},
          {"work", r.work},
          {"certificate", r.certificate}};
}

void alpha_checks(const SimpleGraph& g, std::uint64_t budget, int exact_limit, bool triangle_free,
                  std::vector<Check>& checks, Json& report) {
  const IndependenceResult greedy = independence_greedy(g, 4, 0);
  const int delta = g.max_degree();
  report["alpha_greedy"] = alpha_json(greedy);
  report["max_degree"] = delta;
  std::printf("  alpha_greedy >= %d   max_degree %d\n", greedy.value, delta);
  checks.push_back({"greedy certificate", is_independent(g, greedy.certificate), ""});
  if (triangle_free)
    checks.push_back({"alpha >= max degree", greedy.value >= delta,
                      std::to_string(greedy.value) + " vs " + std::to_string(delta)});
  if (g.order() <= exact_limit) {
    const IndependenceResult ex = independence_exact(g, budget);
    report["alpha_exact"] = alpha_json(ex);
    std::printf("  alpha_exact   %s %d   (%llu nodes)\n", ex.optimal ? "=" : ">=", ex.value,
                static_cast<unsigned long long>(ex.work));
    checks.push_back({"exact certificate", is_independent(g, ex.certificate), ""});
    if (ex.optimal)
      checks.push_back({"greedy <= exact", greedy.value <= ex.value, ""});
  }
}

Json concentration_json(const ConcentrationReport& rep) {
  Json bounds = Json::array();
  for (const auto& b : rep.bounds)
    bounds.push_back({{"name", b.name},
                      {"two_sided", b.two_sided},
                      {"center", b.center},
                      {"allowed", b.allowed},
                      {"worst", b.worst},
                      {"violations", b.violations},
                      {"checked", b.checked},
                      {"pass", b.pass()}});
  return {{"eps2", rep.eps2},
          {"C", rep.C},
          {"max_codegree", rep.max_codegree},
          {"max_n3_codegree", rep.max_n3_codegree},
          {"max_projected_codegree_red", rep.max_projected_codegree_red},
          {"max_projected_codegree_blue", rep.max_projected_codegree_blue},
          {"bounds", bounds}};
}

void print_concentration(const ConcentrationReport& rep) {
  std::printf("  concentration (eps2 %s, C %s)\n", fmt(rep.eps2).c_str(), fmt(rep.C).c_str());
  std::printf("    %-34s %12s %12s %12s %10s\n", "bound", "center", "allowed", "worst",
              "violations");
  for (const auto& b : rep.bounds)
    std::printf("    %-34s %12s %12s %12s %6zu/%zu\n", b.name.c_str(),
                b.two_sided ? fmt(b.center).c_str() : "-", fmt(b.allowed).c_str(),
                fmt(b.worst).c_str(), b.violations, b.checked);
}

// Recomputes G from the stored base graphs and placement.
bool matches_rebuild(const PlacedGraph& g) {
  const ColoredProductGraph g1 = conormal_product(g.red_base, g.blue_base);
  const ColoredProductGraph g2 = apply_deletion_rule(g1, g.red_base, g.blue_base);
  return induce_final_graph(g2, g.placement).graph == g.graph;
}

int verify_graph(const SimpleGraph& g, std::uint64_t budget, int exact_limit, Json& report,
                 std::vector<Check>& checks) {
  const std::uint64_t tri = count_triangles(g);
  report["n"] = g.order();
  report["m"] = g.edge_count();
  report["triangles"] = tri;
  std::printf("  n %d   m %zu   triangles %llu\n", g.order(), g.edge_count(),
              static_cast<unsigned long long>(tri));
  checks.push_back({"triangle-free", tri == 0, std::to_string(tri) + " triangles"});
  alpha_checks(g, budget, exact_limit, tri == 0, checks, report);
  return 0;
}

int cmd_verify(const std::string& path, std::uint64_t budget, int exact_limit,
               const std::string& json_out) {
  const LoadedInstance inst = read_instance(path);
  Json report = {{"code_version", kCodeVersion}, {"path", path}};
  std::vector<Check> checks;

  if (const auto* g = std::get_if<SimpleGraph>(&inst)) {
    std::cout << "plain graph (no sidecar)\n";
    report["kind"] = "plain-graph";
    verify_graph(*g, budget, exact_limit, report, checks);
  } else if (const auto* pg = std::get_if<PlacedGraph>(&inst)) {
    print_params(pg->params(), pg->provenance.seed);
    report["kind"] = "graph";
    report["seed"] = pg->provenance.seed;
    report["params"] = to_json(pg->params());
    verify_graph(pg->graph, budget, exact_limit, report, checks);
    const bool inj = static_cast<int>(pg->placement.size()) == pg->graph.order() &&
                     is_injective(pg->placement, pg->side());
    checks.push_back({"placement injective", inj, ""});
    if (inj) checks.push_back({"matches rebuild from bases", matches_rebuild(*pg), ""});
    const ConcentrationReport rep = concentration_report(*pg);
    print_concentration(rep);
    report["concentration"] = concentration_json(rep);
  } else {
    const auto& h = std::get<HyperInstance>(inst);
    print_params(h.params, h.seed);
    report["kind"] = "hypergraph";
    report["seed"] = h.seed;
    report["params"] = to_json(h.params);
    report["n"] = h.reduced.order();
    report["m"] = h.reduced.edge_count();
    std::printf("  n %d   triples %zu   (before reduction %zu)\n", h.reduced.order(),
                h.reduced.edge_count(), h.h2_edges);
    checks.push_back({"S4-free", verify_s4_free(h.reduced), ""});
    checks.push_back({"placement injective",
                      static_cast<int>(h.placement.size()) == h.reduced.order() &&
                          is_injective(h.placement, static_cast<int>(h.params.N)),
                      ""});
    const auto links = link_summaries(h.reduced);
    std::uint64_t link_tri = 0;
    int max_alpha = 0;
    std::size_t max_edges = 0;
    for (const auto& l : links) {
      link_tri += l.triangles;
      max_alpha = std::max(max_alpha, l.alpha_greedy);
      max_edges = std::max(max_edges, l.edges);
    }
    std::printf("  links: max edges %zu   max alpha_greedy %d   triangles %llu\n", max_edges,
                max_alpha, static_cast<unsigned long long>(link_tri));
    report["links"] = {{"max_edges", max_edges},
                       {"max_alpha_greedy", max_alpha},
                       {"triangles", link_tri}};
  }
  const int code = report_checks(checks, report);
  if (!json_out.empty()) emit_json(report, json_out);
  return code;
}

// ---------------------------------------------------------------- alpha

const SimpleGraph& graph_of(const LoadedInstance& inst) {
  if (const auto* g = std::get_if<SimpleGraph>(&inst)) return *g;
  if (const auto* pg = std::get_if<PlacedGraph>(&inst)) return pg->graph;
  throw UsageError("alpha works on graphs; use verify for hypergraphs");
}

int cmd_alpha(const std::string& path, std::uint64_t budget, bool exact, int restarts,
              std::uint64_t seed, const std::string& cert_out, const std::string& json_out) {
  const LoadedInstance inst = read_instance(path);
  const SimpleGraph& g = graph_of(inst);
  Json report = {{"code_version", kCodeVersion}, {"path", path}, {"n", g.order()}};
  if (const auto* pg = std::get_if<PlacedGraph>(&inst)) {
    report["seed"] = pg->provenance.seed;
    report["params"] = to_json(pg->params());
  }
  const IndependenceResult r =
      exact ? independence_exact(g, budget) : independence_greedy(g, restarts, seed);
  const double scale = std::sqrt(g.order() * std::log(static_cast<double>(g.order())));
  report["result"] = alpha_json(r);
  report["ratio"] = g.order() > 1 ? r.value / scale : 0.0;
  std::printf("%s alpha %s %d   ratio alpha/sqrt(n ln n) %s   work %llu\n",
              to_string(r.method).c_str(), r.optimal ? "=" : ">=", r.value,
              fmt(report["ratio"].get<double>()).c_str(), static_cast<unsigned long long>(r.work));
  if (!cert_out.empty()) {
    std::string text;
    for (int v : r.certificate) text += std::to_string(v + 1) + "\n";
    write_text_file(cert_out, text);
  }
  if (!json_out.empty()) emit_json(report, json_out);
  return is_independent(g, r.certificate) ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- diagnose

int cmd_diagnose(const std::string& path, std::optional<double> eps2, int random_sets,
                 int adversarial, std::uint64_t seed, const std::string& json_out) {
  const LoadedInstance inst = read_instance(path);
  const auto* pg = std::get_if<PlacedGraph>(&inst);
  if (!pg) throw UsageError("diagnose needs a built graph instance with its sidecar");
  const Params& params = pg->params();
  print_params(params, pg->provenance.seed);

  Json report = {{"code_version", kCodeVersion},
                 {"seed", pg->provenance.seed},
                 {"params", to_json(params)}};
  const ConcentrationReport rep = concentration_report(*pg, eps2);
  print_concentration(rep);
  report["concentration"] = concentration_json(rep);

  if (params.k > pg->graph.order()) {
    std::cout << "  k exceeds n; set classification skipped\n";
  } else {
    Rng rng = child_stream(seed, "diagnose/sets");
    std::vector<std::vector<int>> sets;
    for (int i = 0; i < random_sets; ++i)
      sets.push_back(random_k_set(pg->graph.order(), static_cast<int>(params.k), rng));
    for (auto& s : adversarial_sets(*pg, adversarial, seed)) sets.push_back(std::move(s));

    Json rows = Json::array();
    bool ok = true;
    std::printf("  %-5s %-11s %8s %8s %8s %8s %8s  %s\n", "set", "kind", "closed", "closed+",
                "open", "open+", "|H|/|L|", "|M|/|S|");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const SetClassification c = classify_sets(*pg, sets[i]);
      const bool identities = c.closed + c.open == c.pairs && c.closed_plus + c.open_plus == c.pairs &&
                              c.closed_plus <= c.closed;
      const bool open_plus = edges_are_open_plus(*pg, sets[i]);
      ok = ok && identities && open_plus;
      const char* kind = i < static_cast<std::size_t>(random_sets) ? "random" : "adversarial";
      std::printf("  %-5zu %-11s %8zu %8zu %8zu %8zu %4zu/%-4zu %4zu/%-4zu%s\n", i, kind, c.closed,
                  c.closed_plus, c.open, c.open_plus, c.class_count[0], c.class_count[1],
                  c.class_count[2], c.class_count[3], identities && open_plus ? "" : "  VIOLATION");
      rows.push_back({{"kind", kind},
                      {"closed", c.closed},
                      {"closed_plus", c.closed_plus},
                      {"open", c.open},
                      {"open_plus", c.open_plus},
                      {"class_count", c.class_count},
                      {"binom_sum", c.binom_sum},
                      {"closed_union", c.closed_union},
                      {"identities_hold", identities},
                      {"edges_open_plus", open_plus}});
    }
    report["sets"] = rows;
    const double fk = f_function(params.k, params.k, params);
    std::printf("  f(k, k) = %s\n", fmt(fk, 12).c_str());
    report["f_kk"] = fk;
    if (!ok) {
      if (!json_out.empty()) emit_json(report, json_out);
      std::cout << "FAIL\n";
      return kExitViolation;
    }
  }
  if (!json_out.empty()) emit_json(report, json_out);
  std::cout << "done\n";
  return kExitOk;
}

// ---------------------------------------------------------------- build / hyper

std::vector<std::uint64_t> seed_list(std::uint64_t seed, int seeds) {
  std::vector<std::uint64_t> out;
  for (int s = 0; s < std::max(1, seeds); ++s) out.push_back(seed + static_cast<std::uint64_t>(s));
  return out;
}

int cmd_build(const ParamFlags& pf, std::uint64_t seed, int seeds, const std::string& out_dir,
              const std::string& format) {
  const Params params = make_params(pf);
  const FileFormat ff = parse_format(format);
  for (std::uint64_t s : seed_list(seed, seeds)) {
    const PlacedGraph g = build(params, s);
    const std::string stem = "graph_n" + std::to_string(params.n) + "_s" + std::to_string(s);
    const WrittenFiles files = write_instance(g, out_dir, stem, ff);
    const auto& st = g.provenance.stats;
    std::printf("seed %llu: n %lld  N %lld  m %zu  (G1 %zu, G2 %zu, deleted %zu)  -> %s\n",
                static_cast<unsigned long long>(s), static_cast<long long>(params.n),
                static_cast<long long>(params.N), g.graph.edge_count(), st.g1_edges, st.g2_edges,
                st.edges_deleted,
                (files.data.empty() ? files.sidecar : files.data).string().c_str());
  }
  return kExitOk;
}

int cmd_hyper(const ParamFlags& pf, std::uint64_t seed, int seeds, const std::string& out_dir,
              const std::string& format) {
  const Params params = make_params(pf);
  const FileFormat ff = parse_format(format);
  int code = kExitOk;
  for (std::uint64_t s : seed_list(seed, seeds)) {
    const HyperInstance h = build_hyper(params, s);
    const bool s4_free = verify_s4_free(h.reduced);
    const std::string stem = "hyper_n" + std::to_string(params.n) + "_s" + std::to_string(s);
    const WrittenFiles files = write_instance(h, out_dir, stem, ff);
    std::printf(
        "seed %llu: n %lld  N %lld  triples %zu (H2 %zu; rejected r/b %zu/%zu; removed r/b "
        "%zu/%zu)  S4-free %s  -> %s\n",
        static_cast<unsigned long long>(s), static_cast<long long>(params.n),
        static_cast<long long>(params.N), h.reduced.edge_count(), h.h2_edges,
        h.reduction.red_rejected, h.reduction.blue_rejected, h.reduction.red_removed,
        h.reduction.blue_removed, s4_free ? "yes" : "NO",
        (files.data.empty() ? files.sidecar : files.data).string().c_str());
    if (!s4_free) code = kExitViolation;
  }
  return code;
}

// ---------------------------------------------------------------- sweep

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_sweep(SweepConfig cfg, const std::string& constructions, const std::string& ns,
              const std::string& out) {
  cfg.constructions.clear();
  for (const auto& c : split_list(constructions)) {
    try {
      cfg.constructions.push_back(construction_from_string(c));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  cfg.ns.clear();
  for (const auto& n : split_list(ns)) {
    try {
      cfg.ns.push_back(std::stoi(n));
    } catch (const std::exception&) {
      throw UsageError("bad n value '" + n + "'");
    }
  }
  if (cfg.constructions.empty() || cfg.ns.empty())
    throw UsageError("sweep needs at least one construction and one n");
  const std::string csv = sweep_csv(run_sweep(cfg));
  if (out.empty() || out == "-") {
    std::cout << csv;
  } else {
    write_text_file(out, csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-free overlay graphs and S4-free 3-graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kCodeVersion);

  std::string config;
  ParamFlags pf;
  std::uint64_t seed = 1;
  int seeds = 1;
  std::string out_dir = ".";
  std::string format = "edgelist";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "flat key = value file; command-line flags win");
  };

  CLI::App* build_cmd = app.add_subcommand("build", "build overlay graph instances");
  CLI::App* hyper_cmd = app.add_subcommand("hyper", "build S4-free 3-graph instances");
  for (CLI::App* sub : {build_cmd, hyper_cmd}) {
    add_common(sub);
    add_param_flags(sub, pf);
    sub->add_option("--seed", seed, "first seed");
    sub->add_option("--seeds", seeds, "number of consecutive seeds");
    sub->add_option("--out", out_dir, "output directory (must exist)");
    sub->add_option("--format", format, "edgelist or json")
        ->check(CLI::IsMember({"edgelist", "json"}));
  }

  std::string path;
  std::uint64_t budget = kDefaultNodeBudget;
  int exact_limit = 300;
  std::string json_out;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check the hard invariants of an instance");
  add_common(verify_cmd);
  verify_cmd->add_option("path", path, "edge list, triple list or json instance")->required();
  verify_cmd->add_option("--budget", budget, "exact solver node budget");
  verify_cmd->add_option("--exact-limit", exact_limit, "run the exact solver when n <= this");
  verify_cmd->add_option("--json", json_out, "also write the report as json ('-' for stdout)");

  bool exact = false;
  int restarts = 4;
  std::string cert_out;
  CLI::App* alpha_cmd = app.add_subcommand("alpha", "independence number bounds");
  add_common(alpha_cmd);
  alpha_cmd->add_option("path", path, "graph instance")->required();
  alpha_cmd->add_flag("--exact", exact, "branch and bound instead of greedy");
  alpha_cmd->add_option("--budget", budget, "exact solver node budget");
  alpha_cmd->add_option("--restarts", restarts, "greedy restarts");
  alpha_cmd->add_option("--seed", seed, "greedy tie-break seed");
  alpha_cmd->add_option("--certificate", cert_out, "write the independent set (1-based)");
  alpha_cmd->add_option("--json", json_out, "also write the report as json ('-' for stdout)");

  std::optional<double> eps2;
  int random_sets = 20;
  int adversarial = 6;
  CLI::App* diag_cmd = app.add_subcommand("diagnose", "concentration and k-set statistics");
  add_common(diag_cmd);
  diag_cmd->add_option("path", path, "graph instance with sidecar")->required();
  diag_cmd->add_option("--eps2", eps2, "override the concentration window constant");
  diag_cmd->add_option("--sets", random_sets, "random k-sets to classify");
  diag_cmd->add_option("--adversarial", adversarial, "structured k-sets to classify");
  diag_cmd->add_option("--seed", seed, "set sampling seed");
  diag_cmd->add_option("--json", json_out, "also write the report as json ('-' for stdout)");

  SweepConfig sweep;
  std::string constructions = "overlay";
  std::string ns = "1000";
  std::string sweep_out;
  int sweep_seeds = 1;
  std::uint64_t sweep_seed = 1;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "CSV rows over constructions x n x seeds");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--constructions", constructions, "overlay,edge-deletion,process");
  sweep_cmd->add_option("--ns", ns, "comma-separated vertex counts");
  sweep_cmd->add_option("--seeds", sweep_seeds, "seeds per (construction, n)");
  sweep_cmd->add_option("--seed", sweep_seed, "first seed");
  sweep_cmd->add_option("--eps", sweep.eps, "epsilon");
  sweep_cmd->add_option("--beta", sweep.beta, "edge probability constant");
  sweep_cmd->add_option("--kappa", sweep.kappa, "independence target constant");
  sweep_cmd->add_option("--baseline-c", sweep.baseline_c, "edge-deletion p = c / sqrt(n)");
  sweep_cmd->add_option("--restarts", sweep.greedy_restarts, "greedy restarts");
  sweep_cmd->add_flag("--exact", sweep.exact, "also run the exact solver");
  sweep_cmd->add_option("--budget", sweep.budget, "exact solver node budget");
  sweep_cmd->add_flag("--diagnostics", sweep.diagnostics, "concentration bounds for overlay rows");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads");
  sweep_cmd->add_option("--out", sweep_out, "CSV path (default stdout)");

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(app, args);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(pf, seed, seeds, out_dir, format);
    if (hyper_cmd->parsed()) return cmd_hyper(pf, seed, seeds, out_dir, format);
    if (verify_cmd->parsed()) return cmd_verify(path, budget, exact_limit, json_out);
    if (alpha_cmd->parsed())
      return cmd_alpha(path, budget, exact, restarts, seed, cert_out, json_out);
    if (diag_cmd->parsed())
      return cmd_diagnose(path, eps2, random_sets, adversarial, seed, json_out);
    if (sweep_cmd->parsed()) {
      sweep.seeds = sweep_seeds;
      sweep.base_seed = sweep_seed;
      return cmd_sweep(sweep, constructions, ns, sweep_out);
    }
  } catch (const ParamError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
