#include "trifree/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "trifree/baselines.hpp"
#include "trifree/construction.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/independence.hpp"
#include "trifree/params.hpp"
#include "trifree/triangles.hpp"

namespace trifree {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::kOverlay:
      return "overlay";
    case Construction::kEdgeDeletion:
      return "edge-deletion";
    case Construction::kProcess:
      return "process";
  }
  return "?";
}

Construction construction_from_string(const std::string& s) {
  if (s == "overlay") return Construction::kOverlay;
  if (s == "edge-deletion") return Construction::kEdgeDeletion;
  if (s == "process") return Construction::kProcess;
  throw std::invalid_argument("unknown construction '" + s + "'");
}

SweepRow run_cell(const SweepConfig& config, Construction c, int n, std::uint64_t seed) {
  SweepRow row;
  row.construction = c;
  row.n = n;
  row.seed = seed;

  SimpleGraph g;
  switch (c) {
    case Construction::kOverlay: {
      const Params params = derive_params(n, config.eps, config.beta, config.kappa);
      PlacedGraph inst = build(params, seed);
      const auto& s = inst.provenance.stats;
      row.p = params.p;
      row.loss = s.g2_edges ? static_cast<double>(s.edges_deleted) / static_cast<double>(s.g2_edges)
                            : 0.0;
      if (config.diagnostics) {
        const ConcentrationReport rep = concentration_report(inst);
        int failed = 0;
        for (const auto& b : rep.bounds) failed += b.pass() ? 0 : 1;
        row.bounds_failed = failed;
      }
      g = std::move(inst.graph);
      break;
    }
    case Construction::kEdgeDeletion: {
      row.p = std::min(1.0, config.baseline_c / std::sqrt(static_cast<double>(n)));
      EdgeDeletionResult r = edge_deletion_baseline(n, row.p, seed);
      row.loss = r.loss();
      g = std::move(r.graph);
      break;
    }
    case Construction::kProcess: {
      ProcessResult r = triangle_free_process(n, seed);
      g = std::move(r.graph);
      break;
    }
  }

  const double scale = std::sqrt(n * std::log(static_cast<double>(n)));
  row.edges = g.edge_count();
  row.max_degree = g.max_degree();
  row.triangles = count_triangles(g);
  row.density = n > 1 ? static_cast<double>(row.edges) / (0.5 * n * (n - 1.0)) : 0.0;
  row.alpha_greedy = independence_greedy(g, config.greedy_restarts, seed).value;
  if (config.exact) {
    const IndependenceResult ex = independence_exact(g, config.budget);
    row.alpha_exact = ex.value;
    row.exact_optimal = ex.optimal;
  }
  row.alpha_ratio = row.alpha_greedy / scale;
  row.delta_ratio = row.max_degree / scale;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  struct Task {
    Construction c;
    int n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (Construction c : config.constructions)
    for (int n : config.ns)
      for (int s = 0; s < config.seeds; ++s)
        tasks.push_back({c, n, config.base_seed + static_cast<std::uint64_t>(s)});

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = run_cell(config, tasks[i].c, tasks[i].n, tasks[i].seed);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

std::string sweep_csv_header() {
  return "construction,n,seed,edges,max_degree,alpha_greedy,alpha_exact,exact_optimal,"
         "alpha_ratio,delta_ratio,density,p,loss,triangles,bounds_failed";
}

std::string sweep_csv_row(const SweepRow& r) {
  char num[256];
  std::snprintf(num, sizeof num, "%.17g,%.17g,%.17g,%.17g,%.17g", r.alpha_ratio, r.delta_ratio,
                r.density, r.p, r.loss);
  std::string out = to_string(r.construction) + "," + std::to_string(r.n) + "," +
                    std::to_string(r.seed) + "," + std::to_string(r.edges) + "," +
                    std::to_string(r.max_degree) + "," + std::to_string(r.alpha_greedy) + ",";
  out += r.alpha_exact ? std::to_string(*r.alpha_exact) : "";
  out += ",";
  out += r.alpha_exact ? (r.exact_optimal ? "1" : "0") : "";
  out += ",";
  out += num;
  out += "," + std::to_string(r.triangles) + ",";
  out += r.bounds_failed ? std::to_string(*r.bounds_failed) : "";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepSchema) + "\n" + sweep_csv_header() + "\n";
  for (const auto& r : rows) out += sweep_csv_row(r) + "\n";
  return out;
}

}  // namespace trifree
