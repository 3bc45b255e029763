#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trifree {

enum class Construction { kOverlay, kEdgeDeletion, kProcess };
std::string to_string(Construction c);
Construction construction_from_string(const std::string& s);

struct SweepConfig {
  std::vector<Construction> constructions{Construction::kOverlay};
  std::vector<int> ns{1000};
  int seeds = 1;
  std::uint64_t base_seed = 1;  // cell seeds are base_seed + s
  double eps = 0.1;
  double beta = 0.5;
  std::optional<double> kappa;
  double baseline_c = 0.3;  // edge-deletion p = c / sqrt(n)
  int greedy_restarts = 4;
  bool exact = false;  // also run the exact solver (budgeted)
  std::uint64_t budget = 10'000'000;
  bool diagnostics = false;  // concentration report for overlay rows
  int threads = 1;
};

struct SweepRow {
  Construction construction = Construction::kOverlay;
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  int max_degree = 0;
  int alpha_greedy = 0;
  std::optional<int> alpha_exact;
  bool exact_optimal = false;
  double alpha_ratio = 0.0;  // alpha_greedy / sqrt(n ln n)
  double delta_ratio = 0.0;  // max_degree / sqrt(n ln n)
  double density = 0.0;      // edges / C(n, 2)
  double p = 0.0;            // construction edge probability
  double loss = 0.0;         // fraction of sampled edges deleted (0 for the process)
  std::size_t triangles = 0;
  std::optional<int> bounds_failed;  // of the seven concentration bounds
};

SweepRow run_cell(const SweepConfig& config, Construction c, int n, std::uint64_t seed);

// Rows ordered by (construction, n, seed) in config order, independent of
// the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr const char* kSweepSchema = "# trifree sweep schema v1";
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace trifree
