#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "trifree/bitset.hpp"
#include "trifree/params.hpp"
#include "trifree/simple_graph.hpp"

namespace trifree {

inline constexpr const char* kCodeVersion = "trifree-0.3.0";

// Grid position (row in V_R, column in V_B), 0-based.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// placement[v] is the cell of vertex v.
using Placement = std::vector<Cell>;

using ColorFlags = std::uint8_t;
inline constexpr ColorFlags kNoColor = 0;
inline constexpr ColorFlags kRed = 1;
inline constexpr ColorFlags kBlue = 2;
inline constexpr ColorFlags kBothColors = kRed | kBlue;

enum class Side { kRed, kBlue };

// G_R or G_B: simple graph on an ordered vertex set. The order defines the
// upper neighborhoods N+(v) = {w in N(v) : w > v}.
class BaseGraph {
 public:
  BaseGraph() = default;
  BaseGraph(Side side, int order);

  Side side() const { return side_; }
  int order() const { return static_cast<int>(rows_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_.test(u, v); }
  const Bitset& neighbor_set(int v) const { return rows_.row(v); }
  std::vector<int> neighbors(int v) const;
  std::vector<int> upper_neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(rows_.row(v).count()); }
  std::size_t edge_count() const { return edge_count_; }
  std::vector<Edge> edges() const;

  bool operator==(const BaseGraph&) const = default;

 private:
  Side side_ = Side::kRed;
  BitMatrix rows_;
  std::size_t edge_count_ = 0;
};

// Pairwise closure relations of one base graph, diagonal included:
//   common(i, k)      <=> some m is adjacent to both i and k
//   common_plus(i, k) <=> some m < min(i, k) is adjacent to both
// For i == k these reduce to deg(i) > 0 and "i has a smaller neighbor".
struct ClosureTable {
  BitMatrix common;
  BitMatrix common_plus;
};

ClosureTable closure_table(const BaseGraph& g);

struct ProductOptions {
  // G1/G2 are stored as packed bit matrices over cells when N^2 is at most
  // this; above it only the base graphs and deletion tables are kept and
  // flags are evaluated per queried pair.
  std::size_t dense_cell_cap = 4096;
};

// G1 = G_R * G_B with per-edge red/blue flags, and after the deletion rule G2.
// Cells are indexed row * N + col.
class ColoredProductGraph {
 public:
  int side() const { return red_.order(); }
  int cell_count() const { return side() * side(); }
  int index(Cell c) const { return c.row * side() + c.col; }
  Cell cell(int idx) const { return {idx / side(), idx % side()}; }

  ColorFlags flags(Cell a, Cell b) const;
  bool adjacent(Cell a, Cell b) const { return flags(a, b) != kNoColor; }

  bool is_dense() const { return dense_; }
  bool deletion_applied() const { return deleted_; }
  const BaseGraph& red_base() const { return red_; }
  const BaseGraph& blue_base() const { return blue_; }

  // Calls f(a, b, flags) exactly once per edge, with index(a) < index(b).
  template <typename F>
  void for_each_edge(F&& f) const;

  struct Counts {
    std::size_t edges = 0;
    std::size_t red_flags = 0;
    std::size_t blue_flags = 0;
    std::size_t dual_flags = 0;
  };
  Counts counts() const;

  // Underlying simple graph on cell indices.
  SimpleGraph to_simple_graph() const;

 private:
  friend ColoredProductGraph conormal_product(const BaseGraph&, const BaseGraph&,
                                              ProductOptions);
  friend ColoredProductGraph apply_deletion_rule(const ColoredProductGraph&, const BaseGraph&,
                                                 const BaseGraph&);

  ColorFlags lazy_flags(Cell a, Cell b) const;

  BaseGraph red_;
  BaseGraph blue_;
  bool deleted_ = false;
  ClosureTable red_closure_;
  ClosureTable blue_closure_;
  bool dense_ = false;
  BitMatrix dense_red_;
  BitMatrix dense_blue_;
};

struct BuildStats {
  std::size_t red_base_edges = 0;
  std::size_t blue_base_edges = 0;
  std::size_t g1_edges = 0;
  std::size_t g1_red_flags = 0;
  std::size_t g1_blue_flags = 0;
  std::size_t g2_edges = 0;
  std::size_t g2_red_flags = 0;
  std::size_t g2_blue_flags = 0;
  std::size_t red_flags_deleted = 0;
  std::size_t blue_flags_deleted = 0;
  std::size_t edges_deleted = 0;
  std::size_t final_edges = 0;
  bool dense_product = false;

  bool operator==(const BuildStats&) const = default;
};

struct Provenance {
  Params params;
  std::uint64_t seed = 0;
  BuildStats stats;

  bool operator==(const Provenance&) const = default;
};

// Final graph G on n vertices together with everything needed to re-derive
// it: the base graphs, the injection phi, and the build provenance.
struct PlacedGraph {
  BaseGraph red_base;
  BaseGraph blue_base;
  Placement placement;
  SimpleGraph graph;
  Provenance provenance;

  int side() const { return red_base.order(); }
  const Params& params() const { return provenance.params; }

  bool operator==(const PlacedGraph&) const = default;
};

bool is_injective(const Placement& placement, int side);

std::pair<BaseGraph, BaseGraph> sample_base_graphs(const Params& params, std::uint64_t seed);

ColoredProductGraph conormal_product(const BaseGraph& gr, const BaseGraph& gb,
                                     ProductOptions options = {});

// Removes red flags inside C(X+_{r_i}, 2) and C(X_{b_i}, 2), blue flags inside
// C(X_{r_i}, 2) and C(X+_{b_i}, 2); an edge dies when it has no flag left.
ColoredProductGraph apply_deletion_rule(const ColoredProductGraph& g1, const BaseGraph& gr,
                                        const BaseGraph& gb);

Placement sample_injection(const Params& params, std::uint64_t seed);

PlacedGraph induce_final_graph(const ColoredProductGraph& g2, const Placement& placement);

PlacedGraph build(const Params& params, std::uint64_t seed, ProductOptions options = {});

template <typename F>
void ColoredProductGraph::for_each_edge(F&& f) const {
  const int n = side();
  // Red candidates: rows adjacent in G_R. Blue candidates whose rows are
  // also red-adjacent were already visited.
  for (const auto& [i, k] : red_.edges()) {
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const Cell a{i, j}, b{k, l};
        if (const ColorFlags c = flags(a, b)) f(a, b, c);
      }
  }
  for (const auto& [j, l] : blue_.edges()) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (i != k && red_.adjacent(i, k)) continue;
        Cell a{i, j}, b{k, l};
        if (index(a) > index(b)) std::swap(a, b);
        if (const ColorFlags c = flags(a, b)) f(a, b, c);
      }
  }
}

}  // namespace trifree
