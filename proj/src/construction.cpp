#include "trifree/construction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "trifree/rng.hpp"

namespace trifree {

BaseGraph::BaseGraph(Side side, int order) : side_(side), rows_(static_cast<std::size_t>(order)) {}

void BaseGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("BaseGraph: self-loop");
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::out_of_range("BaseGraph: vertex out of range");
  if (rows_.test(u, v)) return;
  rows_.set_symmetric(u, v);
  ++edge_count_;
}

std::vector<int> BaseGraph::neighbors(int v) const {
  std::vector<int> out;
  rows_.row(v).for_each([&](std::size_t w) { out.push_back(static_cast<int>(w)); });
  return out;
}

std::vector<int> BaseGraph::upper_neighbors(int v) const {
  std::vector<int> out;
  rows_.row(v).for_each([&](std::size_t w) {
    if (static_cast<int>(w) > v) out.push_back(static_cast<int>(w));
  });
  return out;
}

std::vector<Edge> BaseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    rows_.row(u).for_each([&](std::size_t w) {
      if (static_cast<int>(w) > u) out.emplace_back(u, static_cast<int>(w));
    });
  return out;
}

ClosureTable closure_table(const BaseGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  ClosureTable t{BitMatrix(n), BitMatrix(n)};
  for (int m = 0; m < g.order(); ++m) {
    const auto nbrs = g.neighbors(m);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a; b < nbrs.size(); ++b) {
        t.common.set_symmetric(nbrs[a], nbrs[b]);
        if (nbrs[a] > m) t.common_plus.set_symmetric(nbrs[a], nbrs[b]);
      }
  }
  return t;
}

ColorFlags ColoredProductGraph::lazy_flags(Cell a, Cell b) const {
  ColorFlags c = kNoColor;
  if (a.row != b.row && red_.adjacent(a.row, b.row)) {
    if (!deleted_ || (!red_closure_.common_plus.test(a.row, b.row) &&
                      !blue_closure_.common.test(a.col, b.col)))
      c |= kRed;
  }
  if (a.col != b.col && blue_.adjacent(a.col, b.col)) {
    if (!deleted_ || (!red_closure_.common.test(a.row, b.row) &&
                      !blue_closure_.common_plus.test(a.col, b.col)))
      c |= kBlue;
  }
  return c;
}

ColorFlags ColoredProductGraph::flags(Cell a, Cell b) const {
  if (!dense_) return lazy_flags(a, b);
  const auto ia = static_cast<std::size_t>(index(a));
  const auto ib = static_cast<std::size_t>(index(b));
  ColorFlags c = kNoColor;
  if (dense_red_.test(ia, ib)) c |= kRed;
  if (dense_blue_.test(ia, ib)) c |= kBlue;
  return c;
}

ColoredProductGraph::Counts ColoredProductGraph::counts() const {
  Counts out;
  for_each_edge([&](Cell, Cell, ColorFlags c) {
    ++out.edges;
    if (c & kRed) ++out.red_flags;
    if (c & kBlue) ++out.blue_flags;
    if (c == kBothColors) ++out.dual_flags;
  });
  return out;
}

SimpleGraph ColoredProductGraph::to_simple_graph() const {
  std::vector<Edge> edges;
  for_each_edge([&](Cell a, Cell b, ColorFlags) { edges.emplace_back(index(a), index(b)); });
  return SimpleGraph(cell_count(), edges);
}

bool is_injective(const Placement& placement, int side) {
  std::vector<char> used(static_cast<std::size_t>(side) * side, 0);
  for (const Cell& c : placement) {
    if (c.row < 0 || c.col < 0 || c.row >= side || c.col >= side) return false;
    auto& u = used[static_cast<std::size_t>(c.row) * side + c.col];
    if (u) return false;
    u = 1;
  }
  return true;
}

namespace {

BaseGraph sample_gnp(Side side, int order, double p, Rng& rng) {
  BaseGraph g(side, order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (bernoulli(rng, p)) g.add_edge(u, v);
  return g;
}

}  // namespace

std::pair<BaseGraph, BaseGraph> sample_base_graphs(const Params& params, std::uint64_t seed) {
  const int n = static_cast<int>(params.N);
  Rng red_rng = child_stream(seed, "base/red");
  Rng blue_rng = child_stream(seed, "base/blue");
  return {sample_gnp(Side::kRed, n, params.p, red_rng),
          sample_gnp(Side::kBlue, n, params.p, blue_rng)};
}

ColoredProductGraph conormal_product(const BaseGraph& gr, const BaseGraph& gb,
                                     ProductOptions options) {
  if (gr.side() != Side::kRed || gb.side() != Side::kBlue)
    throw std::invalid_argument("conormal_product: expects (red, blue) base graphs");
  if (gr.order() != gb.order())
    throw std::invalid_argument("conormal_product: base graph orders differ");

  ColoredProductGraph g;
  g.red_ = gr;
  g.blue_ = gb;
  const auto cells = static_cast<std::size_t>(gr.order()) * gr.order();
  g.dense_ = cells <= options.dense_cell_cap;
  if (!g.dense_) return g;

  g.dense_red_ = BitMatrix(cells);
  g.dense_blue_ = BitMatrix(cells);
  // Fill through the lazy rule while deleted_ is still false.
  g.dense_ = false;
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = a + 1; b < cells; ++b) {
      const ColorFlags c = g.lazy_flags(g.cell(static_cast<int>(a)), g.cell(static_cast<int>(b)));
      if (c & kRed) g.dense_red_.set_symmetric(a, b);
      if (c & kBlue) g.dense_blue_.set_symmetric(a, b);
    }
  g.dense_ = true;
  return g;
}

namespace {

// Clears every cell pair joining row i to row k (resp. column j to column l).
void clear_row_box(BitMatrix& m, int side, int i, int k) {
  for (int j = 0; j < side; ++j)
    for (int l = 0; l < side; ++l)
      m.reset_symmetric(static_cast<std::size_t>(i) * side + j,
                        static_cast<std::size_t>(k) * side + l);
}

void clear_col_box(BitMatrix& m, int side, int j, int l) {
  for (int i = 0; i < side; ++i)
    for (int k = 0; k < side; ++k) {
      const auto a = static_cast<std::size_t>(i) * side + j;
      const auto b = static_cast<std::size_t>(k) * side + l;
      if (a != b) m.reset_symmetric(a, b);
    }
}

}  // namespace

ColoredProductGraph apply_deletion_rule(const ColoredProductGraph& g1, const BaseGraph& gr,
                                        const BaseGraph& gb) {
  if (g1.deletion_applied())
    throw std::invalid_argument("apply_deletion_rule: input already has deletions applied");
  if (!(g1.red_base() == gr) || !(g1.blue_base() == gb))
    throw std::invalid_argument("apply_deletion_rule: g1 was not built from these base graphs");

  ColoredProductGraph g2 = g1;
  g2.deleted_ = true;
  g2.red_closure_ = closure_table(gr);
  g2.blue_closure_ = closure_table(gb);
  if (!g2.dense_) return g2;

  // Per-vertex sweep over the boxes X_v, X+_v.
  const int n = g2.side();
  for (int m = 0; m < n; ++m) {
    const auto red_all = gr.neighbors(m);
    const auto red_up = gr.upper_neighbors(m);
    const auto blue_all = gb.neighbors(m);
    const auto blue_up = gb.upper_neighbors(m);
    // Red flags: C(X+_{r_m}, 2) and C(X_{b_m}, 2). Red edges never join cells
    // of one row, so only distinct row pairs matter in the row box.
    for (std::size_t a = 0; a < red_up.size(); ++a)
      for (std::size_t b = a + 1; b < red_up.size(); ++b)
        clear_row_box(g2.dense_red_, n, red_up[a], red_up[b]);
    for (std::size_t a = 0; a < blue_all.size(); ++a)
      for (std::size_t b = a; b < blue_all.size(); ++b)
        clear_col_box(g2.dense_red_, n, blue_all[a], blue_all[b]);
    // Blue flags: C(X_{r_m}, 2) and C(X+_{b_m}, 2).
    for (std::size_t a = 0; a < red_all.size(); ++a)
      for (std::size_t b = a; b < red_all.size(); ++b)
        clear_row_box(g2.dense_blue_, n, red_all[a], red_all[b]);
    for (std::size_t a = 0; a < blue_up.size(); ++a)
      for (std::size_t b = a + 1; b < blue_up.size(); ++b)
        clear_col_box(g2.dense_blue_, n, blue_up[a], blue_up[b]);
  }
  return g2;
}

Placement sample_injection(const Params& params, std::uint64_t seed) {
  const std::int64_t cells = params.N * params.N;
  if (cells < params.n) throw ParamError("sample_injection: N^2 < n");
  Rng rng = child_stream(seed, "phi");
  std::vector<int> pool(static_cast<std::size_t>(cells));
  std::iota(pool.begin(), pool.end(), 0);
  // Partial Fisher-Yates: the first n slots are a uniform ordered n-subset.
  for (std::int64_t i = 0; i < params.n; ++i) {
    const auto j = i + static_cast<std::int64_t>(uniform_below(rng, cells - i));
    std::swap(pool[i], pool[j]);
  }
  Placement out(static_cast<std::size_t>(params.n));
  const int side = static_cast<int>(params.N);
  for (std::int64_t v = 0; v < params.n; ++v) out[v] = {pool[v] / side, pool[v] % side};
  return out;
}

PlacedGraph induce_final_graph(const ColoredProductGraph& g2, const Placement& placement) {
  const int side = g2.side();
  if (!is_injective(placement, side))
    throw std::invalid_argument("induce_final_graph: placement is not an injection into the grid");

  std::vector<std::vector<int>> row_fiber(side), col_fiber(side);
  for (int v = 0; v < static_cast<int>(placement.size()); ++v) {
    row_fiber[placement[v].row].push_back(v);
    col_fiber[placement[v].col].push_back(v);
  }
  std::vector<Edge> edges;
  const BaseGraph& gr = g2.red_base();
  const BaseGraph& gb = g2.blue_base();
  for (int u = 0; u < static_cast<int>(placement.size()); ++u) {
    const Cell cu = placement[u];
    gr.neighbor_set(cu.row).for_each([&](std::size_t r) {
      for (int w : row_fiber[r])
        if (w > u && g2.adjacent(cu, placement[w])) edges.emplace_back(u, w);
    });
    gb.neighbor_set(cu.col).for_each([&](std::size_t c) {
      for (int w : col_fiber[c])
        if (w > u && !gr.adjacent(cu.row, placement[w].row) && g2.adjacent(cu, placement[w]))
          edges.emplace_back(u, w);
    });
  }
  PlacedGraph out;
  out.red_base = gr;
  out.blue_base = gb;
  out.placement = placement;
  out.graph = SimpleGraph(static_cast<int>(placement.size()), edges);
  return out;
}

PlacedGraph build(const Params& params, std::uint64_t seed, ProductOptions options) {
  validate(params);
  auto [gr, gb] = sample_base_graphs(params, seed);
  const ColoredProductGraph g1 = conormal_product(gr, gb, options);
  const ColoredProductGraph g2 = apply_deletion_rule(g1, gr, gb);
  const Placement phi = sample_injection(params, seed);
  PlacedGraph out = induce_final_graph(g2, phi);

  BuildStats& s = out.provenance.stats;
  const auto c1 = g1.counts();
  const auto c2 = g2.counts();
  s.red_base_edges = gr.edge_count();
  s.blue_base_edges = gb.edge_count();
  s.g1_edges = c1.edges;
  s.g1_red_flags = c1.red_flags;
  s.g1_blue_flags = c1.blue_flags;
  s.g2_edges = c2.edges;
  s.g2_red_flags = c2.red_flags;
  s.g2_blue_flags = c2.blue_flags;
  s.red_flags_deleted = c1.red_flags - c2.red_flags;
  s.blue_flags_deleted = c1.blue_flags - c2.blue_flags;
  s.edges_deleted = c1.edges - c2.edges;
  s.final_edges = out.graph.edge_count();
  s.dense_product = g1.is_dense();
  out.provenance.params = params;
  out.provenance.seed = seed;
  return out;
}

}  // namespace trifree
