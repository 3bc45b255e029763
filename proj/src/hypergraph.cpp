#include "trifree/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "trifree/independence.hpp"
#include "trifree/rng.hpp"
#include "trifree/triangles.hpp"

namespace trifree {

Triple make_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("make_triple: repeated vertex");
  return t;
}

void TripleSystem::add(const Triple& t, ColorFlags flags) {
  if (t[0] < 0 || t[2] >= order_ || !(t[0] < t[1] && t[1] < t[2]))
    throw std::invalid_argument("TripleSystem::add: not a sorted triple of this system");
  if (flags == kNoColor) return;
  edges_[t] |= flags;
}

void TripleSystem::set_flags(const Triple& t, ColorFlags flags) {
  if (flags == kNoColor) {
    edges_.erase(t);
    return;
  }
  edges_.erase(t);
  add(t, flags);
}

ColorFlags TripleSystem::flags(const Triple& t) const {
  const auto it = edges_.find(t);
  return it == edges_.end() ? kNoColor : it->second;
}

void TripleSystem::set_cells(std::vector<Cell> cells) {
  if (!cells.empty() && static_cast<int>(cells.size()) != order_)
    throw std::invalid_argument("TripleSystem::set_cells: one cell per vertex required");
  cells_ = std::move(cells);
}

SimpleGraph LinkGraph::to_simple_graph() const {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [e, c] : edges) list.push_back(e);
  return SimpleGraph(order, list);
}

namespace {

std::pair<int, int> others(const Triple& t, int center) {
  if (t[0] == center) return {t[1], t[2]};
  if (t[1] == center) return {t[0], t[2]};
  return {t[0], t[1]};
}

}  // namespace

LinkGraph extract_link(const TripleSystem& h, int v) {
  if (v < 0 || v >= h.order()) throw std::out_of_range("extract_link: vertex out of range");
  LinkGraph link;
  link.center = v;
  link.order = h.order();
  for (const auto& [t, c] : h.edges())
    if (t[0] == v || t[1] == v || t[2] == v) link.edges.emplace(others(t, v), c);
  return link;
}

LinkIndex::LinkIndex(int order, ColorFlags color)
    : color_(color), adj_(static_cast<std::size_t>(order)) {}

bool LinkIndex::has_common_neighbor(int center, int x, int y) const {
  const auto& m = adj_[center];
  const auto ix = m.find(x);
  const auto iy = m.find(y);
  if (ix == m.end() || iy == m.end()) return false;
  const auto& a = ix->second.size() <= iy->second.size() ? ix->second : iy->second;
  const auto& b = ix->second.size() <= iy->second.size() ? iy->second : ix->second;
  return std::any_of(a.begin(), a.end(), [&](int w) { return b.count(w) != 0; });
}

bool LinkIndex::closes_triangle(const Triple& t) const {
  for (int center : t) {
    const auto [x, y] = others(t, center);
    if (has_common_neighbor(center, x, y)) return true;
  }
  return false;
}

void LinkIndex::add(const Triple& t) {
  for (int center : t) {
    const auto [x, y] = others(t, center);
    adj_[center][x].insert(y);
    adj_[center][y].insert(x);
  }
}

void LinkIndex::remove(const Triple& t) {
  for (int center : t) {
    const auto [x, y] = others(t, center);
    auto& m = adj_[center];
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      const auto it = m.find(a);
      if (it == m.end()) continue;
      it->second.erase(b);
      if (it->second.empty()) m.erase(it);
    }
  }
}

LinkGraph LinkIndex::link(int center) const {
  LinkGraph out;
  out.center = center;
  out.order = static_cast<int>(adj_.size());
  for (const auto& [x, ys] : adj_[center])
    for (int y : ys)
      if (x < y) out.edges.emplace(Edge{x, y}, color_);
  return out;
}

std::vector<Triple> lexicographic_order(const TripleSystem& h) {
  std::vector<Triple> order;
  order.reserve(h.edge_count());
  for (const auto& [t, c] : h.edges()) order.push_back(t);
  const auto& cells = h.cells();
  if (cells.empty()) return order;  // std::map order is already by vertex id
  auto key = [&](const Triple& t) {
    std::array<Cell, 3> k{cells[t[0]], cells[t[1]], cells[t[2]]};
    std::sort(k.begin(), k.end());
    return k;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Triple& a, const Triple& b) { return key(a) < key(b); });
  return order;
}

namespace {

TripleSystem sample_h3(int order, double p, Rng& rng, ColorFlags color) {
  TripleSystem h(order);
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      for (int c = b + 1; c < order; ++c)
        if (bernoulli(rng, p)) h.add({a, b, c}, color);
  return h;
}

}  // namespace

std::pair<TripleSystem, TripleSystem> sample_base_3graphs(const Params& params,
                                                          std::uint64_t seed) {
  if (params.N < 3) throw ParamError("sample_base_3graphs: N >= 3 required");
  const int n = static_cast<int>(params.N);
  Rng red_rng = child_stream(seed, "hyper/red");
  Rng blue_rng = child_stream(seed, "hyper/blue");
  return {sample_h3(n, params.p, red_rng, kRed), sample_h3(n, params.p, blue_rng, kBlue)};
}

TripleSystem hyper_product(const TripleSystem& hr, const TripleSystem& hb) {
  if (hr.order() != hb.order()) throw std::invalid_argument("hyper_product: orders differ");
  const int n = hr.order();
  TripleSystem h(n * n);
  std::vector<Cell> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) cells[i] = {i / n, i % n};
  h.set_cells(std::move(cells));

  // For a red base edge {r0, r1, r2}, assign pairwise distinct columns; for a
  // blue one, pairwise distinct rows.
  auto spread = [&](const Triple& base, bool base_is_rows, ColorFlags color) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        for (int z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          const int u = base_is_rows ? base[0] * n + x : x * n + base[0];
          const int v = base_is_rows ? base[1] * n + y : y * n + base[1];
          const int w = base_is_rows ? base[2] * n + z : z * n + base[2];
          h.add(make_triple(u, v, w), color);
        }
      }
  };
  for (const auto& [t, c] : hr.edges()) spread(t, true, kRed);
  for (const auto& [t, c] : hb.edges()) spread(t, false, kBlue);
  return h;
}

TripleSystem induce_hyper(const TripleSystem& h1, const Placement& placement) {
  const int n_cells = h1.order();
  int side = 0;
  while (side * side < n_cells) ++side;
  if (side * side != n_cells || !is_injective(placement, side))
    throw std::invalid_argument("induce_hyper: placement is not an injection into the grid");
  std::vector<int> vertex_of(static_cast<std::size_t>(n_cells), -1);
  for (int v = 0; v < static_cast<int>(placement.size()); ++v)
    vertex_of[placement[v].row * side + placement[v].col] = v;

  TripleSystem h2(static_cast<int>(placement.size()));
  h2.set_cells(placement);
  for (const auto& [t, c] : h1.edges()) {
    const int a = vertex_of[t[0]], b = vertex_of[t[1]], d = vertex_of[t[2]];
    if (a >= 0 && b >= 0 && d >= 0) h2.add(make_triple(a, b, d), c);
  }
  return h2;
}

TripleSystem inject_hyper(const TripleSystem& h1, const Params& params, std::uint64_t seed) {
  return induce_hyper(h1, sample_injection(params, seed));
}

TripleSystem induce_hyper_direct(const TripleSystem& hr, const TripleSystem& hb,
                                 const Placement& placement) {
  const int side = hr.order();
  if (hb.order() != side || !is_injective(placement, side))
    throw std::invalid_argument("induce_hyper_direct: placement is not an injection into the grid");
  std::vector<std::vector<int>> row_fiber(side), col_fiber(side);
  for (int v = 0; v < static_cast<int>(placement.size()); ++v) {
    row_fiber[placement[v].row].push_back(v);
    col_fiber[placement[v].col].push_back(v);
  }
  TripleSystem h2(static_cast<int>(placement.size()));
  h2.set_cells(placement);
  auto spread = [&](const Triple& base, const std::vector<std::vector<int>>& fibers, bool rows,
                    ColorFlags color) {
    for (int u : fibers[base[0]])
      for (int v : fibers[base[1]])
        for (int w : fibers[base[2]]) {
          const int cu = rows ? placement[u].col : placement[u].row;
          const int cv = rows ? placement[v].col : placement[v].row;
          const int cw = rows ? placement[w].col : placement[w].row;
          if (cu != cv && cu != cw && cv != cw) h2.add(make_triple(u, v, w), color);
        }
  };
  for (const auto& [t, c] : hr.edges()) spread(t, row_fiber, true, kRed);
  for (const auto& [t, c] : hb.edges()) spread(t, col_fiber, false, kBlue);
  return h2;
}

TripleSystem s4_reduction(const TripleSystem& h2, ReductionStats* stats) {
  ReductionStats local;
  const std::vector<Triple> order = lexicographic_order(h2);
  LinkIndex red(h2.order(), kRed), blue(h2.order(), kBlue);
  std::map<Triple, ColorFlags> kept;

  // (a), (b): greedy acceptance of each colour against monochromatic S4s.
  auto accept_pass = [&](ColorFlags color, LinkIndex& index, std::size_t& rejected) {
    for (const Triple& t : order) {
      if (!(h2.flags(t) & color)) continue;
      if (index.closes_triangle(t)) {
        ++rejected;
        continue;
      }
      index.add(t);
      kept[t] |= color;
    }
  };
  accept_pass(kRed, red, local.red_rejected);
  accept_pass(kBlue, blue, local.blue_rejected);

  // (c), (d): a single-coloured triple that closes a triangle in the other
  // colour's link index is the odd edge of a mixed S4.
  auto strip_pass = [&](ColorFlags color, LinkIndex& own, const LinkIndex& other,
                        std::size_t& removed) {
    for (const Triple& t : order) {
      const auto it = kept.find(t);
      if (it == kept.end() || it->second != color) continue;
      if (other.closes_triangle(t)) {
        kept.erase(it);
        own.remove(t);
        ++removed;
      }
    }
  };
  strip_pass(kRed, red, blue, local.red_removed);
  strip_pass(kBlue, blue, red, local.blue_removed);

  TripleSystem h(h2.order());
  h.set_cells(h2.cells());
  for (const auto& [t, c] : kept) h.add(t, c);
  if (stats) *stats = local;
  return h;
}

bool verify_s4_free(const TripleSystem& h) {
  std::vector<std::vector<Edge>> link(static_cast<std::size_t>(h.order()));
  for (const auto& [t, c] : h.edges()) {
    link[t[0]].emplace_back(t[1], t[2]);
    link[t[1]].emplace_back(t[0], t[2]);
    link[t[2]].emplace_back(t[0], t[1]);
  }
  for (const auto& edges : link) {
    if (edges.size() < 3) continue;
    if (count_triangles(SimpleGraph(h.order(), edges)) != 0) return false;
  }
  return true;
}

HyperInstance build_hyper(const Params& params, std::uint64_t seed) {
  validate(params);
  HyperInstance out;
  auto [hr, hb] = sample_base_3graphs(params, seed);
  out.placement = sample_injection(params, seed);
  const TripleSystem h2 = induce_hyper_direct(hr, hb, out.placement);
  out.h2_edges = h2.edge_count();
  out.reduced = s4_reduction(h2, &out.reduction);
  out.red_base = std::move(hr);
  out.blue_base = std::move(hb);
  out.params = params;
  out.seed = seed;
  return out;
}

std::vector<LinkSummary> link_summaries(const TripleSystem& h, int restarts, std::uint64_t seed) {
  std::vector<std::vector<Edge>> link(static_cast<std::size_t>(h.order()));
  // Link of v on V \ {v}: ids above v shift down by one.
  auto add = [&](int v, int x, int y) {
    link[v].emplace_back(x < v ? x : x - 1, y < v ? y : y - 1);
  };
  for (const auto& [t, c] : h.edges()) {
    add(t[0], t[1], t[2]);
    add(t[1], t[0], t[2]);
    add(t[2], t[0], t[1]);
  }
  std::vector<LinkSummary> out;
  out.reserve(link.size());
  for (int v = 0; v < h.order(); ++v) {
    const SimpleGraph g(h.order() - 1, link[v]);
    LinkSummary s;
    s.center = v;
    s.edges = g.edge_count();
    s.triangles = count_triangles(g);
    s.max_degree = g.max_degree();
    s.alpha_greedy = independence_greedy(g, restarts, seed + static_cast<std::uint64_t>(v)).value;
    out.push_back(s);
  }
  return out;
}

}  // namespace trifree
