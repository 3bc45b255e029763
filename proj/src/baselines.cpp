#include "trifree/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "trifree/bitset.hpp"
#include "trifree/rng.hpp"

namespace trifree {
namespace {

// Visits the pairs (u, v), u < v, of G(n, p) in lexicographic order using
// geometric gaps between successes.
template <typename F>
void for_each_gnp_pair(int n, double p, Rng& rng, F&& f) {
  if (n < 2 || p <= 0.0) return;
  const auto total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double log_q = p < 1.0 ? std::log1p(-p) : 0.0;
  std::uint64_t idx = 0;
  int u = 0;
  std::uint64_t row_start = 0;  // linear index of (u, u + 1)
  while (true) {
    if (p < 1.0) {
      const double gap = std::floor(std::log1p(-uniform01(rng)) / log_q);
      if (gap >= static_cast<double>(total - idx)) return;
      idx += static_cast<std::uint64_t>(gap);
    }
    if (idx >= total) return;
    while (idx >= row_start + static_cast<std::uint64_t>(n - 1 - u)) {
      row_start += static_cast<std::uint64_t>(n - 1 - u);
      ++u;
    }
    f(u, u + 1 + static_cast<int>(idx - row_start));
    ++idx;
  }
}

bool common_neighbor_above(const Bitset& a, const Bitset& b, std::size_t v) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  std::size_t k = (v + 1) >> 6;
  if (k >= wa.size()) return false;
  const unsigned shift = (v + 1) & 63;
  const std::uint64_t mask = shift ? ~((std::uint64_t{1} << shift) - 1) : ~std::uint64_t{0};
  if (wa[k] & wb[k] & mask) return true;
  for (++k; k < wa.size(); ++k)
    if (wa[k] & wb[k]) return true;
  return false;
}

}  // namespace

EdgeDeletionResult edge_deletion_baseline(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge_deletion_baseline: p outside [0, 1]");
  Rng rng = child_stream(seed, "baseline/gnp");
  BitMatrix rows(static_cast<std::size_t>(n));
  EdgeDeletionResult out;
  for_each_gnp_pair(n, p, rng, [&](int u, int v) {
    rows.set_symmetric(u, v);
    ++out.sampled_edges;
  });
  // A triangle u < v < w is handled at pair (u, v); pairs later in the order
  // are still untouched then, so (u, v) goes iff some w > v closes it.
  for (int u = 0; u < n; ++u) {
    std::vector<int> upper;
    rows.row(u).for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) upper.push_back(static_cast<int>(v));
    });
    for (int v : upper)
      if (common_neighbor_above(rows.row(u), rows.row(v), static_cast<std::size_t>(v))) {
        rows.reset_symmetric(u, v);
        ++out.deleted_edges;
      }
  }
  out.graph = from_bit_rows(rows);
  return out;
}

ProcessResult triangle_free_process(int n, std::uint64_t seed, std::uint64_t max_steps) {
  Rng rng = child_stream(seed, "baseline/process");
  BitMatrix adj(static_cast<std::size_t>(n));
  ProcessResult out;
  const std::uint64_t all_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t open = all_pairs;

  auto is_open = [&](int u, int v) {
    return u != v && !adj.test(u, v) && !adj.row(u).intersects(adj.row(v));
  };
  auto add_edge = [&](int u, int v) {
    adj.row(v).for_each([&](std::size_t w) { open -= is_open(u, static_cast<int>(w)); });
    adj.row(u).for_each([&](std::size_t w) { open -= is_open(v, static_cast<int>(w)); });
    --open;
    adj.set_symmetric(u, v);
    ++out.steps;
  };

  // Rejection from all pairs while open pairs are plentiful.
  while (open > 0 && out.steps < max_steps && open * 32 >= all_pairs) {
    const auto u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    const auto v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (is_open(u, v)) add_edge(u, v);
  }
  // Then from an explicit list of the open pairs, dropping stale entries.
  if (open > 0 && out.steps < max_steps) {
    std::vector<Edge> list;
    list.reserve(open);
    for (int u = 0; u < n; ++u) {
      Bitset closed = adj.row(u);
      adj.row(u).for_each([&](std::size_t w) { closed |= adj.row(w); });
      for (int v = u + 1; v < n; ++v)
        if (!closed.test(v)) list.emplace_back(u, v);
    }
    while (open > 0 && out.steps < max_steps) {
      const auto i = uniform_below(rng, list.size());
      const auto [u, v] = list[i];
      list[i] = list.back();
      list.pop_back();
      if (is_open(u, v)) add_edge(u, v);
    }
  }
  out.maximal = open == 0;
  out.graph = from_bit_rows(adj);
  return out;
}

}  // namespace trifree
