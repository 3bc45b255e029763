#include "trifree/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "trifree/bitset.hpp"

namespace trifree {

bool ConcentrationReport::all_pass() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.pass(); });
}

namespace {

void record(BoundCheck& b, double value) {
  ++b.checked;
  const double dev = b.two_sided ? std::abs(value - b.center) : value;
  b.worst = std::max(b.worst, dev);
  if (dev > b.allowed) ++b.violations;
}

BoundCheck two_sided(std::string name, double center, double rel) {
  BoundCheck b;
  b.name = std::move(name);
  b.two_sided = true;
  b.center = center;
  b.allowed = rel * center;
  return b;
}

BoundCheck ceiling(std::string name, double allowed) {
  BoundCheck b;
  b.name = std::move(name);
  b.allowed = allowed;
  return b;
}

}  // namespace

ConcentrationReport concentration_report(const PlacedGraph& instance, std::optional<double> eps2) {
  const Params& params = instance.params();
  const int side = instance.side();
  const auto n = instance.placement.size();
  const double ln = std::log(static_cast<double>(params.n));
  const BaseGraph& gr = instance.red_base;
  const BaseGraph& gb = instance.blue_base;

  ConcentrationReport rep;
  rep.eps2 = eps2.value_or(params.eps2);
  rep.C = codegree_constant();

  std::vector<Bitset> row_fiber(side, Bitset(n)), col_fiber(side, Bitset(n));
  std::vector<Bitset> cols_of_row(side, Bitset(side)), rows_of_col(side, Bitset(side));
  for (std::size_t v = 0; v < n; ++v) {
    const Cell c = instance.placement[v];
    row_fiber[c.row].set(v);
    col_fiber[c.col].set(v);
    cols_of_row[c.row].set(c.col);
    rows_of_col[c.col].set(c.row);
  }

  const int total = 2 * side;
  std::vector<Bitset> n3(total, Bitset(n)), projected(total, Bitset(side));
  rep.fiber_size.resize(total);
  rep.base_degree.resize(total);
  rep.n3_size.resize(total);
  for (int v = 0; v < side; ++v) {
    rep.fiber_size[v] = static_cast<int>(row_fiber[v].count());
    rep.fiber_size[side + v] = static_cast<int>(col_fiber[v].count());
    rep.base_degree[v] = gr.degree(v);
    rep.base_degree[side + v] = gb.degree(v);
    gr.neighbor_set(v).for_each([&](std::size_t r) {
      n3[v] |= row_fiber[r];
      projected[v] |= cols_of_row[r];
    });
    gb.neighbor_set(v).for_each([&](std::size_t b) {
      n3[side + v] |= col_fiber[b];
      projected[side + v] |= rows_of_col[b];
    });
  }
  for (int v = 0; v < total; ++v) rep.n3_size[v] = static_cast<int>(n3[v].count());

  const double pN = params.p * static_cast<double>(side);
  const double polylog3 = rep.C * ln * ln * ln;
  auto& b = rep.bounds;
  b[0] = two_sided("fiber_size", ln * ln, rep.eps2);
  b[1] = two_sided("base_degree", pN, rep.eps2);
  b[2] = ceiling("codegree", rep.C * ln);
  b[3] = two_sided("n3_size", params.pn(), rep.eps2);
  b[4] = ceiling("n3_codegree", polylog3);
  b[5] = ceiling("projected_codegree_red", polylog3);
  b[6] = ceiling("projected_codegree_blue", polylog3);

  for (int v = 0; v < total; ++v) {
    record(b[0], rep.fiber_size[v]);
    record(b[1], rep.base_degree[v]);
    record(b[3], rep.n3_size[v]);
  }
  for (int v = 0; v < total; ++v)
    for (int w = v + 1; w < total; ++w) {
      const int n3_codeg = static_cast<int>(n3[v].intersection_count(n3[w]));
      rep.max_n3_codegree = std::max(rep.max_n3_codegree, n3_codeg);
      record(b[4], n3_codeg);
      const bool both_red = w < side;
      const bool both_blue = v >= side;
      if (!both_red && !both_blue) continue;
      const BaseGraph& g = both_red ? gr : gb;
      const int off = both_red ? 0 : side;
      const int codeg = static_cast<int>(
          g.neighbor_set(v - off).intersection_count(g.neighbor_set(w - off)));
      rep.max_codegree = std::max(rep.max_codegree, codeg);
      record(b[2], codeg);
      const int proj = static_cast<int>(projected[v].intersection_count(projected[w]));
      if (both_red) {
        rep.max_projected_codegree_red = std::max(rep.max_projected_codegree_red, proj);
        record(b[5], proj);
      } else {
        rep.max_projected_codegree_blue = std::max(rep.max_projected_codegree_blue, proj);
        record(b[6], proj);
      }
    }
  return rep;
}

std::string to_string(SizeClass c) {
  switch (c) {
    case SizeClass::kHuge:
      return "H";
    case SizeClass::kLarge:
      return "L";
    case SizeClass::kMedium:
      return "M";
    case SizeClass::kSmall:
      return "S";
  }
  return "?";
}

SizeClass classify_size(double x, const Params& params) {
  if (x > params.t1) return SizeClass::kHuge;
  if (x > params.t2) return SizeClass::kLarge;
  if (x > params.t3) return SizeClass::kMedium;
  return SizeClass::kSmall;
}

namespace {

void check_k_set(const PlacedGraph& instance, std::span<const int> set) {
  const auto k = instance.params().k;
  if (static_cast<std::int64_t>(set.size()) != k)
    throw std::invalid_argument("classify_sets: |I| = " + std::to_string(set.size()) +
                                " but k = " + std::to_string(k));
  std::vector<char> seen(instance.placement.size(), 0);
  for (int v : set) {
    if (v < 0 || static_cast<std::size_t>(v) >= seen.size())
      throw std::invalid_argument("classify_sets: vertex out of range");
    if (seen[v]) throw std::invalid_argument("classify_sets: repeated vertex");
    seen[v] = 1;
  }
}

}  // namespace

SetClassification classify_sets(const PlacedGraph& instance, std::span<const int> set) {
  check_k_set(instance, set);
  const Params& params = instance.params();
  const int side = instance.side();
  const BaseGraph& gr = instance.red_base;
  const BaseGraph& gb = instance.blue_base;

  std::vector<int> per_row(side, 0), per_col(side, 0);
  for (int v : set) {
    ++per_row[instance.placement[v].row];
    ++per_col[instance.placement[v].col];
  }

  SetClassification out;
  const int total = 2 * side;
  out.x_size.assign(total, 0);
  out.x_plus_size.assign(total, 0);
  out.size_class.resize(total);
  for (int m = 0; m < side; ++m) {
    gr.neighbor_set(m).for_each([&](std::size_t r) {
      out.x_size[m] += per_row[r];
      if (static_cast<int>(r) > m) out.x_plus_size[m] += per_row[r];
    });
    gb.neighbor_set(m).for_each([&](std::size_t c) {
      out.x_size[side + m] += per_col[c];
      if (static_cast<int>(c) > m) out.x_plus_size[side + m] += per_col[c];
    });
  }
  for (int v = 0; v < total; ++v) {
    const SizeClass c = classify_size(out.x_size[v], params);
    out.size_class[v] = c;
    ++out.class_count[static_cast<int>(c)];
    out.binom_sum[static_cast<int>(c)] += binom2(out.x_size[v]);
  }

  const ClosureTable red = closure_table(gr);
  const ClosureTable blue = closure_table(gb);
  const std::size_t k = set.size();
  out.pairs = k * (k - 1) / 2;
  for (std::size_t a = 0; a < k; ++a) {
    const Cell ca = instance.placement[set[a]];
    for (std::size_t b = a + 1; b < k; ++b) {
      const Cell cb = instance.placement[set[b]];
      const bool closed = red.common.test(ca.row, cb.row) || blue.common.test(ca.col, cb.col);
      const bool closed_plus =
          red.common_plus.test(ca.row, cb.row) || blue.common_plus.test(ca.col, cb.col);
      out.closed += closed;
      out.closed_plus += closed_plus;
      if (!closed) continue;
      unsigned mask = 0;
      (gr.neighbor_set(ca.row) & gr.neighbor_set(cb.row)).for_each([&](std::size_t m) {
        mask |= 1U << static_cast<int>(out.size_class[m]);
      });
      (gb.neighbor_set(ca.col) & gb.neighbor_set(cb.col)).for_each([&](std::size_t m) {
        mask |= 1U << static_cast<int>(out.size_class[side + m]);
      });
      for (int c = 0; c < 4; ++c)
        if (mask & (1U << c)) ++out.closed_union[c];
    }
  }
  out.open = out.pairs - out.closed;
  out.open_plus = out.pairs - out.closed_plus;
  return out;
}

bool edges_are_open_plus(const PlacedGraph& instance, std::span<const int> set) {
  check_k_set(instance, set);
  const ClosureTable red = closure_table(instance.red_base);
  const ClosureTable blue = closure_table(instance.blue_base);
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (!instance.graph.adjacent(set[a], set[b])) continue;
      const Cell ca = instance.placement[set[a]];
      const Cell cb = instance.placement[set[b]];
      if (red.common_plus.test(ca.row, cb.row) || blue.common_plus.test(ca.col, cb.col))
        return false;
    }
  return true;
}

double binom2(double x) { return x >= 1.0 ? x * (x - 1.0) / 2.0 : 0.0; }

double f_function(std::int64_t l_red, std::int64_t l_blue, const Params& params) {
  const auto k = params.k;
  if (l_red < 0 || l_red > k || l_blue < 0 || l_blue > k)
    throw std::invalid_argument("f_function: arguments must lie in [0, k]");
  const double pn = params.pn();
  auto min_term = [&](std::int64_t l) {
    const double rest = static_cast<double>(k - l);
    return std::min(binom2(rest), binom2(pn) + binom2(rest - pn));
  };
  auto term = [&](std::int64_t l) { return binom2(static_cast<double>(l)) - min_term(l); };
  return term(l_red) + term(l_blue);
}

std::vector<int> random_k_set(int n, int k, Rng& rng) {
  if (k < 0 || k > n) throw std::invalid_argument("random_k_set: need 0 <= k <= n");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::vector<int>> adversarial_sets(const PlacedGraph& instance, int count,
                                               std::uint64_t seed) {
  const int n = static_cast<int>(instance.placement.size());
  const int k = static_cast<int>(instance.params().k);
  const int side = instance.side();
  Rng rng = child_stream(seed, "adversarial");

  std::vector<std::vector<int>> row_fiber(side), col_fiber(side);
  for (int v = 0; v < n; ++v) {
    row_fiber[instance.placement[v].row].push_back(v);
    col_fiber[instance.placement[v].col].push_back(v);
  }
  auto by_size = [](const std::vector<std::vector<int>>& fibers) {
    std::vector<int> idx(fibers.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return fibers[a].size() > fibers[b].size(); });
    return idx;
  };
  const auto rows_desc = by_size(row_fiber);
  const auto cols_desc = by_size(col_fiber);
  std::vector<int> hubs(n);
  std::iota(hubs.begin(), hubs.end(), 0);
  std::stable_sort(hubs.begin(), hubs.end(), [&](int a, int b) {
    return instance.graph.degree(a) > instance.graph.degree(b);
  });

  // Pads with uniformly random unused vertices up to k.
  auto finish = [&](std::vector<int> s) {
    std::vector<char> used(n, 0);
    for (int v : s) used[v] = 1;
    while (static_cast<int>(s.size()) < k) {
      const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      if (!used[v]) {
        used[v] = 1;
        s.push_back(v);
      }
    }
    s.resize(k);
    std::sort(s.begin(), s.end());
    return s;
  };
  auto fibers_from = [&](const std::vector<std::vector<int>>& fibers,
                         const std::vector<int>& order, int start) {
    std::vector<int> s;
    for (int i = 0; i < side && static_cast<int>(s.size()) < k; ++i) {
      const auto& f = fibers[order[(start + i) % side]];
      for (int v : f) {
        if (static_cast<int>(s.size()) == k) break;
        s.push_back(v);
      }
    }
    return s;
  };

  std::vector<std::vector<int>> out;
  for (int i = 0; i < count; ++i) {
    const int round = i / 3;
    switch (i % 3) {
      case 0:
        out.push_back(finish(fibers_from(row_fiber, rows_desc, round)));
        break;
      case 1:
        out.push_back(finish(fibers_from(col_fiber, cols_desc, round)));
        break;
      default: {
        const int v = hubs[round % n];
        const auto nb = instance.graph.neighbors(v);
        std::vector<int> s(nb.begin(), nb.end());
        if (static_cast<int>(s.size()) > k) s.resize(k);
        out.push_back(finish(std::move(s)));
      }
    }
  }
  return out;
}

}  // namespace trifree
