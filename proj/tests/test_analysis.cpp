#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "trifree/construction.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/independence.hpp"
#include "trifree/rng.hpp"
#include "trifree/triangles.hpp"

using namespace trifree;

namespace {

SimpleGraph gnp(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

SimpleGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, e);
}

SimpleGraph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

SimpleGraph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return SimpleGraph(leaves + 1, e);
}

}  // namespace

TEST_SUITE("triangles") {

TEST_CASE("small graphs") {
  CHECK(count_triangles(complete(3)) == 1);
  CHECK(count_triangles(complete(5)) == 10);
  CHECK(count_triangles(cycle(6)) == 0);
  std::vector<Edge> kb;
  for (int u = 0; u < 4; ++u)
    for (int v = 4; v < 9; ++v) kb.emplace_back(u, v);
  CHECK(count_triangles(SimpleGraph(9, kb)) == 0);
  CHECK(count_triangles_bitset(complete(6)) == 20);
}

TEST_CASE("counters agree with triple enumeration") {
  Rng rng = child_stream(1, "test/triangles");
  for (int t = 0; t < 40; ++t) {
    const SimpleGraph g = gnp(10 + t * 3, 0.05 + 0.02 * (t % 10), rng);
    const auto expected = oracle::triangles(g);
    CHECK(count_triangles(g) == expected);
    CHECK(count_triangles_bitset(g) == expected);
  }
}

TEST_CASE("graph validation") {
  const std::vector<Edge> loop = {{1, 1}};
  CHECK_THROWS(SimpleGraph(3, loop));
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  CHECK(SimpleGraph(3, dup).edge_count() == 1);
}

}

TEST_SUITE("independence") {

TEST_CASE("named graphs") {
  CHECK(independence_exact(SimpleGraph(7, {})).value == 7);
  CHECK(independence_exact(complete(6)).value == 1);
  CHECK(independence_exact(cycle(5)).value == 2);
  CHECK(oracle::alpha(cycle(5)) == 2);
  CHECK(independence_greedy(star(9)).value == 9);
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(independence_greedy(cycle(5), 3, s).value == 2);
  CHECK(independence_greedy(SimpleGraph(6, {})).value == 6);
  const auto r = independence_exact(cycle(7));
  CHECK(r.optimal);
  CHECK(r.value == 3);
  CHECK(r.method == IndependenceMethod::kExact);
}

TEST_CASE("exact matches brute force") {
  Rng rng = child_stream(2, "test/exact");
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 16;
    const SimpleGraph g = gnp(n, 0.1 + 0.8 * uniform01(rng), rng);
    const auto r = independence_exact(g);
    CHECK(r.optimal);
    CHECK(r.value == oracle::alpha(g));
    CHECK(static_cast<int>(r.certificate.size()) == r.value);
    CHECK(is_independent(g, r.certificate));
    CHECK(std::is_sorted(r.certificate.begin(), r.certificate.end()));
    const auto gr = independence_greedy(g, 2, t);
    CHECK(gr.value <= r.value);
    CHECK(is_independent(g, gr.certificate));
  }
}

TEST_CASE("budget exhaustion returns a valid set") {
  Rng rng = child_stream(3, "test/budget");
  const SimpleGraph g = gnp(120, 0.5, rng);
  const auto r = independence_exact(g, 50);
  CHECK_FALSE(r.optimal);
  CHECK(r.value >= 1);
  CHECK(is_independent(g, r.certificate));
}

TEST_CASE("greedy is deterministic and at least the max degree on triangle-free graphs") {
  const PlacedGraph g = build(derive_params(1000, 0.1), 3);
  const auto a = independence_greedy(g.graph, 4, 9);
  const auto b = independence_greedy(g.graph, 4, 9);
  CHECK(a.value == b.value);
  CHECK(a.certificate == b.certificate);
  CHECK(a.value >= g.graph.max_degree());
  CHECK(is_independent(g.graph, a.certificate));
}

TEST_CASE("is_independent") {
  const SimpleGraph c = cycle(5);
  CHECK(is_independent(c, std::vector<int>{0, 2}));
  CHECK_FALSE(is_independent(c, std::vector<int>{0, 1}));
  CHECK_FALSE(is_independent(c, std::vector<int>{0, 0}));
}

}

TEST_SUITE("diagnostics") {

TEST_CASE("p = 0 report") {
  const PlacedGraph g = build(explicit_params(9, 3, 0.0, 3), 1);
  const ConcentrationReport r = concentration_report(g);
  for (int v = 0; v < 6; ++v) CHECK(r.base_degree[v] == 0);
  CHECK(r.max_codegree == 0);
  CHECK(r.max_n3_codegree == 0);
  for (int b = 2; b < 7; ++b)
    if (!r.bounds[b].two_sided) CHECK(r.bounds[b].pass());
  CHECK(r.eps2 == doctest::Approx(g.params().eps2));
  CHECK(concentration_report(g, 0.2).eps2 == doctest::Approx(0.2));
}

TEST_CASE("full occupancy fibres") {
  const PlacedGraph g = build(explicit_params(16, 4, 0.5, 4), 2);
  const ConcentrationReport r = concentration_report(g);
  for (int f : r.fiber_size) CHECK(f == 4);
}

TEST_CASE("report values against direct computation") {
  const PlacedGraph g = build(explicit_params(40, 8, 0.4, 6), 5);
  const ConcentrationReport r = concentration_report(g);
  const int N = g.side();
  int worst_codegree = 0;
  for (int v = 0; v < N; ++v) {
    int n3 = 0;
    for (const Cell& c : g.placement) n3 += g.red_base.adjacent(v, c.row);
    CHECK(r.n3_size[v] == n3);
    CHECK(r.base_degree[N + v] == g.blue_base.degree(v));
    for (int w = v + 1; w < N; ++w) {
      int cr = 0, cb = 0;
      for (int m = 0; m < N; ++m) {
        cr += g.red_base.adjacent(v, m) && g.red_base.adjacent(w, m);
        cb += g.blue_base.adjacent(v, m) && g.blue_base.adjacent(w, m);
      }
      worst_codegree = std::max({worst_codegree, cr, cb});
    }
  }
  CHECK(r.max_codegree == worst_codegree);
}

TEST_CASE("size classes partition") {
  const Params p = derive_params(10000, 0.1);
  CHECK(classify_size(p.t1 + 1, p) == SizeClass::kHuge);
  CHECK(classify_size(p.t1, p) == SizeClass::kLarge);
  CHECK(classify_size(p.t2, p) == SizeClass::kMedium);
  CHECK(classify_size(p.t3, p) == SizeClass::kSmall);
  CHECK(classify_size(0, p) == SizeClass::kSmall);
}

TEST_CASE("classify_sets against the pair-set oracle") {
  for (int t = 0; t < 12; ++t) {
    const int N = 4 + t % 9;
    const Params p = explicit_params(N * N - t, N, 0.2 + 0.05 * t, std::min(N * N - t, 3 + t));
    const PlacedGraph g = build(p, 40 + t);
    Rng rng = child_stream(t, "test/sets");
    for (int s = 0; s < 5; ++s) {
      const auto set = random_k_set(g.graph.order(), static_cast<int>(p.k), rng);
      const SetClassification c = classify_sets(g, set);
      const auto o = oracle::closed_pairs(g, set);
      CHECK(c.closed == o.closed);
      CHECK(c.closed_plus == o.closed_plus);
      CHECK(c.x_size == o.x_size);
      CHECK(c.x_plus_size == o.x_plus_size);
      CHECK(c.closed + c.open == c.pairs);
      CHECK(c.closed_plus + c.open_plus == c.pairs);
      CHECK(c.closed_plus <= c.closed);
      CHECK(std::accumulate(c.class_count.begin(), c.class_count.end(), std::size_t{0}) ==
            static_cast<std::size_t>(2 * N));
      CHECK(edges_are_open_plus(g, set));
    }
  }
}

TEST_CASE("p = 1, one full row") {
  const Params p = explicit_params(16, 4, 1.0, 4);
  PlacedGraph g = build(p, 1);
  std::vector<int> row;
  for (int v = 0; v < 16; ++v)
    if (g.placement[v].row == 2) row.push_back(v);
  REQUIRE(row.size() == 4);
  const SetClassification c = classify_sets(g, row);
  for (int r = 0; r < 4; ++r) CHECK(c.x_size[r] == (r == 2 ? 0 : 4));
  CHECK(c.x_size == oracle::closed_pairs(g, row).x_size);
}

TEST_CASE("p = 0 sets are all small and open") {
  const Params p = explicit_params(16, 4, 0.0, 5);
  const PlacedGraph g = build(p, 1);
  const std::vector<int> set = {0, 3, 5, 9, 12};
  const SetClassification c = classify_sets(g, set);
  CHECK(c.class_count[static_cast<int>(SizeClass::kSmall)] == 8);
  CHECK(c.closed == 0);
  CHECK(c.open == 10);
  CHECK(edges_are_open_plus(g, set));
}

TEST_CASE("open+ negative control") {
  // Red path 0-1-2: rows 1 and 2 share the smaller neighbour 0, so a red
  // edge between rows 1 and 2 would be closed+.
  const Params p = explicit_params(9, 3, 0.0, 2);
  PlacedGraph g = build(p, 1);
  g.red_base = BaseGraph(Side::kRed, 3);
  g.red_base.add_edge(0, 1);
  g.red_base.add_edge(0, 2);
  g.red_base.add_edge(1, 2);
  g.placement = {{1, 0}, {2, 1}, {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 2}};
  const std::vector<Edge> e = {{0, 1}};
  g.graph = SimpleGraph(9, e);
  CHECK_FALSE(edges_are_open_plus(g, std::vector<int>{0, 1}));
  CHECK(edges_are_open_plus(g, std::vector<int>{2, 3}));
}

TEST_CASE("classify_sets input checks") {
  const PlacedGraph g = build(explicit_params(16, 4, 0.5, 3), 1);
  CHECK_THROWS_AS(classify_sets(g, std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classify_sets(g, std::vector<int>{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classify_sets(g, std::vector<int>{0, 1, 16}), std::invalid_argument);
}

TEST_CASE("adversarial sets are valid k-sets") {
  const PlacedGraph g = build(derive_params(1000, 0.1), 2);
  const auto sets = adversarial_sets(g, 9, 4);
  CHECK(sets.size() == 9);
  for (const auto& s : sets) {
    CHECK(static_cast<std::int64_t>(s.size()) == g.params().k);
    CHECK_NOTHROW(classify_sets(g, s));
    CHECK(edges_are_open_plus(g, s));
  }
}

TEST_CASE("f function") {
  const Params p = derive_params(10000, 0.1);
  CHECK(f_function(334, 334, p) == 111222.0);
  CHECK(f_function(3, 17, p) == f_function(17, 3, p));
  CHECK_THROWS(f_function(-1, 0, p));
  CHECK_THROWS(f_function(0, 335, p));
  CHECK(binom2(0.5) == 0.0);
  CHECK(binom2(1.0) == 0.0);
  CHECK(binom2(5.0) == 10.0);
  CHECK(binom2(2.5) == doctest::Approx(1.875));
  // non-decreasing in each argument on [pn, k]
  const auto lo = static_cast<std::int64_t>(std::ceil(p.pn()));
  for (std::int64_t a = lo; a < p.k; ++a) {
    CHECK(f_function(a + 1, 200, p) >= f_function(a, 200, p));
    CHECK(f_function(200, a + 1, p) >= f_function(200, a, p));
  }
}

}
