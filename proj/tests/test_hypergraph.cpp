#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "trifree/hypergraph.hpp"
#include "trifree/rng.hpp"
#include "trifree/triangles.hpp"

using namespace trifree;

namespace {

TripleSystem complete3(int n, ColorFlags c) {
  TripleSystem h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) h.add({a, b, d}, c);
  return h;
}

TripleSystem random3(int n, double p, Rng& rng) {
  TripleSystem h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) {
        ColorFlags f = 0;
        if (bernoulli(rng, p)) f |= kRed;
        if (bernoulli(rng, p)) f |= kBlue;
        if (f) h.add({a, b, d}, f);
      }
  return h;
}

}  // namespace

TEST_SUITE("hypergraph") {

TEST_CASE("triple system basics") {
  TripleSystem h(5);
  const Triple t = make_triple(4, 0, 2);
  CHECK(t == Triple{0, 2, 4});
  CHECK_THROWS(make_triple(1, 1, 2));
  h.add(t, kRed);
  h.add(t, kBlue);
  CHECK(h.flags(t) == kBothColors);
  h.set_flags(t, kBlue);
  CHECK(h.flags(t) == kBlue);
  h.set_flags(t, kNoColor);
  CHECK_FALSE(h.contains(t));
  CHECK_THROWS(h.add({0, 2, 5}, kRed));
}

TEST_CASE("base 3-graphs") {
  const auto [r1, b1] = sample_base_3graphs(explicit_params(25, 6, 1.0, 5), 1);
  CHECK(r1.edge_count() == 20);
  CHECK(b1.edge_count() == 20);
  const auto [r0, b0] = sample_base_3graphs(explicit_params(25, 6, 0.0, 5), 1);
  CHECK(r0.edge_count() + b0.edge_count() == 0);
  CHECK_THROWS(sample_base_3graphs(explicit_params(4, 2, 0.5, 2), 1));

  const Params p = explicit_params(400, 20, 0.1, 10);
  double sum = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) sum += static_cast<double>(sample_base_3graphs(p, s).first.edge_count());
  const double sigma = std::sqrt(1140 * 0.1 * 0.9 / seeds);
  CHECK(std::abs(sum / seeds - 114.0) < 3 * sigma);
}

TEST_CASE("product of a single red edge on N = 3") {
  TripleSystem hr(3), hb(3);
  hr.add({0, 1, 2}, kRed);
  const TripleSystem h1 = hyper_product(hr, hb);
  CHECK(h1.edge_count() == 6);
  // brute force over all cell triples
  std::size_t expected = 0;
  for (int x = 0; x < 9; ++x)
    for (int y = x + 1; y < 9; ++y)
      for (int z = y + 1; z < 9; ++z) {
        const int rows[] = {x / 3, y / 3, z / 3};
        const int cols[] = {x % 3, y % 3, z % 3};
        const bool rows_edge = std::set<int>(rows, rows + 3).size() == 3;
        const bool cols_distinct = std::set<int>(cols, cols + 3).size() == 3;
        const bool edge = rows_edge && cols_distinct;
        expected += edge;
        CHECK(h1.contains({x, y, z}) == edge);
        if (edge) CHECK(h1.flags({x, y, z}) == kRed);
      }
  CHECK(expected == 6);
  CHECK(hyper_product(TripleSystem(3), TripleSystem(3)).edge_count() == 0);
}

TEST_CASE("repeated coordinates never form an edge") {
  const TripleSystem hr = complete3(4, kRed), hb = complete3(4, kBlue);
  const TripleSystem h1 = hyper_product(hr, hb);
  for (const auto& [t, c] : h1.edges()) {
    std::set<int> rows, cols;
    for (int v : t) {
      rows.insert(v / 4);
      cols.insert(v % 4);
    }
    CHECK(rows.size() == 3);
    CHECK(cols.size() == 3);
    CHECK(c == kBothColors);
  }
}

TEST_CASE("direct induction equals product then induction") {
  for (int s = 0; s < 10; ++s) {
    const Params p = explicit_params(20 + s, 6, 0.3 + 0.05 * s, 4);
    const auto [hr, hb] = sample_base_3graphs(p, s);
    const Placement place = sample_injection(p, s);
    const TripleSystem a = induce_hyper(hyper_product(hr, hb), place);
    const TripleSystem b = induce_hyper_direct(hr, hb, place);
    CHECK(a.edges() == b.edges());
    CHECK(inject_hyper(hyper_product(hr, hb), p, s).edges() == a.edges());
  }
}

TEST_CASE("links") {
  const TripleSystem k4 = complete3(4, kRed);
  for (int v = 0; v < 4; ++v) {
    const LinkGraph l = extract_link(k4, v);
    CHECK(l.edges.size() == 3);
    CHECK(count_triangles(l.to_simple_graph()) == 1);
  }
  CHECK(extract_link(TripleSystem(5), 2).edges.empty());
  TripleSystem one(5);
  one.add({1, 2, 4}, kBlue);
  const LinkGraph l = extract_link(one, 2);
  CHECK(l.edges.size() == 1);
  CHECK(l.edges.at({1, 4}) == kBlue);

  Rng rng = child_stream(4, "test/links");
  const TripleSystem h = random3(9, 0.3, rng);
  std::size_t total = 0;
  for (int v = 0; v < 9; ++v) {
    const LinkGraph lv = extract_link(h, v);
    CHECK(lv.edges == oracle::link(h, v));
    total += lv.edges.size();
  }
  CHECK(total == 3 * h.edge_count());
}

TEST_CASE("link index tracks insertions and removals") {
  Rng rng = child_stream(8, "test/index");
  const TripleSystem h = random3(10, 0.25, rng);
  LinkIndex index(10, kRed);
  TripleSystem mirror(10);
  std::vector<Triple> added;
  for (const auto& [t, c] : h.edges()) {
    if (!(c & kRed)) continue;
    index.add(t);
    mirror.add(t, kRed);
    added.push_back(t);
    if (added.size() % 3 == 0) {
      index.remove(added[added.size() / 2]);
      mirror.set_flags(added[added.size() / 2], kNoColor);
    }
  }
  for (int v = 0; v < 10; ++v) CHECK(index.link(v) == extract_link(mirror, v));
}

TEST_CASE("reduction of the three-triple star") {
  TripleSystem h(4);
  h.add({0, 1, 2}, kRed);
  h.add({0, 1, 3}, kRed);
  h.add({0, 2, 3}, kRed);
  CHECK_FALSE(verify_s4_free(h));
  ReductionStats st;
  const TripleSystem out = s4_reduction(h, &st);
  CHECK(out.edge_count() == 2);
  CHECK(out.contains({0, 1, 2}));
  CHECK(out.contains({0, 1, 3}));
  CHECK(st.red_rejected == 1);
  CHECK(verify_s4_free(out));
  CHECK(s4_reduction(TripleSystem(6)).edge_count() == 0);
}

TEST_CASE("mixed S4 loses its odd edge") {
  TripleSystem h(4);
  h.add({0, 1, 2}, kBlue);
  h.add({0, 1, 3}, kBlue);
  h.add({0, 2, 3}, kRed);
  ReductionStats st;
  const TripleSystem out = s4_reduction(h, &st);
  CHECK(st.red_removed == 1);
  CHECK_FALSE(out.contains({0, 2, 3}));
  CHECK(out.edge_count() == 2);
}

TEST_CASE("dual triple keeps its red flag when blue is rejected") {
  TripleSystem h(4);
  h.add({0, 1, 2}, kBlue);
  h.add({0, 1, 3}, kBlue);
  h.add({0, 2, 3}, kBothColors);
  const TripleSystem out = s4_reduction(h);
  // blue copy rejected in the blue pass, red copy then removed as the odd edge
  CHECK(verify_s4_free(out));
  CHECK(oracle::s4_free(out));
}

TEST_CASE("small systems are S4-free iff the scan says so") {
  Rng rng = child_stream(6, "test/s4");
  TripleSystem two(5);
  two.add({0, 1, 2}, kRed);
  two.add({0, 1, 3}, kRed);
  CHECK(verify_s4_free(two));
  for (int t = 0; t < 60; ++t) {
    const TripleSystem h = random3(5 + t % 5, 0.05 + 0.02 * (t % 10), rng);
    CHECK(verify_s4_free(h) == oracle::s4_free(h));
    const TripleSystem r = s4_reduction(h);
    CHECK(verify_s4_free(r));
    CHECK(oracle::s4_free(r));
    for (const auto& [tr, c] : r.edges()) CHECK((c & ~h.flags(tr)) == 0);
  }
}

TEST_CASE("built instances") {
  const Params p = explicit_params(40, 7, 0.5, 6);
  const HyperInstance a = build_hyper(p, 3);
  CHECK(a == build_hyper(p, 3));
  CHECK(verify_s4_free(a.reduced));
  CHECK(oracle::s4_free(a.reduced));
  CHECK(a.reduced.edge_count() <= a.h2_edges);
  const auto links = link_summaries(a.reduced);
  CHECK(links.size() == 40);
  for (const auto& l : links) {
    CHECK(l.triangles == 0);
    CHECK(l.alpha_greedy >= l.max_degree);
  }
}

TEST_CASE("lexicographic order uses cells") {
  TripleSystem h(4);
  h.set_cells({{2, 0}, {0, 1}, {1, 2}, {0, 0}});
  h.add({0, 1, 2}, kRed);
  h.add({1, 2, 3}, kRed);
  h.add({0, 1, 3}, kRed);
  const auto order = lexicographic_order(h);
  // sorted cell sequences: {1,2,3} -> (0,0)(0,1)(1,2); {0,1,3} -> (0,0)(0,1)(2,0);
  // {0,1,2} -> (0,1)(1,2)(2,0)
  CHECK(order == std::vector<Triple>{{1, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

}
