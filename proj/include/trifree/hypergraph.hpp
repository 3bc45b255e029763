#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trifree/construction.hpp"
#include "trifree/params.hpp"
#include "trifree/simple_graph.hpp"

namespace trifree {

// Vertex triple in strictly increasing order.
using Triple = std::array<int, 3>;

Triple make_triple(int a, int b, int c);

// 3-uniform hypergraph with red/blue flags per edge. An edge exists iff it
// carries at least one flag. Product and injected systems also record the
// grid cell of every vertex, which fixes the processing order of the S4
// reduction.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(int order) : order_(order) {}

  int order() const { return order_; }
  void add(const Triple& t, ColorFlags flags);
  // kNoColor removes the edge.
  void set_flags(const Triple& t, ColorFlags flags);
  ColorFlags flags(const Triple& t) const;
  bool contains(const Triple& t) const { return edges_.count(t) != 0; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::map<Triple, ColorFlags>& edges() const { return edges_; }

  const std::vector<Cell>& cells() const { return cells_; }
  void set_cells(std::vector<Cell> cells);

  bool operator==(const TripleSystem&) const = default;

 private:
  int order_ = 0;
  std::map<Triple, ColorFlags> edges_;
  std::vector<Cell> cells_;
};

// Link of `center`: {x, y} is an edge iff {center, x, y} is, with that
// triple's flags.
struct LinkGraph {
  int center = 0;
  int order = 0;
  std::map<Edge, ColorFlags> edges;

  SimpleGraph to_simple_graph() const;
  bool operator==(const LinkGraph&) const = default;
};

LinkGraph extract_link(const TripleSystem& h, int v);

// Per-vertex link adjacency of a single-colour triple set, maintained under
// insertion and removal of triples.
class LinkIndex {
 public:
  explicit LinkIndex(int order, ColorFlags color = kRed);

  // True iff inserting t would create a triangle in the link of one of its
  // three vertices, i.e. an S4 together with triples already present.
  bool closes_triangle(const Triple& t) const;
  void add(const Triple& t);
  void remove(const Triple& t);
  LinkGraph link(int center) const;

 private:
  bool has_common_neighbor(int center, int x, int y) const;

  ColorFlags color_;
  std::vector<std::unordered_map<int, std::set<int>>> adj_;
};

struct ReductionStats {
  std::size_t red_rejected = 0;   // pass (a)
  std::size_t blue_rejected = 0;  // pass (b)
  std::size_t red_removed = 0;    // pass (c)
  std::size_t blue_removed = 0;   // pass (d)

  bool operator==(const ReductionStats&) const = default;
};

// Cells by (row, col); triples by their sorted cell sequences. Systems
// without cells fall back to vertex ids.
std::vector<Triple> lexicographic_order(const TripleSystem& h);

std::pair<TripleSystem, TripleSystem> sample_base_3graphs(const Params& params,
                                                          std::uint64_t seed);

// Cell triples whose rows form a red edge (or columns a blue edge) with all
// six coordinates distinct. Vertex ids are cell indices row * N + col.
TripleSystem hyper_product(const TripleSystem& hr, const TripleSystem& hb);

// Sub-system of h1 induced on the placed cells, relabelled to 0..n-1.
TripleSystem induce_hyper(const TripleSystem& h1, const Placement& placement);
TripleSystem inject_hyper(const TripleSystem& h1, const Params& params, std::uint64_t seed);

// Same result as induce_hyper(hyper_product(hr, hb), placement) without
// materialising the product; enumerates fibres of base edges.
TripleSystem induce_hyper_direct(const TripleSystem& hr, const TripleSystem& hb,
                                 const Placement& placement);

TripleSystem s4_reduction(const TripleSystem& h2, ReductionStats* stats = nullptr);

bool verify_s4_free(const TripleSystem& h);

struct HyperInstance {
  TripleSystem red_base;
  TripleSystem blue_base;
  Placement placement;
  TripleSystem reduced;
  Params params;
  std::uint64_t seed = 0;
  std::size_t h2_edges = 0;
  ReductionStats reduction;

  bool operator==(const HyperInstance&) const = default;
};

HyperInstance build_hyper(const Params& params, std::uint64_t seed);

struct LinkSummary {
  int center = 0;
  std::size_t edges = 0;
  std::uint64_t triangles = 0;
  int alpha_greedy = 0;  // on V minus the centre
  int max_degree = 0;
};

std::vector<LinkSummary> link_summaries(const TripleSystem& h, int restarts = 1,
                                        std::uint64_t seed = 0);

}  // namespace trifree
