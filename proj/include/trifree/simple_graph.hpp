#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trifree/bitset.hpp"

namespace trifree {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..order-1 with sorted
// adjacency lists. Common facade over the overlay graph, the baselines and
// hypergraph link graphs.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  // Self-loops are rejected; duplicate and reversed pairs collapse.
  SimpleGraph(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const;

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  BitMatrix bit_rows() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

SimpleGraph from_bit_rows(const BitMatrix& rows);

}  // namespace trifree
