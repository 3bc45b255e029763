#include "trifree/simple_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace trifree {

SimpleGraph::SimpleGraph(int order) : adjacency_(static_cast<std::size_t>(order)) {}

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges)
    : adjacency_(static_cast<std::size_t>(order)) {
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::out_of_range("SimpleGraph: vertex out of range");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

BitMatrix SimpleGraph::bit_rows() const {
  BitMatrix rows(adjacency_.size());
  for (int u = 0; u < order(); ++u)
    for (int v : adjacency_[u]) rows.set(u, v);
  return rows;
}

SimpleGraph from_bit_rows(const BitMatrix& rows) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < rows.size(); ++u)
    rows.row(u).for_each([&](std::size_t v) {
      if (u < v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    });
  return SimpleGraph(static_cast<int>(rows.size()), edges);
}

}  // namespace trifree
