#pragma once

#include <cstdint>
#include <limits>

#include "trifree/simple_graph.hpp"

namespace trifree {

struct EdgeDeletionResult {
  SimpleGraph graph;
  std::size_t sampled_edges = 0;
  std::size_t deleted_edges = 0;

  double loss() const {
    return sampled_edges ? static_cast<double>(deleted_edges) / static_cast<double>(sampled_edges)
                         : 0.0;
  }
};

// G(n, p), then for every triangle in lexicographic order that is still
// intact, delete its lexicographically least edge.
EdgeDeletionResult edge_deletion_baseline(int n, double p, std::uint64_t seed);

struct ProcessResult {
  SimpleGraph graph;
  std::uint64_t steps = 0;
  bool maximal = false;  // stopped because no open pair was left
};

// Triangle-free process: add a uniformly random open pair (a non-edge whose
// endpoints have no common neighbour) until none is left or max_steps edges
// have been added.
ProcessResult triangle_free_process(int n, std::uint64_t seed,
                                    std::uint64_t max_steps =
                                        std::numeric_limits<std::uint64_t>::max());

}  // namespace trifree
