#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trifree/simple_graph.hpp"

namespace trifree {

enum class IndependenceMethod { kExact, kGreedy, kLocalSearch };

std::string to_string(IndependenceMethod m);

struct IndependenceResult {
  IndependenceMethod method = IndependenceMethod::kGreedy;
  int value = 0;
  std::vector<int> certificate;  // sorted vertex ids
  bool optimal = false;
  std::uint64_t work = 0;  // search nodes (exact) or local-search moves
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

bool is_independent(const SimpleGraph& g, std::span<const int> set);

// Branch and bound for a maximum clique of the complement, with a greedy
// colouring bound over bitset candidate sets. When the budget runs out the
// best set found so far is returned with optimal = false.
IndependenceResult independence_exact(const SimpleGraph& g,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

// Best of: the max-degree neighbourhood (when it is independent, which holds
// in triangle-free graphs), min-degree greedy with random tie-breaking over
// `restarts` streams, each followed by (1,2)-swap local search.
IndependenceResult independence_greedy(const SimpleGraph& g, int restarts = 4,
                                       std::uint64_t seed = 0);

}  // namespace trifree
