#pragma once

#include <cstdint>

#include "trifree/bitset.hpp"
#include "trifree/simple_graph.hpp"

namespace trifree {

// Exact count via forward adjacency: each triangle u < v < w is found once,
// from edge (u, v), by merging the upper parts of both sorted lists.
std::uint64_t count_triangles(const SimpleGraph& g);

// Same count from packed rows: sum over edges u < v of |N(u) & N(v) & (v, n)|.
std::uint64_t count_triangles_bitset(const BitMatrix& rows);
std::uint64_t count_triangles_bitset(const SimpleGraph& g);

inline bool is_triangle_free(const SimpleGraph& g) { return count_triangles(g) == 0; }

}  // namespace trifree
