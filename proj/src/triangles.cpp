#include "trifree/triangles.hpp"

#include <algorithm>

namespace trifree {

std::uint64_t count_triangles(const SimpleGraph& g) {
  std::uint64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    const auto nu = g.neighbors(u);
    const auto u_up = std::upper_bound(nu.begin(), nu.end(), u);
    for (auto it = u_up; it != nu.end(); ++it) {
      const int v = *it;
      const auto nv = g.neighbors(v);
      auto a = it + 1;
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  return total;
}

std::uint64_t count_triangles_bitset(const BitMatrix& rows) {
  std::uint64_t total = 0;
  const std::size_t n = rows.size();
  for (std::size_t u = 0; u < n; ++u) {
    const Bitset& ru = rows.row(u);
    ru.for_each([&](std::size_t v) {
      if (v <= u) return;
      const auto& a = ru.words();
      const auto& b = rows.row(v).words();
      // Only w > v: mask the word holding v and skip the ones before it.
      std::size_t k = (v + 1) >> 6;
      if (k < a.size()) {
        const unsigned shift = (v + 1) & 63;
        const std::uint64_t mask = shift ? ~((std::uint64_t{1} << shift) - 1) : ~std::uint64_t{0};
        total += std::popcount(a[k] & b[k] & mask);
        for (++k; k < a.size(); ++k) total += std::popcount(a[k] & b[k]);
      }
    });
  }
  return total;
}

std::uint64_t count_triangles_bitset(const SimpleGraph& g) {
  return count_triangles_bitset(g.bit_rows());
}

}  // namespace trifree
