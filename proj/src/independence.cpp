#include "trifree/independence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trifree/bitset.hpp"
#include "trifree/rng.hpp"

namespace trifree {

std::string to_string(IndependenceMethod m) {
  switch (m) {
    case IndependenceMethod::kExact:
      return "exact";
    case IndependenceMethod::kGreedy:
      return "greedy";
    case IndependenceMethod::kLocalSearch:
      return "local-search";
  }
  return "unknown";
}

bool is_independent(const SimpleGraph& g, std::span<const int> set) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int v : set) {
    if (v < 0 || v >= g.order() || in[v]) return false;
    in[v] = 1;
  }
  for (int v : set)
    for (int w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

namespace {

// Min-degree greedy with uniform tie-breaking among the current minimum
// residual degree. Bucket lists with position indices give O(n + m).
std::vector<int> min_degree_greedy(const SimpleGraph& g, Rng& rng) {
  const int n = g.order();
  std::vector<int> deg(n), pos(n);
  std::vector<char> alive(n, 1);
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(g.max_degree()) + 1);
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    pos[v] = static_cast<int>(bucket[deg[v]].size());
    bucket[deg[v]].push_back(v);
  }
  auto unlink = [&](int v) {
    auto& b = bucket[deg[v]];
    const int last = b.back();
    b[pos[v]] = last;
    pos[last] = pos[v];
    b.pop_back();
  };
  std::vector<int> chosen;
  int remaining = n;
  int low = 0;
  while (remaining > 0) {
    while (bucket[low].empty()) ++low;
    auto& b = bucket[low];
    const int v = b[uniform_below(rng, b.size())];
    chosen.push_back(v);
    // Remove v and its live neighbours; decrement their neighbours' degrees.
    std::vector<int> removed{v};
    for (int w : g.neighbors(v))
      if (alive[w]) removed.push_back(w);
    for (int x : removed) {
      unlink(x);
      alive[x] = 0;
      --remaining;
    }
    for (int x : removed)
      for (int y : g.neighbors(x)) {
        if (!alive[y]) continue;
        unlink(y);
        --deg[y];
        pos[y] = static_cast<int>(bucket[deg[y]].size());
        bucket[deg[y]].push_back(y);
        low = std::min(low, deg[y]);
      }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class LocalSearch {
 public:
  explicit LocalSearch(const SimpleGraph& g) : g_(g) {
    if (g.order() <= kBitRowCap) rows_ = g.bit_rows();
  }

  bool adjacent(int u, int v) const {
    return rows_.size() ? rows_.test(u, v) : g_.adjacent(u, v);
  }

  // (1,2)-swaps plus free insertions until no move applies.
  std::vector<int> improve(const std::vector<int>& start, std::uint64_t& moves) {
    const int n = g_.order();
    in_.assign(n, 0);
    tight_.assign(n, 0);
    for (int v : start) insert(v);
    for (int v = 0; v < n; ++v)
      if (!in_[v] && tight_[v] == 0) {
        insert(v);
        ++moves;
      }
    bool improved = true;
    while (improved) {
      improved = false;
      for (int x = 0; x < n; ++x) {
        if (!in_[x]) continue;
        std::vector<int> cand;
        for (int u : g_.neighbors(x))
          if (tight_[u] == 1) cand.push_back(u);
        bool done = false;
        for (std::size_t a = 0; a < cand.size() && !done; ++a)
          for (std::size_t b = a + 1; b < cand.size() && !done; ++b)
            if (!adjacent(cand[a], cand[b])) {
              erase(x);
              insert(cand[a]);
              insert(cand[b]);
              for (int w : g_.neighbors(x))
                if (!in_[w] && tight_[w] == 0) insert(w);
              done = true;
            }
        if (done) {
          ++moves;
          improved = true;
        }
      }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (in_[v]) out.push_back(v);
    return out;
  }

 private:
  static constexpr int kBitRowCap = 20000;

  void insert(int v) {
    in_[v] = 1;
    for (int w : g_.neighbors(v)) ++tight_[w];
  }
  void erase(int v) {
    in_[v] = 0;
    for (int w : g_.neighbors(v)) --tight_[w];
  }

  const SimpleGraph& g_;
  BitMatrix rows_;
  std::vector<char> in_;
  std::vector<int> tight_;
};

class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, std::uint64_t budget) : budget_(budget) {
    const int n = g.order();
    // Vertices with small degree in g (large degree in the complement) first.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order_[i]] = i;
    comp_ = BitMatrix(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Bitset& row = comp_.row(i);
      for (int j = 0; j < n; ++j)
        if (j != i) row.set(j);
      for (int w : g.neighbors(order_[i])) row.reset(rank[w]);
    }
  }

  void seed_best(const std::vector<int>& set) {
    best_.clear();
    std::vector<int> rank(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) rank[order_[i]] = static_cast<int>(i);
    for (int v : set) best_.push_back(rank[v]);
  }

  void run() {
    Bitset all(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) all.set(i);
    std::vector<int> current;
    if (all.any()) expand(all, current);
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<int> best() const {
    std::vector<int> out;
    for (int i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(Bitset candidates, std::vector<int>& current) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<int> verts, colour;
    Bitset uncoloured = candidates;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      while (q.any()) {
        const auto v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.and_not(comp_.row(v));
        verts.push_back(static_cast<int>(v));
        colour.push_back(c);
      }
    }
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colour[idx]) <= best_.size()) return;
      const int v = verts[idx];
      current.push_back(v);
      Bitset next = candidates & comp_.row(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      candidates.reset(v);
      if (aborted_) return;
    }
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> order_;
  BitMatrix comp_;
  std::vector<int> best_;
};

}  // namespace

IndependenceResult independence_exact(const SimpleGraph& g, std::uint64_t node_budget) {
  IndependenceResult r;
  r.method = IndependenceMethod::kExact;
  Rng rng = child_stream(0, "exact/incumbent");
  CliqueSearch search(g, node_budget);
  search.seed_best(min_degree_greedy(g, rng));
  search.run();
  r.certificate = search.best();
  r.value = static_cast<int>(r.certificate.size());
  r.optimal = !search.aborted();
  r.work = search.nodes();
  return r;
}

IndependenceResult independence_greedy(const SimpleGraph& g, int restarts, std::uint64_t seed) {
  IndependenceResult best;
  best.method = IndependenceMethod::kGreedy;
  if (g.order() == 0) return best;

  LocalSearch search(g);
  auto consider = [&](std::vector<int> start) {
    std::uint64_t moves = 0;
    const std::size_t before = start.size();
    std::vector<int> improved = search.improve(start, moves);
    best.work += moves;
    if (static_cast<int>(improved.size()) > best.value) {
      best.value = static_cast<int>(improved.size());
      best.certificate = std::move(improved);
      best.method = best.certificate.size() > before ? IndependenceMethod::kLocalSearch
                                                     : IndependenceMethod::kGreedy;
    }
  };

  int hub = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(hub)) hub = v;
  std::vector<int> hood(g.neighbors(hub).begin(), g.neighbors(hub).end());
  if (!hood.empty() && is_independent(g, hood)) consider(hood);

  for (int r = 0; r < std::max(restarts, 1); ++r) {
    Rng rng = child_stream(seed, "greedy/" + std::to_string(r));
    consider(min_degree_greedy(g, rng));
  }
  return best;
}

}  // namespace trifree
