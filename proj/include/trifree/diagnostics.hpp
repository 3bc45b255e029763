#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trifree/construction.hpp"
#include "trifree/params.hpp"
#include "trifree/rng.hpp"

namespace trifree {

// One concentration bound over an index set (vertices or vertex pairs of
// V_R u V_B). Two-sided bounds test |value - center| <= allowed; ceilings
// test value <= allowed.
struct BoundCheck {
  std::string name;
  bool two_sided = false;
  double center = 0.0;
  double allowed = 0.0;
  double worst = 0.0;  // max |value - center| or max value
  std::size_t violations = 0;
  std::size_t checked = 0;

  bool pass() const { return violations == 0; }
  double violation_fraction() const {
    return checked ? static_cast<double>(violations) / static_cast<double>(checked) : 0.0;
  }
};

// Vertex index convention for V_R u V_B: red vertex r is r, blue vertex b is
// N + b.
struct ConcentrationReport {
  double eps2 = 0.0;
  double C = 0.0;
  std::vector<int> fiber_size;   // |F(v)|
  std::vector<int> base_degree;  // |N(v)|
  std::vector<int> n3_size;      // |N_3(v)|
  int max_codegree = 0;              // same-side |N(v) & N(w)|
  int max_n3_codegree = 0;           // |N_3(v) & N_3(w)|, all distinct pairs
  int max_projected_codegree_red = 0;   // |pi_B(N_3 v) & pi_B(N_3 w)|, v, w in V_R
  int max_projected_codegree_blue = 0;  // |pi_R(N_3 v) & pi_R(N_3 w)|, v, w in V_B
  std::array<BoundCheck, 7> bounds;

  bool all_pass() const;
};

// Exact fibre, degree and codegree statistics of a built instance against the
// seven concentration bounds. eps2 defaults to params().eps2.
ConcentrationReport concentration_report(const PlacedGraph& instance,
                                         std::optional<double> eps2 = std::nullopt);

enum class SizeClass { kHuge = 0, kLarge = 1, kMedium = 2, kSmall = 3 };

std::string to_string(SizeClass c);

// H: x > t1, L: t2 < x <= t1, M: t3 < x <= t2, S: x <= t3.
SizeClass classify_size(double x, const Params& params);

struct SetClassification {
  std::vector<int> x_size;  // |X_v(I)| per v in V_R u V_B
  std::vector<int> x_plus_size;  // |X+_v(I)|
  std::vector<SizeClass> size_class;
  std::array<std::size_t, 4> class_count{};
  std::array<double, 4> binom_sum{};           // sum of C(|X_v(I)|, 2) per class
  std::array<std::size_t, 4> closed_union{};   // |U_{v in class} C(X_v(I), 2)|
  std::size_t pairs = 0;                       // C(k, 2)
  std::size_t closed = 0;
  std::size_t closed_plus = 0;
  std::size_t open = 0;
  std::size_t open_plus = 0;
};

// `set` is a k-subset of V(G), 0-based. Throws std::invalid_argument when
// |set| != k or it has repeats or out-of-range ids.
SetClassification classify_sets(const PlacedGraph& instance, std::span<const int> set);

// True iff every edge of G inside `set` is an open+ pair.
bool edges_are_open_plus(const PlacedGraph& instance, std::span<const int> set);

// Convex extension of x choose 2: x(x-1)/2 for x >= 1, otherwise 0.
double binom2(double x);

// f(lR, lB) = C(lR,2) + C(lB,2) - m(lR) - m(lB), where
// m(l) = min{ C(k-l, 2), C(pn, 2) + C(k-l-pn, 2) }.
double f_function(std::int64_t l_red, std::int64_t l_blue, const Params& params);

std::vector<int> random_k_set(int n, int k, Rng& rng);

// Structured worst-case candidates: unions of the largest row / column
// fibres, and vertex neighbourhoods padded (or cut) to size k.
std::vector<std::vector<int>> adversarial_sets(const PlacedGraph& instance, int count,
                                               std::uint64_t seed);

}  // namespace trifree
