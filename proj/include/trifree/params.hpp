#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace trifree {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParamMode { kDerived, kExplicit };

// Scalar parameters of the overlay construction.
//
// Derived mode computes everything from (n, epsilon, beta, kappa) with natural
// logarithms:
//   N  = max(round(n / ln^2 n), ceil(sqrt n))
//   p  = beta * sqrt(ln n / n)
//   k  = ceil(kappa * sqrt(n ln n))
//   t1 = sqrt(n ln n) / ln ln n,  t2 = n^(1/4 + eps),  t3 = n^(2 eps)
//   eps1 = eps^3, eps2 = eps^6,  C = 3 sqrt(20)
// The ceil(sqrt n) floor on N keeps an injection of n vertices into the N x N
// grid possible; it only binds for n below roughly 5500 and is reported via
// N_clamped.
struct Params {
  ParamMode mode = ParamMode::kExplicit;
  std::int64_t n = 0;
  double epsilon = 0.1;
  double beta = 0.5;
  double kappa = 1.1;
  std::int64_t N = 0;
  double p = 0.0;
  std::int64_t k = 0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double C = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  bool N_clamped = false;

  // p * n, the expected size of N_3(v); appears in the f function.
  double pn() const { return p * static_cast<double>(n); }

  bool operator==(const Params&) const = default;
};

inline constexpr std::int64_t kMinDerivedN = 100;
inline constexpr double kDefaultBeta = 0.5;

// kappa defaults to 1 + epsilon.
Params derive_params(std::int64_t n, double epsilon, double beta = kDefaultBeta,
                     std::optional<double> kappa = std::nullopt);

// Verbatim values for desk-scale tests. Cutoffs are computed from n and
// epsilon; t1 is +inf when ln ln n <= 0.
Params explicit_params(std::int64_t n, std::int64_t N, double p, std::int64_t k,
                       double epsilon = 0.1, double eps1 = 1e-3, double eps2 = 1e-6);

// Throws ParamError naming the first violated inequality.
void validate(const Params& params);

double codegree_constant();

std::string to_string(ParamMode mode);

}  // namespace trifree
