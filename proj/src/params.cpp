#include "trifree/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace trifree {
namespace {

[[noreturn]] void fail(const std::string& what) { throw ParamError("invalid params: " + what); }

void compute_cutoffs(Params& p) {
  const double n = static_cast<double>(p.n);
  const double ln = std::log(n);
  const double lnln = ln > 0 ? std::log(ln) : -1.0;
  p.t1 = lnln > 0 ? std::sqrt(n * ln) / lnln : std::numeric_limits<double>::infinity();
  p.t2 = std::pow(n, 0.25 + p.epsilon);
  p.t3 = std::pow(n, 2.0 * p.epsilon);
}

void check_common(const Params& p) {
  if (p.n < 1) fail("n >= 1 required");
  if (p.N < 1) fail("N >= 1 required");
  if (p.N * p.N < p.n) {
    std::ostringstream os;
    os << "N^2 >= n required (N^2 = " << p.N * p.N << " < n = " << p.n << ")";
    fail(os.str());
  }
  if (!(p.p >= 0.0 && p.p <= 1.0)) fail("0 <= p <= 1 required");
  if (p.k < 1 || p.k > p.n) fail("1 <= k <= n required");
  if (!(p.eps2 > 0.0 && p.eps2 < p.eps1)) fail("0 < eps2 < eps1 required");
  if (!(p.eps1 < p.epsilon && p.epsilon < 1.0)) fail("eps1 < epsilon < 1 required");
  if (p.n >= 2 && !(p.t3 < p.t2)) fail("t3 < t2 required (epsilon < 1/4)");
  if (!(p.t2 < p.t1)) fail("t2 < t1 required");
}

}  // namespace

double codegree_constant() { return 3.0 * std::sqrt(20.0); }

std::string to_string(ParamMode mode) {
  return mode == ParamMode::kDerived ? "derived" : "explicit";
}

void validate(const Params& p) {
  check_common(p);
  if (p.mode == ParamMode::kDerived) {
    if (p.N < 2) fail("N >= 2 required");
    if (!(p.p > 0.0)) fail("0 < p required");
    if (!(static_cast<double>(p.k) > p.t1)) fail("t1 < k required");
  }
}

Params derive_params(std::int64_t n, double epsilon, double beta, std::optional<double> kappa) {
  if (n < kMinDerivedN) fail("derived mode needs n >= " + std::to_string(kMinDerivedN));
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail("0 < epsilon < 1 required");
  if (!(beta > 0.0 && beta < 1.0)) fail("0 < beta < 1 required");
  const double kap = kappa.value_or(1.0 + epsilon);
  if (!(kap > 1.0)) fail("kappa > 1 required");

  Params p;
  p.mode = ParamMode::kDerived;
  p.n = n;
  p.epsilon = epsilon;
  p.beta = beta;
  p.kappa = kap;

  const double nd = static_cast<double>(n);
  const double ln = std::log(nd);
  const auto by_formula = static_cast<std::int64_t>(std::llround(nd / (ln * ln)));
  auto min_side = static_cast<std::int64_t>(std::ceil(std::sqrt(nd)));
  while (min_side * min_side < n) ++min_side;
  while ((min_side - 1) * (min_side - 1) >= n) --min_side;
  p.N = std::max(by_formula, min_side);
  p.N_clamped = by_formula < min_side;

  p.p = beta * std::sqrt(ln / nd);
  if (p.p > 1.0) fail("p <= 1 required");
  p.k = static_cast<std::int64_t>(std::ceil(kap * std::sqrt(nd * ln)));
  p.eps1 = epsilon * epsilon * epsilon;
  p.eps2 = p.eps1 * p.eps1;
  p.C = codegree_constant();
  compute_cutoffs(p);
  validate(p);
  return p;
}

Params explicit_params(std::int64_t n, std::int64_t N, double p, std::int64_t k, double epsilon,
                       double eps1, double eps2) {
  Params out;
  out.mode = ParamMode::kExplicit;
  out.n = n;
  out.N = N;
  out.p = p;
  out.k = k;
  out.epsilon = epsilon;
  out.eps1 = eps1;
  out.eps2 = eps2;
  out.beta = 0.0;
  out.kappa = 0.0;
  out.C = codegree_constant();
  if (n >= 1) compute_cutoffs(out);
  validate(out);
  return out;
}

}  // namespace trifree
