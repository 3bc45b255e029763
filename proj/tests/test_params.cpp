#include <cmath>

#include "doctest.h"
#include "trifree/params.hpp"

using namespace trifree;

TEST_SUITE("params") {

TEST_CASE("derived values at n = 10^4") {
  const Params p = derive_params(10000, 0.1);
  // Independent evaluation of the formulas.
  const double ln = std::log(10000.0);
  CHECK(p.N == std::llround(10000.0 / (ln * ln)));
  CHECK(p.N == 118);
  CHECK(p.p == doctest::Approx(0.5 * std::sqrt(ln / 10000.0)).epsilon(1e-14));
  CHECK(p.p == doctest::Approx(0.0151745).epsilon(1e-5));
  CHECK(p.k == 334);
  CHECK_FALSE(p.N_clamped);
  CHECK(p.kappa == doctest::Approx(1.1));
  CHECK(p.eps1 == doctest::Approx(1e-3));
  CHECK(p.eps2 == doctest::Approx(1e-6));
  CHECK(p.C == doctest::Approx(3 * std::sqrt(20.0)));
  CHECK(p.pn() == doctest::Approx(151.745).epsilon(1e-4));
  CHECK(p.t1 == doctest::Approx(std::sqrt(10000 * ln) / std::log(ln)));
  CHECK(p.t2 == doctest::Approx(std::pow(10000.0, 0.35)));
  CHECK(p.t3 == doctest::Approx(std::pow(10000.0, 0.2)));
}

TEST_CASE("small n clamps N to the injection bound") {
  const Params p = derive_params(100, 0.1);
  CHECK(p.N == 10);
  CHECK(p.N_clamped);
  CHECK(p.p == doctest::Approx(0.1073).epsilon(1e-3));
  CHECK(p.k == 24);
  for (std::int64_t n : {100, 1000, 2000, 5000, 10000, 50000}) {
    const Params q = derive_params(n, 0.1);
    CHECK(q.N * q.N >= n);
  }
}

TEST_CASE("beta 1/2 gives p sqrt(n / ln n) = 1/2") {
  for (std::int64_t n : {100, 777, 10000, 123456}) {
    const Params p = derive_params(n, 0.1);
    CHECK(p.p * std::sqrt(n / std::log(static_cast<double>(n))) == doctest::Approx(0.5));
  }
}

TEST_CASE("monotone in n") {
  Params prev = derive_params(100, 0.1);
  for (std::int64_t n = 101; n <= 20000; n += 37) {
    const Params p = derive_params(n, 0.1);
    CHECK(p.N >= prev.N);
    CHECK(p.k >= prev.k);
    CHECK(p.t3 < p.t2);
    CHECK(p.t2 < p.t1);
    CHECK(p.t1 < static_cast<double>(p.k));
    prev = p;
  }
}

TEST_CASE("derived mode rejections") {
  CHECK_THROWS_AS(derive_params(99, 0.1), ParamError);
  CHECK_THROWS_AS(derive_params(1000, 0.0), ParamError);
  CHECK_THROWS_AS(derive_params(1000, 0.3), ParamError);  // t3 >= t2
  CHECK_THROWS_AS(derive_params(1000, 0.1, 1.5), ParamError);
  CHECK_THROWS_AS(derive_params(1000, 0.1, 0.5, 0.9), ParamError);
}

TEST_CASE("explicit params") {
  const Params a = explicit_params(4, 2, 1.0, 2);
  CHECK(a.mode == ParamMode::kExplicit);
  CHECK(a.N == 2);
  CHECK(a.p == 1.0);
  CHECK_NOTHROW(explicit_params(9, 3, 0.5, 3));
  CHECK_NOTHROW(explicit_params(9, 3, 0.0, 3));
  try {
    explicit_params(5, 2, 0.5, 3);
    FAIL("expected ParamError");
  } catch (const ParamError& e) {
    CHECK(std::string(e.what()).find("N^2 >= n") != std::string::npos);
  }
  CHECK_THROWS_AS(explicit_params(9, 3, 1.5, 3), ParamError);
  CHECK_THROWS_AS(explicit_params(9, 3, 0.5, 10), ParamError);
  CHECK_THROWS_AS(explicit_params(9, 3, 0.5, 3, 0.1, 1e-6, 1e-3), ParamError);
}

TEST_CASE("cutoffs in explicit mode") {
  const Params p = explicit_params(9, 3, 0.5, 3);
  CHECK(std::isinf(explicit_params(2, 2, 1.0, 1).t1));
  CHECK(std::isfinite(p.t1));
  CHECK(p.t3 < p.t2);
}

}
