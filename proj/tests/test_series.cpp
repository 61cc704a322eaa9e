#include "doctest.h"

#include "tansec/oracles.hpp"
#include "tansec/series_check.hpp"
#include "tansec/triangles.hpp"
#include "tansec/trunc_series.hpp"
#include "tansec/unipoly.hpp"

#include <cstddef>
#include <stdexcept>

using namespace tansec;

TEST_CASE("tangent and secant series, low order") {
  TanSecPair ts = tan_sec_series(6);
  CHECK(ts.tan.str("t") == "t + 1/3*t^3 + 2/15*t^5");
  CHECK(ts.sec.str("t") == "1 + 1/2*t^2 + 5/24*t^4 + 61/720*t^6");
  CHECK_THROWS_AS(tan_sec_series(0), std::invalid_argument);
}

TEST_CASE("tangent is odd, secant is even") {
  TanSecPair ts = tan_sec_series(14);
  for (std::size_t n = 0; n <= 14; n += 2) CHECK(ts.tan.coeff(n).is_zero());
  for (std::size_t n = 1; n <= 14; n += 2) CHECK(ts.sec.coeff(n).is_zero());
}

TEST_CASE("the defining differential system holds through the truncation") {
  const std::size_t K = 12;
  TanSecPair ts = tan_sec_series(K);
  TruncSeries one = TruncSeries::constant(UniPoly(1), K - 1);
  CHECK(ts.tan.derivative_t() == ((ts.tan * ts.tan).truncated(K - 1) + one));
  CHECK(ts.sec.derivative_t() == (ts.tan * ts.sec).truncated(K - 1));
  // and the Pythagorean combination
  CHECK((ts.sec * ts.sec - ts.tan * ts.tan).truncated(K) ==
        TruncSeries::constant(UniPoly(1), K));
}

TEST_CASE("EGF coefficients of tan + sec count alternating permutations") {
  TanSecPair ts = tan_sec_series(10);
  TruncSeries e = ts.tan + ts.sec;
  for (int n = 0; n <= 10; ++n)
    CHECK(e.egf_coeff(static_cast<std::size_t>(n)) ==
          UniPoly(alternating_count(n)));
}

TEST_CASE("Eulerian EGF closed form reproduces the A rows at both rates") {
  TruncSeries s1 = eulerian_egf_series(10);
  CHECK(s1.egf_coeff(0) == UniPoly(1));
  for (int n = 1; n <= 10; ++n)
    CHECK(s1.egf_coeff(static_cast<std::size_t>(n)) == family_poly(Family::A, n));

  TruncSeries s2 = eulerian_egf_series(10, 2);
  for (int n = 0; n <= 10; ++n) {
    UniPoly an = n == 0 ? UniPoly(1) : family_poly(Family::A, n);
    CHECK(s2.egf_coeff(static_cast<std::size_t>(n)) == an.scaled(int_pow(2, n)));
  }

  CHECK(egf_A_closed(8) == eulerian_egf_series(8, 1));
  CHECK_THROWS_AS(eulerian_egf_series(8, 0), std::invalid_argument);
}

TEST_CASE("derivative identity for tan + sec in series form") {
  auto reports = check_prop1(8, 12);
  REQUIRE(reports.size() == 9);
  for (const auto& r : reports) {
    CAPTURE(r.n);
    CAPTURE(r.detail);
    CHECK(r.ok);
  }
  CHECK_THROWS_AS(check_prop1(11, 12), std::invalid_argument);
}

TEST_CASE("binomial convolution of the N rows against the doubled A rows") {
  auto reports = check_thm6(12);
  REQUIRE(reports.size() == 13);
  for (const auto& r : reports) {
    CAPTURE(r.n);
    CHECK(r.ok);
  }
  IdentityReport sq = check_n_squared_series(12);
  CAPTURE(sq.detail);
  CHECK(sq.ok);
}
