#include "doctest.h"

#include "tansec/rational.hpp"
#include "tansec/trunc_series.hpp"
#include "tansec/unipoly.hpp"

#include <stdexcept>

using namespace tansec;

TEST_CASE("make_rational normalizes sign and reduces") {
  CHECK(make_rational(2, -4) == make_rational(-1, 2));
  CHECK(rat_num(make_rational(2, -4)) == -1);
  CHECK(rat_den(make_rational(2, -4)) == 2);
  CHECK(make_rational(-6, -4) == make_rational(3, 2));
  CHECK(make_rational(0, -7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("floor and ceil agree with the usual conventions on negatives") {
  CHECK(rational_floor(make_rational(7, 2)) == 3);
  CHECK(rational_ceil(make_rational(7, 2)) == 4);
  CHECK(rational_floor(make_rational(-7, 2)) == -4);
  CHECK(rational_ceil(make_rational(-7, 2)) == -3);
  CHECK(rational_floor(Rational(5)) == 5);
  CHECK(rational_ceil(Rational(-5)) == -5);
  CHECK(rational_floor(Rational(0)) == 0);
}

TEST_CASE("factorial, binomial, int_pow, pow2_signed") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));

  CHECK(int_pow(3, 0) == 1);
  CHECK(int_pow(2, 10) == 1024);
  CHECK(int_pow(-2, 3) == -8);
  CHECK_THROWS_AS(int_pow(2, -1), std::domain_error);

  CHECK(pow2_signed(5) == 32);
  CHECK(pow2_signed(0) == 1);
  CHECK(pow2_signed(-3) == make_rational(1, 8));
}

TEST_CASE("rational_str") {
  CHECK(rational_str(make_rational(3, 1)) == "3");
  CHECK(rational_str(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_str(Rational(0)) == "0");
}

TEST_CASE("UniPoly basics and trimming") {
  UniPoly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(z.coeff(0) == 0);
  CHECK(z.coeff(7) == 0);
  CHECK_THROWS_AS(z.leading(), std::domain_error);

  UniPoly x = UniPoly::var();
  CHECK(x.degree() == 1);
  CHECK(x.coeff(1) == 1);
  CHECK((x - x).is_zero());

  UniPoly p = UniPoly::from_coeffs({Rational(1), Rational(0), Rational(3)});
  CHECK(p.degree() == 2);
  CHECK(p.leading() == 3);
  CHECK(p.coeff(1) == 0);

  // from_coeffs strips trailing zeros
  UniPoly q = UniPoly::from_coeffs({Rational(2), Rational(0), Rational(0)});
  CHECK(q.degree() == 0);
}

TEST_CASE("UniPoly arithmetic") {
  UniPoly x = UniPoly::var();
  UniPoly p = x * x + x.scaled(4) + UniPoly(3);  // x^2 + 4x + 3
  UniPoly q = x + UniPoly(1);
  CHECK(p == (x + UniPoly(3)) * q);
  CHECK(p - p == UniPoly());
  CHECK((-p) + p == UniPoly());
  CHECK(p.eval(2) == 15);
  CHECK(p.eval(make_rational(-1, 2)) == make_rational(5, 4));
  CHECK(p.derivative() == x.scaled(2) + UniPoly(4));
  CHECK(x.shifted_up(3) == UniPoly::monomial(4));
  CHECK(q.pow(3) == UniPoly::from_coeffs({Rational(1), Rational(3), Rational(3), Rational(1)}));
  CHECK(q.pow(0) == UniPoly(1));
}

TEST_CASE("UniPoly canonical string form") {
  UniPoly x = UniPoly::var();
  CHECK(UniPoly().str() == "0");
  CHECK(x.str() == "x");
  CHECK((-x).str() == "-x");
  CHECK(UniPoly::monomial(2, make_rational(1, 2)).str() == "1/2*x^2");
  CHECK((UniPoly(1) - x).str() == "1 - x");
  CHECK((UniPoly(2) + UniPoly::monomial(2, 8) + UniPoly::monomial(4, 6)).str() ==
        "2 + 8*x^2 + 6*x^4");
  CHECK((x + x * x * x).str("y") == "y + y^3");
}

TEST_CASE("divmod and poly_gcd") {
  UniPoly x = UniPoly::var();
  UniPoly p = x.pow(3) - UniPoly(1);
  UniPoly d = x - UniPoly(1);
  auto [q, r] = divmod(p, d);
  CHECK(r.is_zero());
  CHECK(q == x * x + x + UniPoly(1));
  CHECK(q * d + r == p);

  auto [q2, r2] = divmod(x * x + UniPoly(1), x.scaled(2));
  CHECK(q2 * x.scaled(2) + r2 == x * x + UniPoly(1));
  CHECK(*r2.degree() < 1);

  CHECK_THROWS_AS(divmod(p, UniPoly()), std::domain_error);

  CHECK(poly_gcd(p, x * x - UniPoly(1)) == x - UniPoly(1));  // monic
  CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(poly_gcd(x.scaled(3), UniPoly()) == x);
}

TEST_CASE("reversed and subst_pow") {
  UniPoly x = UniPoly::var();
  UniPoly p = UniPoly(1) + x.scaled(4) + x.pow(2);  // 1 + 4x + x^2
  CHECK(reversed(p, 2) == p);                       // palindromic
  CHECK(reversed(x, 3) == UniPoly::monomial(2));    // x^3 * (1/x)
  CHECK(reversed(p, 4) == UniPoly::monomial(2) + UniPoly::monomial(3, 4) + UniPoly::monomial(4));
  CHECK_THROWS_AS(reversed(p, 1), std::domain_error);

  // p(k) coefficients against u^k v^(s-k): binomial theorem check
  UniPoly u = x;
  UniPoly v = UniPoly(1) + x;
  UniPoly s = subst_pow(UniPoly::from_coeffs({Rational(1), Rational(2), Rational(1)}), u, v, 2);
  CHECK(s == (u + v).pow(2));
  CHECK_THROWS_AS(subst_pow(x.pow(3), u, v, 2), std::domain_error);
}

TEST_CASE("TruncSeries arithmetic and EGF extraction") {
  TruncSeries s(4);
  for (std::size_t n = 0; n <= 4; ++n) s.set_coeff(n, UniPoly(1));
  TruncSeries sq = s * s;
  for (std::size_t n = 0; n <= 4; ++n) CHECK(sq.coeff(n) == UniPoly(long(n) + 1));

  CHECK(s.egf_coeff(4) == UniPoly(24));
  CHECK((s - s).coeff(3).is_zero());
  CHECK(s.truncated(2).order() == 2);
  CHECK_THROWS_AS(s.truncated(9), std::invalid_argument);
  CHECK_THROWS_AS(s.coeff(5), std::out_of_range);

  TruncSeries t(3);
  CHECK_THROWS_AS(s + t, std::invalid_argument);
  CHECK_THROWS_AS(s * t, std::invalid_argument);

  TruncSeries d = s.derivative_t();
  CHECK(d.order() == 3);
  CHECK(d.coeff(2) == UniPoly(3));
}

TEST_CASE("series_exp_affine and compose_poly") {
  // exp(c t) with scalar c: coefficient of t^n is c^n/n!
  TruncSeries e = series_exp_affine(UniPoly(2), 5);
  CHECK(e.coeff(0) == UniPoly(1));
  CHECK(e.coeff(3) == UniPoly(make_rational(8, 6)));
  CHECK(e.egf_coeff(3) == UniPoly(8));

  // exp(x t): EGF coefficient n is x^n
  UniPoly x = UniPoly::var();
  TruncSeries ex = series_exp_affine(x, 4);
  CHECK(ex.egf_coeff(4) == x.pow(4));

  // compose_poly(p, s) = p evaluated at the series
  TruncSeries t(4);
  t.set_coeff(1, UniPoly(1));  // s = t
  UniPoly p = UniPoly(1) + x + x.pow(2);
  TruncSeries comp = compose_poly(p, t);
  CHECK(comp.coeff(0) == UniPoly(1));
  CHECK(comp.coeff(1) == UniPoly(1));
  CHECK(comp.coeff(2) == UniPoly(1));
  CHECK(comp.coeff(3).is_zero());

  CHECK(TruncSeries::constant(x, 3).coeff(0) == x);
}

TEST_CASE("TruncSeries string form uses scalar coefficients") {
  TruncSeries s(3);
  s.set_coeff(0, UniPoly(1));
  s.set_coeff(2, UniPoly(make_rational(1, 2)));
  CHECK(s.str() == "1 + 1/2*t^2");
  s.set_coeff(1, UniPoly::var());
  CHECK_THROWS_AS(s.str(), std::domain_error);
}
