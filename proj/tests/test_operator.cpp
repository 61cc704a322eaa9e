#include "doctest.h"

#include "tansec/diff_op.hpp"
#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"

#include <stdexcept>
#include <vector>

using namespace tansec;

namespace {
UniPoly x() { return UniPoly::var(); }
UniPoly xxsq() { return x() + x() * x(); }
}  // namespace

TEST_CASE("DiffOpPoly identity and application") {
  DiffOpPoly id = DiffOpPoly::identity();
  CHECK(id.max_order() == 0);
  UniPoly p = UniPoly(3) + x().pow(4);
  CHECK(id.apply(p) == p);

  DiffOpPoly d;  // x D^1 + 2
  d.set_coeff(0, UniPoly(2));
  d.set_coeff(1, x());
  CHECK(d.apply(x().pow(3)) == x().pow(3).scaled(2) + x() * x().pow(2).scaled(3));
  CHECK(d.apply(UniPoly()) == UniPoly());
  CHECK(d.max_order() == 1);

  // trailing zero coefficients trim away
  d.set_coeff(1, UniPoly());
  CHECK(d.max_order() == 0);

  CHECK(DiffOpPoly() == DiffOpPoly());
  CHECK(DiffOpPoly().apply(p).is_zero());
}

TEST_CASE("powers of (x + x^2) D generate the W polynomials when applied to x") {
  CHECK(xxd_power(0).apply(x()) == x());
  CHECK(xxd_power(1).apply(x()).str() == "x + x^2");
  CHECK(xxd_power(2).apply(x()).str() == "x + 3*x^2 + 2*x^3");
  CHECK(xxd_power(3).apply(x()).str() == "x + 7*x^2 + 12*x^3 + 6*x^4");
  CHECK(xxd_power(4).apply(x()).str() == "x + 15*x^2 + 50*x^3 + 60*x^4 + 24*x^5");
  CHECK_THROWS_AS(xxd_power(-1), std::invalid_argument);
}

TEST_CASE("left composition agrees with recomputing the power") {
  DiffOpPoly op = xxd_power(3);
  CHECK(left_compose_xxd(op) == xxd_power(4));
  CHECK(left_compose_xxd(DiffOpPoly::identity()) == xxd_power(1));
}

TEST_CASE("expansion in the (x+x^2)^k D^k basis") {
  auto g2 = expand_xxd_power(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].str() == "1 + 2*x");
  CHECK(g2[1] == UniPoly(1));

  auto g3 = expand_xxd_power(3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0].str() == "1 + 6*x + 6*x^2");
  CHECK(g3[1].str() == "3 + 6*x");
  CHECK(g3[2] == UniPoly(1));

  CHECK_THROWS_AS(expand_xxd_power(0), std::invalid_argument);
}

TEST_CASE("all three routes to the G coefficients coincide") {
  for (int n = 1; n <= 8; ++n) {
    auto expanded = expand_xxd_power(n);
    auto left = g_coeffs_left(n);
    auto right = g_coeffs_right(n);
    REQUIRE(left.size() == static_cast<std::size_t>(n));
    CHECK(expanded == left);
    CHECK(left == right);
  }
}

TEST_CASE("G coefficient ladder: top entry, bottom constant, degrees") {
  for (int n = 1; n <= 10; ++n) {
    auto g = g_coeffs_left(n);
    CHECK(g.back() == UniPoly(1));   // G_{n,n} = 1
    CHECK(g.front().eval(0) == 1);   // G_{n,1}(0) = 1
    for (int k = 1; k <= n; ++k)
      CHECK(g[static_cast<std::size_t>(k - 1)].degree() == static_cast<std::size_t>(n - k));
  }
}

TEST_CASE("the expansion ties the G triangle and the Stirling numbers together") {
  TriangleProvider prov;
  for (int n = 1; n <= 9; ++n) {
    auto g = g_coeffs_right(n);
    // the k=1 coefficient carries the whole G row: G_{n,1} = sum G(n,k) x^{k-1}
    CHECK(g.front() == family_poly(Family::G, n));
    // constant terms down the ladder are plain Stirling numbers
    for (int k = 1; k <= n; ++k)
      CHECK(g[static_cast<std::size_t>(k - 1)].eval(0) == prov.entry(Family::S, n, k));
  }
  // G(3,k) = k! S(3,k)
  const TriangleRow& g3 = prov.row(Family::G, 3);
  CHECK(g3.entries == std::vector<BigInt>{1, 6, 6});
  for (int k = 1; k <= 3; ++k)
    CHECK(g3.get(k) == factorial(k) * prov.entry(Family::S, 3, k));
}

TEST_CASE("operator expansion applied to monomials matches direct iteration") {
  for (int n = 1; n <= 6; ++n) {
    auto g = expand_xxd_power(n);
    for (int m = 0; m <= 6; ++m) {
      UniPoly p = UniPoly::monomial(static_cast<std::size_t>(m));
      UniPoly direct = xxd_power(n).apply(p);
      UniPoly assembled;
      UniPoly deriv = p;
      for (int k = 1; k <= n; ++k) {
        deriv = deriv.derivative();
        assembled += g[static_cast<std::size_t>(k - 1)] * xxsq().pow(static_cast<std::size_t>(k)) * deriv;
      }
      CHECK(assembled == direct);
    }
  }
}
