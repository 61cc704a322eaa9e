#include "doctest.h"

#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"
#include "tansec/yz_poly.hpp"

#include <stdexcept>

using namespace tansec;

namespace {
YZPoly mono(int ye, int ze, long c = 1) { return YZPoly::monomial(ye, ze, c); }
}  // namespace

TEST_CASE("d_once applies the product rule with D(y)=z^2, D(z)=yz") {
  CHECK(YZPoly::seed_y().d_once() == mono(0, 2));
  CHECK(mono(2, 0).d_once() == mono(1, 2, 2));
  CHECK(mono(1, 1).d_once() == mono(2, 1) + mono(0, 3));
  CHECK(YZPoly().d_once().is_zero());
  CHECK(mono(0, 0, 5).d_once().is_zero());
  // linearity over a sum
  CHECK((mono(2, 0) + mono(1, 1)).d_once() == mono(2, 0).d_once() + mono(1, 1).d_once());
}

TEST_CASE("YZPoly arithmetic, evaluation, homogeneity") {
  YZPoly p = mono(1, 2, 3) + mono(3, 0, -1);
  CHECK(p.coeff(1, 2) == 3);
  CHECK(p.coeff(3, 0) == -1);
  CHECK(p.coeff(0, 0) == 0);
  CHECK(p.scaled(2).coeff(1, 2) == 6);
  CHECK((p + p.scaled(-1)).is_zero());
  CHECK((mono(1, 0) * mono(0, 1)) == mono(1, 1));
  CHECK(p.homogeneous_degree() == 3);
  CHECK_FALSE((p + mono(1, 0)).homogeneous_degree().has_value());
  CHECK(p.eval(2, 1) == 3 * 2 - 8);
  CHECK(p.str() == "3*y*z^2 - y^3");
  CHECK(YZPoly().str() == "0");
}

TEST_CASE("op_iterate matches hand-computed small cases") {
  // n = 0 returns the seed untouched
  CHECK(op_iterate(OpKind::D, SeedKind::Y, 0) == YZPoly::seed_y());
  CHECK(op_iterate(OpKind::DY, SeedKind::YPlusZ, 0) == YZPoly::seed_y_plus_z());

  // (Dy)(y) = D(y^2) = 2 y z^2
  CHECK(op_iterate(OpKind::DY, SeedKind::Y, 1) == mono(1, 2, 2));
  // (yD)(y) = y z^2
  CHECK(op_iterate(OpKind::YD, SeedKind::Y, 1) == mono(1, 2));
  // (Dy)^2(y) = D(y D(y^2)) = 4 y^3 z^2 + 4 y z^4
  CHECK(op_iterate(OpKind::DY, SeedKind::Y, 2) == mono(3, 2, 4) + mono(1, 4, 4));
  // (Dy)(z) = D(yz) = y^2 z + z^3
  CHECK(op_iterate(OpKind::DY, SeedKind::Z, 1) == mono(2, 1) + mono(0, 3));
  // (Dy)(y+z)
  CHECK(op_iterate(OpKind::DY, SeedKind::YPlusZ, 1) ==
        mono(1, 2, 2) + mono(2, 1) + mono(0, 3));

  CHECK_THROWS_AS(op_iterate(OpKind::D, SeedKind::Y, -1), std::invalid_argument);
}

TEST_CASE("iterates are homogeneous of the expected degree") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(op_iterate(OpKind::D, SeedKind::Y, n).homogeneous_degree() == n + 1);
    CHECK(op_iterate(OpKind::DY, SeedKind::Y, n).homogeneous_degree() == 2 * n + 1);
    CHECK(op_iterate(OpKind::YD, SeedKind::Z, n).homogeneous_degree() == 2 * n + 1);
  }
}

TEST_CASE("P_n and Q_n derivative polynomials") {
  UniPoly u = UniPoly::var();
  CHECK(derivative_poly_p(0) == u);
  CHECK(derivative_poly_p(1).str("u") == "1 + u^2");
  CHECK(derivative_poly_p(2).str("u") == "2*u + 2*u^3");
  CHECK(derivative_poly_p(3).str("u") == "2 + 8*u^2 + 6*u^4");
  CHECK(derivative_poly_q(0) == UniPoly(1));
  CHECK(derivative_poly_q(1) == u);
  CHECK(derivative_poly_q(2).str("u") == "1 + 2*u^2");

  // recurrences, a few steps beyond the printed rows
  UniPoly one_plus_u2 = UniPoly(1) + u * u;
  for (int n = 0; n <= 10; ++n) {
    CHECK(derivative_poly_p(n + 1) == one_plus_u2 * derivative_poly_p(n).derivative());
    CHECK(derivative_poly_q(n + 1) ==
          one_plus_u2 * derivative_poly_q(n).derivative() + u * derivative_poly_q(n));
  }
}

TEST_CASE("reduce_canonical splits on z-parity after z^2 -> 1 + y^2") {
  auto [p0a, p1a] = reduce_canonical(mono(0, 2));
  CHECK(p0a.str("u") == "1 + u^2");
  CHECK(p1a.is_zero());

  auto [p0b, p1b] = reduce_canonical(op_iterate(OpKind::D, SeedKind::Y, 3));
  CHECK(p0b == derivative_poly_p(3));
  CHECK(p1b.is_zero());

  auto [p0c, p1c] = reduce_canonical(op_iterate(OpKind::D, SeedKind::Z, 2));
  CHECK(p0c.is_zero());
  CHECK(p1c == derivative_poly_q(2));

  auto [p0d, p1d] = reduce_canonical(YZPoly());
  CHECK(p0d.is_zero());
  CHECK(p1d.is_zero());

  // soundness at a Pythagorean point: z0^2 = 1 + y0^2
  Rational y0 = make_rational(3, 4);
  Rational z0 = make_rational(5, 4);
  YZPoly p = mono(2, 3, 7) + mono(1, 2, -2) + mono(0, 1);
  auto [p0, p1] = reduce_canonical(p);
  CHECK(p.eval(y0, z0) == p0.eval(y0) + z0 * p1.eval(y0));
}

TEST_CASE("extract_row reads triangle rows out of operator iterates") {
  TriangleRow j1 = extract_row(Shape::J, 1, op_iterate(OpKind::DY, SeedKind::YPlusZ, 1));
  CHECK(j1.entries == std::vector<BigInt>{1, 2, 1});
  CHECK(j1.k_min() == 0);

  TriangleRow h1 = extract_row(Shape::H, 1, op_iterate(OpKind::DY, SeedKind::Z, 1));
  CHECK(h1.entries == std::vector<BigInt>{1, 1});

  TriangleRow w3 = extract_row(Shape::W, 3, op_iterate(OpKind::D, SeedKind::Y, 3));
  CHECK(w3.entries == std::vector<BigInt>{4, 2});

  // off-pattern polynomial is rejected
  CHECK_THROWS_AS(extract_row(Shape::H, 1, YZPoly::seed_y()), std::domain_error);
  CHECK_THROWS_AS(extract_row(Shape::W, 2, op_iterate(OpKind::D, SeedKind::Y, 3)),
                  std::domain_error);
}

TEST_CASE("extracted rows agree with the recurrence-built triangles") {
  TriangleProvider prov;
  for (int n = 1; n <= 8; ++n) {
    CHECK(extract_row(Shape::E, n, op_iterate(OpKind::DY, SeedKind::Y, n)) ==
          prov.row(Family::E, n));
    CHECK(extract_row(Shape::H, n, op_iterate(OpKind::DY, SeedKind::Z, n)) ==
          prov.row(Family::H, n));
    CHECK(extract_row(Shape::M, n, op_iterate(OpKind::YD, SeedKind::Y, n)) ==
          prov.row(Family::M, n));
    CHECK(extract_row(Shape::N, n, op_iterate(OpKind::YD, SeedKind::Z, n)) ==
          prov.row(Family::N, n));
    // the J shape indexes by iteration count; the interleaved row is row 2n
    TriangleRow j = extract_row(Shape::J, n, op_iterate(OpKind::DY, SeedKind::YPlusZ, n));
    CHECK(j.entries == interleave_J(n).entries);
    CHECK(j.k_offset == interleave_J(n).k_offset);
  }
}

TEST_CASE("reduce of yD iterates produces the R and T odd/even split") {
  TriangleProvider prov;
  for (int n = 1; n <= 8; ++n) {
    auto ry = reduce_canonical(op_iterate(OpKind::YD, SeedKind::Y, n));
    auto rz = reduce_canonical(op_iterate(OpKind::YD, SeedKind::Z, n));
    CHECK(ry.first == family_poly(Family::R, n, prov));
    CHECK(ry.second.is_zero());
    CHECK(rz.first.is_zero());
    CHECK(rz.second == family_poly(Family::T, n, prov));  // T_n(y) carries the z
  }
}

TEST_CASE("shape_support bounds and shape_monomial exponents") {
  ShapeSupport j2 = shape_support(Shape::J, 2);
  CHECK(j2.k_min == 0);
  CHECK(j2.k_max == 4);
  CHECK(shape_monomial(Shape::J, 1, 0) == YZPoly::Key{2, 1});
  CHECK(shape_monomial(Shape::J, 1, 1) == YZPoly::Key{1, 2});
  CHECK(shape_monomial(Shape::H, 1, 1) == YZPoly::Key{0, 3});
  CHECK(shape_monomial(Shape::W, 3, 0) == YZPoly::Key{2, 2});
  CHECK(shape_monomial(Shape::W, 3, 1) == YZPoly::Key{0, 4});
  CHECK_THROWS_AS(shape_support(Shape::J, 0), std::domain_error);
  CHECK_THROWS_AS(shape_support(Shape::W, 0), std::domain_error);
  CHECK_THROWS_AS(shape_support(Shape::E, -1), std::domain_error);
}
