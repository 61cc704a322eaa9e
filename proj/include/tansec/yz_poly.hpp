#ifndef TANSEC_YZ_POLY_HPP
#define TANSEC_YZ_POLY_HPP

#include "tansec/rational.hpp"
#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tansec {

// Element of Z[y,z]. The differential rules D(y) = z^2, D(z) = yz are
// applied formally; nothing here assumes z^2 = 1 + y^2.
class YZPoly {
 public:
  using Key = std::pair<int, int>;  // (y exponent, z exponent)

  YZPoly() = default;

  static YZPoly monomial(int ye, int ze, BigInt coeff = 1);
  static YZPoly seed_y() { return monomial(1, 0); }
  static YZPoly seed_z() { return monomial(0, 1); }
  static YZPoly seed_y_plus_z() { return seed_y() + seed_z(); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coeff(int ye, int ze) const;

  YZPoly& operator+=(const YZPoly& o);
  YZPoly operator+(const YZPoly& o) const;
  YZPoly operator*(const YZPoly& o) const;
  YZPoly scaled(const BigInt& c) const;
  bool operator==(const YZPoly&) const = default;

  // Total degree if every term has the same one.
  std::optional<int> homogeneous_degree() const;

  Rational eval(const Rational& y0, const Rational& z0) const;
  std::string str() const;

  // The derivation itself: sum over terms of the product rule.
  YZPoly d_once() const;
  YZPoly mul_y() const;

 private:
  std::map<Key, BigInt> terms_;  // nonzero coefficients only
  void add_term(const Key& k, const BigInt& c);
};

enum class OpKind { D, DY, YD };     // D, p -> D(y p), p -> y D(p)
enum class SeedKind { Y, Z, YPlusZ };

YZPoly seed_poly(SeedKind s);
YZPoly apply_op_once(OpKind op, const YZPoly& p);
YZPoly op_iterate(OpKind op, SeedKind seed, int n);

// Row-extraction shapes: which (y,z) exponent pair carries entry k of row n.
enum class Shape { E, H, J, M, N, W, Wl };

struct ShapeSupport {
  int k_min;
  int k_max;
};

ShapeSupport shape_support(Shape s, int n);
YZPoly::Key shape_monomial(Shape s, int n, int k);

// Reads row n out of an iterated-operator polynomial. Every term of p
// must sit on the shape's support; anything off-pattern is an error.
TriangleRow extract_row(Shape s, int n, const YZPoly& p);

// p mod (z^2 - y^2 - 1) split as p0(y) + p1(y) z, substituting
// z^2 -> 1 + y^2 termwise.
std::pair<UniPoly, UniPoly> reduce_canonical(const YZPoly& p);

// P_n, Q_n with D^n(y) = P_n(y), D^n(z) = z Q_n(y):
//   P_0 = u,  P_{n+1} = (1+u^2) P_n'
//   Q_0 = 1,  Q_{n+1} = (1+u^2) Q_n' + u Q_n
UniPoly derivative_poly_p(int n);
UniPoly derivative_poly_q(int n);

}  // namespace tansec

#endif
