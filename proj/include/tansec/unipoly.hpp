#ifndef TANSEC_UNIPOLY_HPP
#define TANSEC_UNIPOLY_HPP

#include "tansec/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tansec {

// Dense univariate polynomial with exact rational coefficients.
// Trailing zero coefficients are never stored; the zero polynomial is the
// empty coefficient vector and reports no degree (there is no -1 sentinel).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& constant);  // NOLINT: implicit by design, scalars mix freely
  UniPoly(const BigInt& constant);    // NOLINT
  UniPoly(long constant);             // NOLINT

  static UniPoly var();  // x
  static UniPoly monomial(std::size_t exp, const Rational& coeff = Rational(1));
  static UniPoly from_coeffs(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const Rational& coeff(std::size_t exp) const;  // zero outside the stored range
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;  // requires a nonzero polynomial

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs) { *this = *this * rhs; return *this; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  bool operator==(const UniPoly&) const = default;

  UniPoly scaled(const Rational& s) const;
  UniPoly shifted_up(std::size_t k) const;  // multiply by x^k
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly pow(std::size_t e) const;

  // Canonical form, lowest degree first: "2 + 8*x^2 + 6*x^4", "y + y^3",
  // "1/2 + x". Zero prints as "0".
  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// Quotient/remainder with deg r < deg d; d must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d);

// Monic gcd; zero only when both inputs are zero.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// x^s * p(1/x) (coefficient reversal into degree s); requires s >= deg p.
UniPoly reversed(const UniPoly& p, std::size_t s);

// sum_k p_k u(y)^k v(y)^(s-k); requires s >= deg p.
UniPoly subst_pow(const UniPoly& p, const UniPoly& u, const UniPoly& v, std::size_t s);

}  // namespace tansec

#endif
