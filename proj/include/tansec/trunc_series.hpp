#ifndef TANSEC_TRUNC_SERIES_HPP
#define TANSEC_TRUNC_SERIES_HPP

#include "tansec/unipoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tansec {

// Power series in t truncated at a fixed order, with UniPoly coefficients.
// Coefficients are stored in ordinary form (coefficient of t^n); the EGF
// view n! * c_n is applied only at extraction. Arithmetic never grows the
// order silently.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  static TruncSeries constant(const UniPoly& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const UniPoly& coeff(std::size_t n) const;
  void set_coeff(std::size_t n, UniPoly c);
  UniPoly egf_coeff(std::size_t n) const;  // n! * c_n

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }
  // Truncated product; both operands must have the same order.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const UniPoly& s) const;
  TruncSeries derivative_t() const;  // d/dt, order drops by one
  TruncSeries truncated(std::size_t new_order) const;
  bool operator==(const TruncSeries&) const = default;

  std::string str(const std::string& tvar = "t") const;  // scalar coefficients only

 private:
  std::vector<UniPoly> coeffs_;
};

// sum_{n<=order} c(x)^n t^n / n!
TruncSeries series_exp_affine(const UniPoly& c, std::size_t order);

// p(s) by Horner at the order of s.
TruncSeries compose_poly(const UniPoly& p, const TruncSeries& s);

}  // namespace tansec

#endif
