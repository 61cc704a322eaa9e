#include "tansec/trunc_series.hpp"

#include <sstream>
#include <stdexcept>

namespace tansec {

TruncSeries TruncSeries::constant(const UniPoly& c, std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const UniPoly& TruncSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) throw std::out_of_range("TruncSeries::coeff: past the order");
  return coeffs_[n];
}

void TruncSeries::set_coeff(std::size_t n, UniPoly c) {
  if (n >= coeffs_.size()) throw std::out_of_range("TruncSeries::set_coeff: past the order");
  coeffs_[n] = std::move(c);
}

UniPoly TruncSeries::egf_coeff(std::size_t n) const {
  return coeff(n).scaled(Rational(factorial(static_cast<int>(n))));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch");
  TruncSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= b.order(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncSeries TruncSeries::scaled(const UniPoly& s) const {
  TruncSeries r(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
  return r;
}

TruncSeries TruncSeries::derivative_t() const {
  if (order() == 0) throw std::domain_error("derivative_t: order 0 series");
  TruncSeries r(order() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_[i - 1] = coeffs_[i].scaled(Rational(static_cast<long>(i)));
  return r;
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated: cannot extend");
  TruncSeries r(new_order);
  for (std::size_t i = 0; i <= new_order; ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

std::string TruncSeries::str(const std::string& tvar) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const UniPoly& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (c.degree() != std::optional<std::size_t>(0) && i > 0)
      throw std::domain_error("TruncSeries::str: nonscalar coefficient");
    UniPoly asMono = UniPoly::monomial(i, c.coeff(0));
    std::string term = asMono.str(tvar);
    if (first) {
      out << term;
      first = false;
    } else if (term[0] == '-') {
      out << " - " << term.substr(1);
    } else {
      out << " + " << term;
    }
  }
  if (first) return "0";
  return out.str();
}

TruncSeries series_exp_affine(const UniPoly& c, std::size_t order) {
  TruncSeries s(order);
  UniPoly term(1);
  Rational inv_fact = 1;
  s.set_coeff(0, term);
  for (std::size_t n = 1; n <= order; ++n) {
    term = term * c;
    inv_fact /= Rational(static_cast<long>(n));
    s.set_coeff(n, term.scaled(inv_fact));
  }
  return s;
}

TruncSeries compose_poly(const UniPoly& p, const TruncSeries& s) {
  TruncSeries acc = TruncSeries::constant(UniPoly(), s.order());
  if (p.is_zero()) return acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * s;
    if (*it != 0) acc += TruncSeries::constant(UniPoly(*it), s.order());
  }
  return acc;
}

}  // namespace tansec
