#include "tansec/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tansec {

namespace {
const Rational kZero = 0;
}

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(const BigInt& constant) : UniPoly(Rational(constant)) {}
UniPoly::UniPoly(long constant) : UniPoly(Rational(constant)) {}

UniPoly UniPoly::var() { return monomial(1); }

UniPoly UniPoly::monomial(std::size_t exp, const Rational& coeff) {
  UniPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(exp + 1, Rational(0));
    p.coeffs_[exp] = coeff;
  }
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
  UniPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Rational& UniPoly::coeff(std::size_t exp) const {
  if (exp >= coeffs_.size()) return kZero;
  return coeffs_[exp];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading: zero polynomial");
  return coeffs_.back();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly UniPoly::scaled(const Rational& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

UniPoly UniPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : UniPoly();
  UniPoly r;
  r.coeffs_.assign(coeffs_.size() + k, Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  UniPoly r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  r.trim();
  return r;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::pow(std::size_t e) const {
  UniPoly r(1);
  UniPoly b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out << rational_str(mag);
    } else {
      if (!unit) out << rational_str(mag) << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw std::domain_error("divmod: zero divisor");
  UniPoly q;
  UniPoly r = p;
  auto dd = *d.degree();
  const Rational& lead = d.leading();
  while (!r.is_zero() && *r.degree() >= dd) {
    std::size_t shift = *r.degree() - dd;
    Rational factor = r.leading() / lead;
    q += UniPoly::monomial(shift, factor);
    r -= d * UniPoly::monomial(shift, factor);
  }
  return {q, r};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

UniPoly reversed(const UniPoly& p, std::size_t s) {
  if (p.is_zero()) return p;
  if (*p.degree() > s) throw std::domain_error("reversed: degree exceeds target");
  std::vector<Rational> out(s + 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[s - i] = p.coeff(i);
  return UniPoly::from_coeffs(std::move(out));
}

UniPoly subst_pow(const UniPoly& p, const UniPoly& u, const UniPoly& v, std::size_t s) {
  if (p.is_zero()) return p;
  if (*p.degree() > s) throw std::domain_error("subst_pow: degree exceeds target");
  UniPoly acc;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeff(k) == 0) continue;
    acc += (u.pow(k) * v.pow(s - k)).scaled(p.coeff(k));
  }
  return acc;
}

}  // namespace tansec
