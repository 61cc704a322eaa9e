#include "tansec/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace tansec {

namespace {

const UniPoly kZeroPoly;

UniPoly xx() { return UniPoly::var() + UniPoly::monomial(2); }  // x + x^2

UniPoly one_plus_2x() { return UniPoly(1) + UniPoly::monomial(1, 2); }

}  // namespace

DiffOpPoly DiffOpPoly::identity() {
  DiffOpPoly op;
  op.coeffs_ = {UniPoly(1)};
  return op;
}

std::size_t DiffOpPoly::max_order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

const UniPoly& DiffOpPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZeroPoly;
}

void DiffOpPoly::set_coeff(std::size_t k, UniPoly c) {
  if (k >= coeffs_.size()) coeffs_.resize(k + 1);
  coeffs_[k] = std::move(c);
  trim();
}

void DiffOpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly DiffOpPoly::apply(const UniPoly& p) const {
  UniPoly acc;
  UniPoly deriv = p;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) acc += coeffs_[k] * deriv;
    deriv = deriv.derivative();
  }
  return acc;
}

std::string DiffOpPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[k].str() << ")";
    if (k == 1) out << "*D";
    else if (k > 1) out << "*D^" << k;
  }
  return out.str();
}

DiffOpPoly left_compose_xxd(const DiffOpPoly& op) {
  // (x+x^2)D(c_k(x) D^k p) = (x+x^2)c_k' D^k p + (x+x^2)c_k D^{k+1} p
  DiffOpPoly r;
  UniPoly mult = xx();
  std::size_t top = op.max_order();
  for (std::size_t k = 0; k <= top + 1; ++k) {
    UniPoly c = op.coeff(k).derivative();
    if (k >= 1) c += op.coeff(k - 1);
    r.set_coeff(k, mult * c);
  }
  return r;
}

DiffOpPoly xxd_power(int n) {
  if (n < 0) throw std::invalid_argument("xxd_power: negative n");
  DiffOpPoly op = DiffOpPoly::identity();
  for (int i = 0; i < n; ++i) op = left_compose_xxd(op);
  return op;
}

std::vector<UniPoly> expand_xxd_power(int n) {
  if (n < 1) throw std::invalid_argument("expand_xxd_power: n must be >= 1");
  DiffOpPoly op = xxd_power(n);
  if (!op.coeff(0).is_zero())
    throw std::logic_error("expand_xxd_power: nonzero D^0 coefficient at n=" + std::to_string(n));
  UniPoly base = xx();
  std::vector<UniPoly> g;
  g.reserve(static_cast<std::size_t>(n));
  UniPoly base_k(1);
  for (int k = 1; k <= n; ++k) {
    base_k *= base;
    auto [q, r] = divmod(op.coeff(static_cast<std::size_t>(k)), base_k);
    if (!r.is_zero())
      throw std::logic_error("expand_xxd_power: (x+x^2)^" + std::to_string(k) +
                             " does not divide the D^" + std::to_string(k) + " coefficient");
    g.push_back(std::move(q));
  }
  return g;
}

namespace {

// it[k-1] holds G_{n,k}; both recurrences start from G_{1,1} = 1.
std::vector<UniPoly> iterate_g(int n, bool right) {
  if (n < 1) throw std::invalid_argument("g coefficients need n >= 1");
  UniPoly mult = xx();
  UniPoly lin = one_plus_2x();
  std::vector<UniPoly> g = {UniPoly(1)};
  for (int m = 1; m < n; ++m) {
    std::vector<UniPoly> next(g.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      int k = static_cast<int>(i) + 1;
      UniPoly acc;
      if (i < g.size()) {
        acc += g[i].scaled(Rational(k)) * lin;
        if (right) {
          if (i + 1 < g.size()) acc += (mult * g[i + 1]).scaled(Rational(k) * Rational(k + 1));
        } else {
          acc += mult * g[i].derivative();
        }
      }
      if (i >= 1) acc += g[i - 1];
      next[i] = std::move(acc);
    }
    g = std::move(next);
  }
  return g;
}

}  // namespace

std::vector<UniPoly> g_coeffs_left(int n) { return iterate_g(n, false); }
std::vector<UniPoly> g_coeffs_right(int n) { return iterate_g(n, true); }

}  // namespace tansec
