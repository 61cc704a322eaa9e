#include "tansec/series_check.hpp"

#include "tansec/yz_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tansec {

TanSecPair tan_sec_series(std::size_t order) {
  if (order < 1) throw std::invalid_argument("tan_sec_series: order must be >= 1");
  // Ordinary coefficients a (tan) and b (sec), solved degree by degree from
  // tan' = sec^2 and sec' = tan*sec.
  std::vector<Rational> a(order + 1), b(order + 1);
  a[0] = 0;
  b[0] = 1;
  for (std::size_t n = 0; n < order; ++n) {
    Rational conv_bb = 0, conv_ab = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      conv_bb += b[i] * b[n - i];
      conv_ab += a[i] * b[n - i];
    }
    Rational div(static_cast<long>(n + 1));
    a[n + 1] = conv_bb / div;
    b[n + 1] = conv_ab / div;
  }
  TanSecPair pair{TruncSeries(order), TruncSeries(order)};
  for (std::size_t n = 0; n <= order; ++n) {
    pair.tan.set_coeff(n, UniPoly(a[n]));
    pair.sec.set_coeff(n, UniPoly(b[n]));
  }
  return pair;
}

TruncSeries eulerian_egf_series(std::size_t order, int rate) {
  if (rate < 1) throw std::invalid_argument("eulerian_egf_series: rate must be >= 1");
  // Clear the denominator of (1-x) / (1 - x e^{r t (1-x)}):
  //   c_n = x * sum_{j=1..n} r^j (1-x)^{j-1} / j! * c_{n-j},  c_0 = 1.
  UniPoly x = UniPoly::var();
  UniPoly one_minus_x = UniPoly(1) - x;
  TruncSeries s(order);
  std::vector<UniPoly> c(order + 1);
  c[0] = UniPoly(1);
  s.set_coeff(0, c[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    UniPoly acc;
    Rational weight = 1;  // r^j / j!
    UniPoly power(1);     // (1-x)^{j-1}
    for (std::size_t j = 1; j <= n; ++j) {
      weight *= Rational(rate) / Rational(static_cast<long>(j));
      if (j > 1) power *= one_minus_x;
      acc += (power * c[n - j]).scaled(weight);
    }
    c[n] = x * acc;
    s.set_coeff(n, c[n]);
  }
  return s;
}

TruncSeries egf_A_closed(std::size_t order) { return eulerian_egf_series(order, 1); }

namespace {

IdentityReport report_eq(int n, bool ok, const std::string& what) {
  IdentityReport r;
  r.n = n;
  r.ok = ok;
  r.detail = ok ? what + " holds" : what + " FAILED";
  return r;
}

}  // namespace

std::vector<IdentityReport> check_prop1(int n_max, std::size_t order) {
  if (static_cast<std::size_t>(n_max) + 2 > order)
    throw std::invalid_argument("check_prop1: order too small for n_max");
  TanSecPair ts = tan_sec_series(order);
  TruncSeries e = ts.tan + ts.sec;
  std::vector<IdentityReport> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  TruncSeries lhs = e;
  for (int n = 0; n <= n_max; ++n) {
    std::size_t cut = order - static_cast<std::size_t>(n);
    TruncSeries rhs = compose_poly(derivative_poly_p(n), e).truncated(cut);
    bool ok = lhs.truncated(cut).scaled(UniPoly(pow2_signed(n))) == rhs;
    out.push_back(report_eq(n, ok, "2^n d^n(tan+sec) = P_n(tan+sec) at n=" + std::to_string(n)));
    if (n < n_max) lhs = lhs.derivative_t();
  }
  return out;
}

std::vector<IdentityReport> check_thm6(int n_max, const TriangleProvider& prov) {
  std::vector<IdentityReport> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    UniPoly conv;
    for (int k = 0; k <= n; ++k)
      conv += (family_poly(Family::N, k, prov) * family_poly(Family::N, n - k, prov))
                  .scaled(Rational(binomial(n, k)));
    UniPoly target = family_poly(Family::A, n, prov).scaled(Rational(int_pow(2, n)));
    bool ok = conv == target;
    std::ostringstream what;
    what << "sum C(n,k) N_k N_{n-k} = 2^n A_n at n=" << n;
    if (!ok) what << " [" << conv.str() << " vs " << target.str() << "]";
    out.push_back(report_eq(n, ok, what.str()));
  }
  return out;
}

IdentityReport check_n_squared_series(std::size_t order, const TriangleProvider& prov) {
  TruncSeries n_series(order);
  Rational inv_fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= Rational(static_cast<long>(n));
    n_series.set_coeff(n, family_poly(Family::N, static_cast<int>(n), prov).scaled(inv_fact));
  }
  bool ok = n_series * n_series == eulerian_egf_series(order, 2);
  return report_eq(static_cast<int>(order), ok,
                   "N(x,t)^2 = (1-x)/(1-x e^{2t(1-x)}) through order " + std::to_string(order));
}

}  // namespace tansec
