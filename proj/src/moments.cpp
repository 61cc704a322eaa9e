#include "tansec/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace tansec {

MomentReport moment_stats(Family f, int n, const TriangleProvider& prov) {
  const TriangleRow& row = prov.row(f, n);
  UniPoly p = family_poly(f, n, prov);
  UniPoly d1 = p.derivative();
  UniPoly d2 = d1.derivative();
  Rational total = p.eval(1);
  if (total == 0) throw std::domain_error("moment_stats: empty distribution");
  MomentReport rep;
  rep.n = n;
  rep.total = rat_num(total);
  rep.d1 = rat_num(d1.eval(1));
  rep.d2 = rat_num(d2.eval(1));
  rep.mean = Rational(rep.d1) / total;
  rep.variance = Rational(rep.d2) / total + rep.mean - rep.mean * rep.mean;
  BigInt best = row.entries.front();
  for (const BigInt& e : row.entries) best = std::max(best, e);
  for (int k = row.k_min(); k <= row.k_max(); ++k)
    if (row.at(k) == best) rep.mode_indices.push_back(k);
  return rep;
}

BigInt n_row_d1(int n, const TriangleProvider& prov) {
  return rat_num(family_poly(Family::N, n, prov).derivative().eval(1));
}

BigInt n_row_d2(int n, const TriangleProvider& prov) {
  return rat_num(family_poly(Family::N, n, prov).derivative().derivative().eval(1));
}

BigInt x_closed(int n) {
  if (n < 1) throw std::domain_error("x_closed: n must be >= 1");
  // ((2n+1)!! + (2n-3)!!) / 4 = n^2 (2n-3)!!, always integral.
  return BigInt(n) * n * double_factorial(2L * n - 3);
}

BigInt y_recursive(int n) {
  if (n < 1) throw std::domain_error("y_recursive: n must be >= 1");
  BigInt y = 0;
  for (int m = 1; m < n; ++m) y = (4 * m - 2) * x_closed(m) + (2 * m - 3) * y;
  return y;
}

CltPoint clt_report(int n, const TriangleProvider& prov) {
  if (n < 1 || n > 200) throw std::out_of_range("clt_report: n must be in [1,200]");
  const TriangleRow& row = prov.row(Family::N, n);
  MomentReport m = moment_stats(Family::N, n, prov);
  CltPoint pt;
  pt.n = n;
  pt.mu = to_double(m.mean);
  pt.sigma = std::sqrt(to_double(m.variance));
  BigInt cum = 0;
  for (int k = row.k_min(); k <= row.k_max(); ++k) {
    cum += row.at(k);
    double cdf = to_double(make_rational(cum, m.total));
    double phi = 0.5 * std::erfc(-(k - pt.mu) / (pt.sigma * std::sqrt(2.0)));
    pt.sup_gap = std::max(pt.sup_gap, std::abs(cdf - phi));
  }
  return pt;
}

}  // namespace tansec
