#ifndef TANSEC_MOMENTS_HPP
#define TANSEC_MOMENTS_HPP

#include "tansec/rational.hpp"
#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"

#include <vector>

namespace tansec {

// Exact first two moments of the coefficient distribution of a row
// polynomial, plus its modes.
struct MomentReport {
  int n = 0;
  BigInt total = 0;        // p(1)
  BigInt d1 = 0;           // p'(1)
  BigInt d2 = 0;           // p''(1)
  Rational mean = 0;
  Rational variance = 0;
  std::vector<int> mode_indices;  // all k attaining the max coefficient
};

MomentReport moment_stats(Family f, int n, const TriangleProvider& prov = clean_provider());

// Exact x_m = N_m'(1) and the companion sum y_m = sum_k k(k-1) N(m,k)
// obey closed forms in double factorials; both are exposed for the
// erratum checks.
BigInt n_row_d1(int n, const TriangleProvider& prov = clean_provider());
BigInt n_row_d2(int n, const TriangleProvider& prov = clean_provider());
BigInt x_closed(int n);  // ((2n+1)!! + (2n-3)!!) / 4
BigInt y_recursive(int n);  // y_{m+1} = (4m-2) x_m + (2m-3) y_m, y_1 = 0

// Normal-approximation quality: sup_k |P(stat <= k) - Phi((k - mu)/sigma)|
// for the coefficient distribution of row n of N.
struct CltPoint {
  int n = 0;
  double mu = 0;
  double sigma = 0;
  double sup_gap = 0;
};

CltPoint clt_report(int n, const TriangleProvider& prov = clean_provider());

}  // namespace tansec

#endif
