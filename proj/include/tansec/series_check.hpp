#ifndef TANSEC_SERIES_CHECK_HPP
#define TANSEC_SERIES_CHECK_HPP

#include "tansec/trunc_series.hpp"
#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"

#include <string>
#include <vector>

namespace tansec {

struct TanSecPair {
  TruncSeries tan;
  TruncSeries sec;
};

// Solves y' = z^2, z' = yz with y(0) = 0, z(0) = 1 degree by degree.
TanSecPair tan_sec_series(std::size_t order);

// EGF sum_n r^n A_n(x) t^n/n! via the closed form
//   (1-x) / (1 - x e^{r t (1-x)}).
TruncSeries eulerian_egf_series(std::size_t order, int rate = 1);

// Shorthand for the rate-1 case: sum_n A_n(x) t^n/n!.
TruncSeries egf_A_closed(std::size_t order);

struct IdentityReport {
  int n = 0;
  bool ok = false;
  std::string detail;
};

// 2^n d^n/dt^n (tan t + sec t) == P_n(tan t + sec t) as truncated series.
std::vector<IdentityReport> check_prop1(int n_max, std::size_t order);

// sum_k C(n,k) N_k(x) N_{n-k}(x) == 2^n A_n(x) per n, and the same fact
// stated as a series square.
std::vector<IdentityReport> check_thm6(int n_max, const TriangleProvider& prov = clean_provider());
IdentityReport check_n_squared_series(std::size_t order, const TriangleProvider& prov = clean_provider());

}  // namespace tansec

#endif
