#ifndef TANSEC_DIFF_OP_HPP
#define TANSEC_DIFF_OP_HPP

#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"

#include <string>
#include <vector>

namespace tansec {

// Differential operator sum_k c_k(x) D^k acting on Q[x], D = d/dx.
class DiffOpPoly {
 public:
  DiffOpPoly() = default;

  static DiffOpPoly identity();

  std::size_t max_order() const;           // largest k with c_k != 0
  const UniPoly& coeff(std::size_t k) const;
  void set_coeff(std::size_t k, UniPoly c);

  UniPoly apply(const UniPoly& p) const;
  bool operator==(const DiffOpPoly&) const = default;
  std::string str() const;

 private:
  std::vector<UniPoly> coeffs_;  // coeffs_[k] multiplies D^k
  void trim();
};

// Left composition with (x + x^2) D: coefficients of ((x+x^2)D) . op.
DiffOpPoly left_compose_xxd(const DiffOpPoly& op);

// ((x + x^2) D)^n as an expanded operator.
DiffOpPoly xxd_power(int n);

// Writes ((x+x^2)D)^n = sum_{k=1..n} G_{n,k}(x) (x+x^2)^k D^k and returns
// [G_{n,1}, ..., G_{n,n}]. The division by (x+x^2)^k must be exact and the
// D^0 coefficient must vanish; either failure is a hard error.
std::vector<UniPoly> expand_xxd_power(int n);

// Same coefficients by the composition recurrences, without touching the
// operator form:
//   left:  G_{n+1,k} = k(1+2x) G_{n,k} + (x+x^2) G_{n,k}' + G_{n,k-1}
//   right: G_{n+1,k} = k(1+2x) G_{n,k} + k(k+1)(x+x^2) G_{n,k+1} + G_{n,k-1}
std::vector<UniPoly> g_coeffs_left(int n);
std::vector<UniPoly> g_coeffs_right(int n);

}  // namespace tansec

#endif
