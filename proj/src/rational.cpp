#include "tansec/rational.hpp"

#include <stdexcept>

namespace tansec {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigInt int_pow(const BigInt& base, int exp) {
  if (exp < 0) throw std::domain_error("int_pow: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

Rational pow2_signed(int exp) {
  if (exp >= 0) return Rational(int_pow(2, exp));
  return make_rational(1, int_pow(2, -exp));
}

BigInt rational_floor(const Rational& r) {
  BigInt q = rat_num(r) / rat_den(r);  // truncates toward zero
  if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

BigInt rational_ceil(const Rational& r) { return -rational_floor(-r); }

std::string rational_str(const Rational& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace tansec
