#ifndef TANSEC_RATIONAL_HPP
#define TANSEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace tansec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// boost's two-argument rational constructor rejects negative denominators,
// so sign normalization happens here. Results are always gcd-reduced with
// a positive denominator.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline int sign_of(const BigInt& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sign_of(const Rational& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt int_pow(const BigInt& base, int exp);

// 2^exp as an exact rational; exp may be negative.
Rational pow2_signed(int exp);

BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r);  // "p" or "p/q"

}  // namespace tansec

#endif
