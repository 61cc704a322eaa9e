#include "tansec/yz_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tansec {

namespace {

Rational rat_pow(const Rational& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

void YZPoly::add_term(const Key& k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

YZPoly YZPoly::monomial(int ye, int ze, BigInt coeff) {
  if (ye < 0 || ze < 0) throw std::invalid_argument("YZPoly: negative exponent");
  YZPoly p;
  p.add_term({ye, ze}, coeff);
  return p;
}

BigInt YZPoly::coeff(int ye, int ze) const {
  auto it = terms_.find({ye, ze});
  return it == terms_.end() ? BigInt(0) : it->second;
}

YZPoly& YZPoly::operator+=(const YZPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

YZPoly YZPoly::operator+(const YZPoly& o) const {
  YZPoly r = *this;
  r += o;
  return r;
}

YZPoly YZPoly::operator*(const YZPoly& o) const {
  YZPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

YZPoly YZPoly::scaled(const BigInt& c) const {
  YZPoly r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

std::optional<int> YZPoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [k, v] : terms_) {
    int d = k.first + k.second;
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

Rational YZPoly::eval(const Rational& y0, const Rational& z0) const {
  Rational acc = 0;
  for (const auto& [k, v] : terms_) acc += Rational(v) * rat_pow(y0, k.first) * rat_pow(z0, k.second);
  return acc;
}

std::string YZPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    bool neg = v < 0;
    BigInt mag = neg ? BigInt(-v) : v;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool bare = (k.first == 0 && k.second == 0);
    if (mag != 1 || bare) {
      out << mag.str();
      if (!bare) out << "*";
    }
    if (k.first > 0) {
      out << "y";
      if (k.first > 1) out << "^" << k.first;
    }
    if (k.second > 0) {
      if (k.first > 0) out << "*";
      out << "z";
      if (k.second > 1) out << "^" << k.second;
    }
  }
  return out.str();
}

YZPoly YZPoly::d_once() const {
  YZPoly r;
  for (const auto& [k, c] : terms_) {
    auto [a, b] = k;
    if (a > 0) r.add_term({a - 1, b + 2}, c * a);  // D(y) = z^2
    if (b > 0) r.add_term({a + 1, b}, c * b);      // D(z) = yz
  }
  return r;
}

YZPoly YZPoly::mul_y() const {
  YZPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + 1, k.second}, c);
  return r;
}

YZPoly seed_poly(SeedKind s) {
  switch (s) {
    case SeedKind::Y: return YZPoly::seed_y();
    case SeedKind::Z: return YZPoly::seed_z();
    case SeedKind::YPlusZ: return YZPoly::seed_y_plus_z();
  }
  throw std::logic_error("seed_poly: unhandled seed");
}

YZPoly apply_op_once(OpKind op, const YZPoly& p) {
  switch (op) {
    case OpKind::D: return p.d_once();
    case OpKind::DY: return p.mul_y().d_once();
    case OpKind::YD: return p.d_once().mul_y();
  }
  throw std::logic_error("apply_op_once: unhandled op");
}

YZPoly op_iterate(OpKind op, SeedKind seed, int n) {
  if (n < 0) throw std::invalid_argument("op_iterate: negative n");
  YZPoly p = seed_poly(seed);
  for (int i = 0; i < n; ++i) p = apply_op_once(op, p);
  return p;
}

ShapeSupport shape_support(Shape s, int n) {
  switch (s) {
    case Shape::E:
      if (n < 0) break;
      return n == 0 ? ShapeSupport{0, 0} : ShapeSupport{1, n};
    case Shape::H:
      if (n < 0) break;
      return {0, n};
    case Shape::J:
      if (n < 1) break;  // (Dy)^0(y+z) = y+z does not fit the row pattern
      return {0, 2 * n};
    case Shape::M:
    case Shape::N:
      if (n < 1) break;
      return {1, n};
    case Shape::W:
      if (n < 1) break;  // D^0(y) = y carries no z power
      return {0, (n - 1) / 2};
    case Shape::Wl:
      if (n < 0) break;
      return {0, n / 2};
  }
  throw std::domain_error("shape_support: n out of range for this shape");
}

YZPoly::Key shape_monomial(Shape s, int n, int k) {
  switch (s) {
    case Shape::E: return {2 * n - 2 * k + 1, 2 * k};
    case Shape::H: return {2 * n - 2 * k, 2 * k + 1};
    case Shape::J: return {2 * n - k, k + 1};
    case Shape::M: return {2 * k - 1, 2 * n - 2 * k + 2};
    case Shape::N: return {2 * k, 2 * n - 2 * k + 1};
    case Shape::W: return {n - 2 * k - 1, 2 * k + 2};
    case Shape::Wl: return {n - 2 * k, 2 * k + 1};
  }
  throw std::logic_error("shape_monomial: unhandled shape");
}

TriangleRow extract_row(Shape s, int n, const YZPoly& p) {
  ShapeSupport sup = shape_support(s, n);
  TriangleRow row;
  row.n = n;
  row.k_offset = sup.k_min;
  row.entries.assign(static_cast<std::size_t>(sup.k_max - sup.k_min + 1), BigInt(0));
  std::map<YZPoly::Key, int> slot;
  for (int k = sup.k_min; k <= sup.k_max; ++k) slot[shape_monomial(s, n, k)] = k;
  for (const auto& [key, c] : p.terms()) {
    auto it = slot.find(key);
    if (it == slot.end())
      throw std::domain_error("extract_row: unexpected monomial y^" + std::to_string(key.first) +
                              " z^" + std::to_string(key.second) + " at n=" + std::to_string(n));
    row.entries[static_cast<std::size_t>(it->second - sup.k_min)] = c;
  }
  return row;
}

std::pair<UniPoly, UniPoly> reduce_canonical(const YZPoly& p) {
  UniPoly one_plus_y2 = UniPoly(1) + UniPoly::monomial(2);
  UniPoly p0, p1;
  for (const auto& [key, c] : p.terms()) {
    UniPoly term = UniPoly::monomial(static_cast<std::size_t>(key.first), Rational(c)) *
                   one_plus_y2.pow(static_cast<std::size_t>(key.second / 2));
    (key.second % 2 == 0 ? p0 : p1) += term;
  }
  return {p0, p1};
}

UniPoly derivative_poly_p(int n) {
  if (n < 0) throw std::invalid_argument("derivative_poly_p: negative n");
  UniPoly one_plus_u2 = UniPoly(1) + UniPoly::monomial(2);
  UniPoly p = UniPoly::var();
  for (int i = 0; i < n; ++i) p = one_plus_u2 * p.derivative();
  return p;
}

UniPoly derivative_poly_q(int n) {
  if (n < 0) throw std::invalid_argument("derivative_poly_q: negative n");
  UniPoly one_plus_u2 = UniPoly(1) + UniPoly::monomial(2);
  UniPoly u = UniPoly::var();
  UniPoly q(1);
  for (int i = 0; i < n; ++i) q = one_plus_u2 * q.derivative() + u * q;
  return q;
}

}  // namespace tansec
