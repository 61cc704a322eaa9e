#include "tansec/triangles.hpp"

#include <stdexcept>
#include <utility>

namespace tansec {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::S: return "S";
    case Family::E: return "E";
    case Family::H: return "H";
    case Family::LittleA: return "a";
    case Family::G: return "G";
    case Family::LittleF: return "f";
    case Family::M: return "M";
    case Family::N: return "N";
    case Family::R: return "R";
    case Family::T: return "T";
  }
  throw std::logic_error("family_name: unhandled family");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

const BigInt& TriangleRow::at(int k) const {
  if (k < k_min() || k > k_max())
    throw std::out_of_range("TriangleRow: k=" + std::to_string(k) + " outside row " + std::to_string(n));
  return entries[static_cast<std::size_t>(k - k_offset)];
}

BigInt TriangleRow::get(int k) const {
  if (k < k_min() || k > k_max()) return 0;
  return entries[static_cast<std::size_t>(k - k_offset)];
}

namespace {

int support_zero(int) { return 0; }
int support_one(int) { return 1; }
int support_n(int n) { return n; }
// A and E put their single n=0 entry at k=0, then live on 1..n.
int support_one_after_first(int n) { return n == 0 ? 0 : 1; }

TriangleRow unit_row(int n, int k) {
  TriangleRow r;
  r.n = n;
  r.k_offset = k;
  r.entries = {BigInt(1)};
  return r;
}

// a(1,.) = [1,1] from W_1 = x + x^2; W_0 = x exists only as the polynomial
// convention, not as a registered row.
TriangleRow worpitzky_seed() {
  TriangleRow r;
  r.n = 1;
  r.k_offset = 0;
  r.entries = {BigInt(1), BigInt(1)};
  return r;
}

TriangleRow next_row(const TriangleSpec& spec, const TriangleRow& prev) {
  TriangleRow r;
  r.n = prev.n + 1;
  r.k_offset = spec.k_min(r.n);
  int hi = spec.k_max(r.n);
  r.entries.reserve(static_cast<std::size_t>(hi - r.k_offset + 1));
  for (int k = r.k_offset; k <= hi; ++k)
    r.entries.push_back(spec.alpha.eval(prev.n, k) * prev.get(k) +
                        spec.beta.eval(prev.n, k) * prev.get(k - 1));
  return r;
}

std::map<Family, TriangleSpec> build_registry() {
  std::map<Family, TriangleSpec> reg;
  auto add = [&reg](Family f, AffineNK alpha, AffineNK beta, TriangleRow initial,
                    int (*k_min)(int), int (*k_max)(int)) {
    reg[f] = TriangleSpec{f, alpha, beta, initial.n, std::move(initial), k_min, k_max};
  };
  // AffineNK is {c0, cn, ck} for c0 + cn*n + ck*k, evaluated at the previous row's n.
  add(Family::A, {0, 0, 1}, {2, 1, -1}, unit_row(0, 0), support_one_after_first, support_n);
  add(Family::B, {1, 0, 2}, {3, 2, -2}, unit_row(0, 0), support_zero, support_n);
  add(Family::S, {0, 0, 1}, {1, 0, 0}, unit_row(0, 0), support_zero, support_n);
  add(Family::E, {0, 0, 2}, {4, 2, -2}, unit_row(0, 0), support_one_after_first, support_n);
  add(Family::H, {1, 0, 2}, {3, 2, -2}, unit_row(0, 0), support_zero, support_n);
  add(Family::LittleA, {1, 0, 1}, {0, 0, 1}, worpitzky_seed(), support_zero, support_n);
  add(Family::G, {0, 0, 1}, {0, 0, 1}, unit_row(1, 1), support_one, support_n);
  add(Family::LittleF, {1, 0, 2}, {0, 0, 2}, unit_row(0, 0), support_zero, support_n);
  add(Family::M, {-1, 0, 2}, {4, 2, -2}, unit_row(1, 1), support_one, support_n);
  add(Family::N, {0, 0, 2}, {3, 2, -2}, unit_row(1, 1), support_one, support_n);
  add(Family::R, {1, 0, 2}, {-1, 0, 2}, unit_row(0, 0), support_zero, support_n);
  add(Family::T, {0, 0, 2}, {-1, 0, 2}, unit_row(1, 1), support_one, support_n);
  return reg;
}

void apply_fault(const std::optional<FaultSpec>& fault, TriangleRow& row, Family f) {
  if (!fault || fault->family != f || fault->n != row.n) return;
  if (fault->k < row.k_min() || fault->k > row.k_max())
    throw std::invalid_argument("fault target outside row support: " + family_name(f) + "(" +
                                std::to_string(fault->n) + "," + std::to_string(fault->k) + ")");
  row.entries[static_cast<std::size_t>(fault->k - row.k_offset)] += 1;
}

}  // namespace

const TriangleSpec& named_spec(Family f) {
  static const std::map<Family, TriangleSpec> registry = build_registry();
  return registry.at(f);
}

std::vector<TriangleRow> generate_triangle(const TriangleSpec& spec, int rows) {
  if (rows < 1) throw std::invalid_argument("generate_triangle: rows must be >= 1");
  std::vector<TriangleRow> out;
  out.reserve(static_cast<std::size_t>(rows));
  out.push_back(spec.initial);
  while (static_cast<int>(out.size()) < rows) out.push_back(next_row(spec, out.back()));
  return out;
}

const TriangleRow& TriangleProvider::row(Family f, int n) const {
  const TriangleSpec& spec = named_spec(f);
  if (n < spec.first_n)
    throw std::out_of_range(family_name(f) + " has no row " + std::to_string(n));
  auto& rows = cache_[f];
  if (rows.empty()) {
    rows.push_back(spec.initial);
    apply_fault(fault_, rows.back(), f);
  }
  // A corrupted row corrupts everything generated after it, as a real
  // table bug would.
  while (rows.back().n < n) {
    rows.push_back(next_row(spec, rows.back()));
    apply_fault(fault_, rows.back(), f);
  }
  return rows[static_cast<std::size_t>(n - spec.first_n)];
}

UniPoly TriangleProvider::poly(Family f, int n) const { return family_poly(f, n, *this); }

const TriangleProvider& clean_provider() {
  static const TriangleProvider instance;
  return instance;
}

UniPoly row_poly(const TriangleRow& row, long exp_scale, long exp_offset) {
  UniPoly p;
  for (int k = row.k_min(); k <= row.k_max(); ++k) {
    long e = exp_scale * k + exp_offset;
    if (e < 0) throw std::domain_error("row_poly: negative exponent");
    p += UniPoly::monomial(static_cast<std::size_t>(e), Rational(row.at(k)));
  }
  return p;
}

UniPoly family_poly(Family f, int n, const TriangleProvider& prov) {
  // N_0 = T_0 = 1 and W_0 = x although those triangles start at n=1 (the
  // conventions the convolution and substitution identities rely on).
  if (n == 0 && (f == Family::N || f == Family::T)) return UniPoly(1);
  if (n == 0 && f == Family::LittleA) return UniPoly::var();
  switch (f) {
    case Family::LittleA: return row_poly(prov.row(f, n), 1, 1);  // W_n(x)
    case Family::G: return row_poly(prov.row(f, n), 1, -1);
    case Family::LittleF:
    case Family::T: return row_poly(prov.row(f, n), 2, 0);
    case Family::R: return row_poly(prov.row(f, n), 2, 1);
    default: return row_poly(prov.row(f, n), 1, 0);
  }
}

std::string family_variable(Family f) {
  switch (f) {
    case Family::LittleF:
    case Family::R:
    case Family::T: return "y";
    default: return "x";
  }
}

BigInt explicit_entry(Family f, int n, int k, const TriangleProvider& prov) {
  switch (f) {
    case Family::A: {
      BigInt s = 0;
      for (int i = 0; i <= k; ++i) {
        BigInt term = binomial(n + 1, i) * int_pow(BigInt(k - i), n);
        s += (i % 2 == 0) ? term : -term;
      }
      return s;
    }
    case Family::B: {
      BigInt s = 0;
      for (int i = 0; i <= k; ++i) {
        BigInt term = binomial(n + 1, i) * int_pow(BigInt(2 * (k - i) + 1), n);
        s += (i % 2 == 0) ? term : -term;
      }
      return s;
    }
    case Family::N: {
      // 2^{n-2i} is fractional for i > n/2; the sum still lands on an integer.
      Rational s = 0;
      for (int i = 1; i <= k; ++i) {
        Rational term = pow2_signed(n - 2 * i) * Rational(binomial(2 * i, i)) *
                        Rational(binomial(n - i, k - i)) * Rational(factorial(i)) *
                        Rational(prov.entry(Family::S, n, i));
        s += ((k - i) % 2 == 0) ? term : -term;
      }
      if (!is_integer(s)) throw std::logic_error("explicit_entry(N): non-integer sum");
      return rat_num(s);
    }
    default:
      throw std::invalid_argument("explicit_entry: no closed form for family " + family_name(f));
  }
}

TriangleRow interleave_J(int n, const TriangleProvider& prov) {
  if (n < 1) throw std::domain_error("interleave_J: n must be >= 1");
  const TriangleRow& a = prov.row(Family::A, n);
  const TriangleRow& b = prov.row(Family::B, n);
  BigInt p2 = int_pow(2, n);
  TriangleRow r;
  r.n = 2 * n;
  r.k_offset = 0;
  r.entries.resize(static_cast<std::size_t>(2 * n + 1));
  for (int k = 0; k <= n; ++k) r.entries[static_cast<std::size_t>(2 * k)] = b.get(k);
  for (int k = 1; k <= n; ++k) r.entries[static_cast<std::size_t>(2 * k - 1)] = p2 * a.get(k);
  return r;
}

UniPoly j_poly(int n, const TriangleProvider& prov) { return row_poly(interleave_J(n, prov), 1, 0); }

TriangleRow worpitzky_from_A(int n, const TriangleProvider& prov) {
  if (n < 1) throw std::domain_error("worpitzky_from_A: n must be >= 1");
  const TriangleRow& a = prov.row(Family::A, n);
  TriangleRow r;
  r.n = n;
  r.k_offset = 0;
  r.entries.resize(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    BigInt s = 0;
    for (int i = n - j; i <= n; ++i) s += binomial(i, n - j) * a.get(i);
    r.entries[static_cast<std::size_t>(j)] = s;
  }
  return r;
}

UniPoly n_poly_closed(int n, const TriangleProvider& prov) {
  if (n < 1) throw std::domain_error("n_poly_closed: n must be >= 1");
  UniPoly x = UniPoly::var();
  UniPoly one_minus_x = UniPoly(1) - x;
  UniPoly acc;
  for (int k = 1; k <= n; ++k) {
    Rational scalar = pow2_signed(n - 2 * k) * Rational(binomial(2 * k, k)) *
                      Rational(factorial(k)) * Rational(prov.entry(Family::S, n, k));
    if (scalar == 0) continue;
    acc += (x.pow(static_cast<std::size_t>(k)) * one_minus_x.pow(static_cast<std::size_t>(n - k)))
               .scaled(scalar);
  }
  return acc;
}

BigInt double_factorial(long m) {
  if (m < -1 || m % 2 == 0) throw std::domain_error("double_factorial: needs odd m >= -1");
  BigInt r = 1;
  for (long i = m; i >= 3; i -= 2) r *= i;
  return r;
}

UniPoly f_small_recurrence(int n) {
  if (n < 0) throw std::domain_error("f_small_recurrence: negative n");
  UniPoly y = UniPoly::var();
  UniPoly one_plus_2y2 = UniPoly(1) + UniPoly::monomial(2, 2);
  UniPoly y_times = y + UniPoly::monomial(3);  // y(1+y^2)
  UniPoly f(1);
  for (int i = 0; i < n; ++i) f = one_plus_2y2 * f + y_times * f.derivative();
  return f;
}

UniPoly f_big_recurrence(int n) {
  if (n < 0) throw std::domain_error("f_big_recurrence: negative n");
  UniPoly one_plus_y2 = UniPoly(1) + UniPoly::monomial(2);
  UniPoly y_times = UniPoly::var() + UniPoly::monomial(3);
  UniPoly F = UniPoly::var();
  for (int i = 0; i < n; ++i) F = one_plus_y2 * F + y_times * F.derivative();
  return F;
}

}  // namespace tansec
