#include "tansec/sturm.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tansec {

namespace {

// Integer-coefficient scalar multiple with content 1, same leading sign.
UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1;
  for (const Rational& c : p.coeffs())
    den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
  BigInt content = 0;
  for (const Rational& c : p.coeffs()) {
    Rational scaled = c * Rational(den_lcm);
    content = boost::multiprecision::gcd(content, rat_num(scaled));
  }
  return p.scaled(Rational(den_lcm) / Rational(content));  // content > 0, sign kept
}

// lc(b)^s * (a mod b) for integer-coefficient inputs, fraction-free: each
// step multiplies by lc(b) and subtracts a polynomial multiple of b, so no
// rational normalization ever runs. Sign-corrected to a positive multiple
// of the true remainder.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  const Rational m = b.leading();
  const std::size_t db = *b.degree();
  UniPoly r = a;
  long steps = 0;
  while (!r.is_zero() && *r.degree() >= db) {
    std::size_t k = *r.degree() - db;
    Rational lead = r.leading();
    r = r.scaled(m) - b.shifted_up(k).scaled(lead);
    ++steps;
  }
  if (m < 0 && steps % 2 != 0) r = -r;
  return r;
}

// sign of p(a/b) as sign of sum c_i a^i b^{d-i}: pure integer Horner, no
// per-step gcd normalization. Chain members are primitive, so the rational
// coefficient view is already integral.
int sign_eval(const UniPoly& p, const Rational& t) {
  const BigInt a = rat_num(t);
  const BigInt b = rat_den(t);
  std::size_t d = *p.degree();
  BigInt v = rat_num(p.coeff(d));
  BigInt bpow = 1;
  for (std::size_t i = d; i-- > 0;) {
    bpow *= b;
    v = v * a + rat_num(p.coeff(i)) * bpow;
  }
  return v.sign();
}

int sign_at(const UniPoly& p, const RootBound& b) {
  if (p.is_zero()) return 0;
  switch (b.kind) {
    case RootBound::NegInf: {
      int s = sign_of(p.leading());
      return *p.degree() % 2 == 0 ? s : -s;
    }
    case RootBound::PosInf: return sign_of(p.leading());
    case RootBound::Finite: return sign_eval(p, b.value);
  }
  return 0;
}

// Sign variations of the chain just right of b. A zero of the leading
// member is resolved by the next member's sign (the right-hand limit at a
// simple root); zeros further down the chain never change the count.
int variations_at(const SturmChain& chain, const RootBound& b) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const UniPoly& s : chain.seq) signs.push_back(sign_at(s, b));
  if (!signs.empty() && signs[0] == 0) {
    if (signs.size() < 2 || signs[1] == 0)
      throw std::domain_error("Sturm: endpoint kills both leading chain members");
    signs[0] = signs[1];
  }
  int var = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Degree of the gcd via the primitive remainder sequence.
std::size_t prs_gcd_degree(UniPoly a, UniPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (b.is_zero()) std::swap(a, b);
  if (a.is_zero()) return b.is_zero() ? 0 : *b.degree();
  if (*a.degree() < *b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return *a.degree();
}

bool bound_less(const RootBound& a, const RootBound& b) {
  if (a.kind == RootBound::NegInf) return b.kind != RootBound::NegInf;
  if (a.kind == RootBound::PosInf) return false;
  if (b.kind == RootBound::PosInf) return true;
  if (b.kind == RootBound::NegInf) return false;
  return a.value < b.value;
}

}  // namespace

bool SturmChain::squarefree() const {
  return !seq.empty() && !seq.back().is_zero() && *seq.back().degree() == 0;
}

SturmChain sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
  SturmChain chain;
  chain.seq.push_back(primitive_part(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.seq.push_back(primitive_part(d));
  while (true) {
    const UniPoly& a = chain.seq[chain.seq.size() - 2];
    const UniPoly& b = chain.seq[chain.seq.size() - 1];
    UniPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    chain.seq.push_back(primitive_part(-r));
    if (*chain.seq.back().degree() == 0) break;
  }
  return chain;
}

int count_real_roots(const SturmChain& chain, const RootBound& lo, const RootBound& hi) {
  if (!bound_less(lo, hi)) throw std::invalid_argument("count_real_roots: needs lo < hi");
  return variations_at(chain, lo) - variations_at(chain, hi);
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero() || *p.degree() == 0)
    throw std::domain_error("cauchy_root_bound: needs degree >= 1");
  Rational lead = p.leading();
  if (lead < 0) lead = -lead;
  Rational best = 0;
  for (std::size_t i = 0; i < *p.degree(); ++i) {
    Rational c = p.coeff(i);
    if (c < 0) c = -c;
    best = std::max(best, c);
  }
  return 1 + best / lead;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (*p.degree() == 0) return out;
  SturmChain chain = sturm_chain(p);
  Rational bound = cauchy_root_bound(p);
  std::function<void(const Rational&, const Rational&, int)> split =
      [&](const Rational& lo, const Rational& hi, int count) {
        if (count == 0) return;
        if (count == 1) {
          out.push_back({lo, hi});
          return;
        }
        Rational mid = (lo + hi) / 2;
        int left = count_real_roots(chain, RootBound::at(lo), RootBound::at(mid));
        split(lo, mid, left);
        split(mid, hi, count - left);
      };
  int total = count_real_roots(chain, RootBound::at(-bound), RootBound::at(bound));
  split(-bound, bound, total);
  return out;
}

RootInterval refine_interval(const SturmChain& chain, RootInterval iv, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine_interval: width must be positive");
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (count_real_roots(chain, RootBound::at(iv.lo), RootBound::at(mid)) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

InterlacingReport verify_interlacing(int n, const TriangleProvider& prov) {
  if (n < 2) throw std::domain_error("verify_interlacing: n must be >= 2");
  InterlacingReport rep;
  rep.n = n;
  // Both polynomials vanish at 0 (no constant term); compare after pulling
  // out that shared root.
  auto deflate = [](const UniPoly& p) {
    auto [q, r] = divmod(p, UniPoly::var());
    if (!r.is_zero()) throw std::logic_error("verify_interlacing: expected a root at 0");
    return q;
  };
  UniPoly pn = deflate(family_poly(Family::N, n, prov));
  UniPoly pm = deflate(family_poly(Family::N, n - 1, prov));
  if (prs_gcd_degree(pn, pm) != 0) {
    rep.all_real = false;
    rep.detail = "deflated polynomials share a factor";
    return rep;
  }
  SturmChain cn = sturm_chain(pn);
  SturmChain cm = sturm_chain(pm);
  int roots_n = count_real_roots(cn, RootBound::neg_inf(), RootBound::pos_inf());
  int roots_m = count_real_roots(cm, RootBound::neg_inf(), RootBound::pos_inf());
  rep.all_real = cn.squarefree() && cm.squarefree() &&
                 roots_n == static_cast<int>(*pn.degree()) &&
                 roots_m == static_cast<int>(*pm.degree());
  if (!rep.all_real) {
    rep.detail = "missing real roots";
    return rep;
  }

  struct Tagged {
    RootInterval iv;
    bool from_n;
  };
  std::vector<Tagged> items;
  for (const RootInterval& iv : isolate_real_roots(pn)) items.push_back({iv, true});
  for (const RootInterval& iv : isolate_real_roots(pm)) items.push_back({iv, false});

  Rational width = 1;
  for (int rounds = 0; rounds < 512; ++rounds) {
    for (Tagged& t : items) {
      SturmChain& c = t.from_n ? cn : cm;
      t.iv = refine_interval(c, t.iv, width);
    }
    std::sort(items.begin(), items.end(),
              [](const Tagged& a, const Tagged& b) { return a.iv.lo < b.iv.lo; });
    bool disjoint = true;
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
      if (!(items[i].iv.hi <= items[i + 1].iv.lo)) disjoint = false;
    if (disjoint) {
      bool expect_n = true;  // pattern p, q, p, ..., p
      rep.interlaced = true;
      for (const Tagged& t : items) {
        if (t.from_n != expect_n) rep.interlaced = false;
        expect_n = !expect_n;
      }
      if (expect_n) rep.interlaced = false;  // must end on a root of N_n
      rep.detail = rep.interlaced ? "roots strictly alternate" : "alternation pattern broken";
      return rep;
    }
    width /= 16;
  }
  rep.interlaced = false;
  rep.detail = "could not separate the root intervals";
  return rep;
}

}  // namespace tansec
