#include "tansec/verify.hpp"

#include "tansec/diff_op.hpp"
#include "tansec/moments.hpp"
#include "tansec/oracles.hpp"
#include "tansec/series_check.hpp"
#include "tansec/sturm.hpp"
#include "tansec/trunc_series.hpp"
#include "tansec/unipoly.hpp"
#include "tansec/yz_poly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace tansec {

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

using CheckFn = std::function<std::pair<bool, std::string>(int)>;

struct Runner {
  TriangleProvider prov;
  int max_n;
  const ResultSink& sink;
  VerifyTotals totals;

  Runner(const VerifyOptions& opts, const ResultSink& s)
      : prov(opts.fault), max_n(opts.max_n), sink(s) {}

  void record(const std::string& check, const std::string& family, int n, CheckStatus st,
              std::string detail) {
    if (st == CheckStatus::Pass) ++totals.passed;
    else if (st == CheckStatus::Fail) ++totals.failed;
    else ++totals.skipped;
    sink(CheckResult{check, family, n, st, std::move(detail)});
  }

  // One result per n in [lo, bound], clamped or extended-with-skips by the
  // requested max_n. A throwing check is a failure, not a crash; a corrupted
  // table is allowed to break preconditions downstream.
  void each_n(const std::string& check, const std::string& family, int lo, int bound,
              const CheckFn& fn) {
    int hi = max_n == 0 ? bound : max_n;
    for (int n = lo; n <= hi; ++n) {
      if (n > bound) {
        record(check, family, n, CheckStatus::Skipped,
               "beyond documented bound " + std::to_string(bound));
        continue;
      }
      try {
        auto [ok, detail] = fn(n);
        record(check, family, n, ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
      } catch (const std::exception& e) {
        record(check, family, n, CheckStatus::Fail, std::string("exception: ") + e.what());
      }
    }
  }

  void once(const std::string& check, const std::string& family,
            const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [ok, detail] = fn();
      record(check, family, -1, ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
    } catch (const std::exception& e) {
      record(check, family, -1, CheckStatus::Fail, std::string("exception: ") + e.what());
    }
  }
};

std::pair<bool, std::string> poly_eq(const UniPoly& a, const UniPoly& b, const std::string& what) {
  if (a == b) return {true, what};
  return {false, what + ": " + a.str() + " != " + b.str()};
}

std::pair<bool, std::string> row_eq(const TriangleRow& a, const TriangleRow& b,
                                    const std::string& what) {
  if (a.k_offset == b.k_offset && a.entries == b.entries) return {true, what};
  return {false, what + ": rows differ"};
}

UniPoly rand_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = coeff(rng);
  return UniPoly::from_coeffs(std::move(cs));
}

YZPoly rand_yz(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> nterms(1, 4);
  YZPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    int c = coeff(rng);
    if (c != 0) p += YZPoly::monomial(expo(rng), expo(rng), c);
  }
  return p;
}

YZPoly yz_pow(const YZPoly& base, int e) {
  YZPoly r = YZPoly::monomial(0, 0, 1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

UniPoly w_recurrence(int n) {
  UniPoly xx = UniPoly::var() + UniPoly::monomial(2);
  UniPoly w = UniPoly::var();
  for (int i = 0; i < n; ++i) w = xx * w.derivative();
  return w;
}

void suite_algebra(Runner& r) {
  r.once("algebra.ring.distributive", "", []() -> std::pair<bool, std::string> {
    std::mt19937 rng(20250801);
    for (int t = 0; t < 40; ++t) {
      UniPoly p = rand_poly(rng, 8), q = rand_poly(rng, 8), s = rand_poly(rng, 8);
      if ((p + q) * s != p * s + q * s)
        return {false, "distributivity broke on sample " + std::to_string(t)};
    }
    return {true, "(p+q)r = pr+qr on 40 samples"};
  });

  r.once("algebra.poly.leibniz", "", []() -> std::pair<bool, std::string> {
    std::mt19937 rng(20250802);
    for (int t = 0; t < 40; ++t) {
      UniPoly p = rand_poly(rng, 8), q = rand_poly(rng, 8);
      if ((p * q).derivative() != p.derivative() * q + p * q.derivative())
        return {false, "(pq)' != p'q + pq' on sample " + std::to_string(t)};
    }
    return {true, "(pq)' = p'q + pq' on 40 samples"};
  });

  r.once("algebra.subst.eval", "", []() -> std::pair<bool, std::string> {
    std::mt19937 rng(20250803);
    UniPoly u = UniPoly(1) + UniPoly::monomial(2);  // 1+y^2
    UniPoly v = UniPoly::monomial(2);               // y^2
    for (int t = 0; t < 20; ++t) {
      UniPoly p = rand_poly(rng, 4);
      std::size_t s = (p.is_zero() ? 0 : *p.degree()) + static_cast<std::size_t>(t % 3);
      Rational y0 = make_rational(t + 1, t % 5 + 2);
      Rational uv = u.eval(y0), vv = v.eval(y0);
      Rational direct = subst_pow(p, u, v, s).eval(y0);
      Rational expected = 0;
      // v(y0)^s * p(u(y0)/v(y0)) without rational-function arithmetic
      Rational up = 1;
      for (std::size_t k = 0; k <= (p.is_zero() ? 0 : *p.degree()); ++k) {
        Rational vp = 1;
        for (std::size_t j = 0; j < s - k; ++j) vp *= vv;
        expected += p.coeff(k) * up * vp;
        up *= uv;
      }
      if (direct != expected) return {false, "point check failed on sample " + std::to_string(t)};
    }
    return {true, "subst_pow matches pointwise evaluation at 20 points"};
  });

  r.once("algebra.series.mul", "", []() -> std::pair<bool, std::string> {
    std::mt19937 rng(20250804);
    for (int t = 0; t < 10; ++t) {
      TruncSeries a(6), b(6), c(6);
      for (std::size_t i = 0; i <= 6; ++i) {
        a.set_coeff(i, rand_poly(rng, 2));
        b.set_coeff(i, rand_poly(rng, 2));
        c.set_coeff(i, rand_poly(rng, 2));
      }
      if (a * b != b * a) return {false, "series product not commutative"};
      if ((a * b) * c != a * (b * c)) return {false, "series product not associative"};
    }
    return {true, "series product commutative and associative on 10 samples"};
  });

  r.once("algebra.yz.leibniz", "", []() -> std::pair<bool, std::string> {
    std::mt19937 rng(20250805);
    for (int t = 0; t < 30; ++t) {
      YZPoly p = rand_yz(rng), q = rand_yz(rng);
      if ((p * q).d_once() != p.d_once() * q + p * q.d_once())
        return {false, "D(pq) != D(p)q + pD(q) on sample " + std::to_string(t)};
    }
    return {true, "derivation obeys the product rule on 30 samples"};
  });

  r.each_n("algebra.homogeneity", "", 1, 20, [](int n) -> std::pair<bool, std::string> {
    for (OpKind op : {OpKind::D, OpKind::DY, OpKind::YD}) {
      int step = op == OpKind::D ? 1 : 2;
      for (SeedKind seed : {SeedKind::Y, SeedKind::Z, SeedKind::YPlusZ}) {
        auto deg = op_iterate(op, seed, n).homogeneous_degree();
        if (!deg || *deg != 1 + step * n)
          return {false, "iterate is not homogeneous of the expected degree"};
      }
    }
    return {true, "all nine op/seed iterates homogeneous"};
  });

  r.each_n("algebra.linearity.Dy", "", 1, 20, [](int n) -> std::pair<bool, std::string> {
    YZPoly split = op_iterate(OpKind::DY, SeedKind::Y, n) + op_iterate(OpKind::DY, SeedKind::Z, n);
    if (op_iterate(OpKind::DY, SeedKind::YPlusZ, n) == split)
      return {true, "(Dy)^n(y+z) = (Dy)^n(y) + (Dy)^n(z)"};
    return {false, "operator not additive over the seed"};
  });

  r.once("algebra.reduce.eval", "", []() -> std::pair<bool, std::string> {
    std::vector<YZPoly> panel = {op_iterate(OpKind::DY, SeedKind::YPlusZ, 5),
                                 op_iterate(OpKind::YD, SeedKind::Y, 4),
                                 op_iterate(OpKind::D, SeedKind::Z, 6)};
    for (const YZPoly& p : panel) {
      auto [p0, p1] = reduce_canonical(p);
      for (int m = 1; m <= 10; ++m) {
        Rational y0 = make_rational(static_cast<long>(m) * m - 1, 2L * m);
        Rational z0 = make_rational(static_cast<long>(m) * m + 1, 2L * m);
        if (p0.eval(y0) + p1.eval(y0) * z0 != p.eval(y0, z0))
          return {false, "reduction changed the value on z^2 = 1+y^2"};
      }
    }
    return {true, "reduction exact at 10 points on z^2 = 1+y^2 for 3 iterates"};
  });

  r.each_n("algebra.prop2", "A", 1, 15, [&r](int n) -> std::pair<bool, std::string> {
    YZPoly rhs;
    for (int k = 1; k <= n; ++k)
      rhs += YZPoly::monomial(n - k, k, r.prov.entry(Family::A, n, k));
    rhs = yz_pow(YZPoly::seed_y_plus_z(), n + 1) * rhs;
    if (op_iterate(OpKind::DY, SeedKind::YPlusZ, n) == rhs)
      return {true, "(Dy)^n(y+z) = (y+z)^{n+1} sum A(n,k) y^{n-k} z^k"};
    return {false, "bivariate Eulerian factorization failed"};
  });
}

void suite_triangles(Runner& r) {
  for (Family f : {Family::A, Family::B, Family::N}) {
    std::string name = family_name(f);
    int lo = f == Family::N ? 1 : 0;
    r.each_n("triangles.explicit." + name, name, lo, 20,
             [&r, f](int n) -> std::pair<bool, std::string> {
               const TriangleRow& row = r.prov.row(f, n);
               for (int k = row.k_min(); k <= row.k_max(); ++k) {
                 BigInt direct = explicit_entry(f, n, k, r.prov);
                 if (direct != row.at(k))
                   return {false, "entry k=" + std::to_string(k) + ": recurrence " +
                                      row.at(k).str() + " vs closed form " + direct.str()};
               }
               return {true, "alternating-sum formula matches the recurrence"};
             });
  }

  r.each_n("triangles.symmetry.A", "A", 1, 20, [&r](int n) -> std::pair<bool, std::string> {
    const TriangleRow& row = r.prov.row(Family::A, n);
    for (int k = 1; k <= n; ++k)
      if (row.get(k) != row.get(n + 1 - k)) return {false, "A(n,k) != A(n,n+1-k)"};
    return {true, "palindromic row"};
  });

  r.each_n("triangles.symmetry.B", "B", 0, 20, [&r](int n) -> std::pair<bool, std::string> {
    const TriangleRow& row = r.prov.row(Family::B, n);
    for (int k = 0; k <= n; ++k)
      if (row.get(k) != row.get(n - k)) return {false, "B(n,k) != B(n,n-k)"};
    return {true, "palindromic row"};
  });

  r.each_n("triangles.G.stirling", "G", 1, 20, [&r](int n) -> std::pair<bool, std::string> {
    for (int k = 1; k <= n; ++k)
      if (r.prov.entry(Family::G, n, k) != factorial(k) * r.prov.entry(Family::S, n, k))
        return {false, "G(n," + std::to_string(k) + ") != k! S(n,k)"};
    return {true, "G(n,k) = k! S(n,k)"};
  });

  r.each_n("triangles.E.scaled-A", "E", 0, 20, [&r](int n) -> std::pair<bool, std::string> {
    const TriangleRow& e = r.prov.row(Family::E, n);
    const TriangleRow& a = r.prov.row(Family::A, n);
    BigInt p2 = int_pow(2, n);
    for (int k = e.k_min(); k <= e.k_max(); ++k)
      if (e.at(k) != p2 * a.get(k)) return {false, "E(n,k) != 2^n A(n,k)"};
    return {true, "E(n,k) = 2^n A(n,k)"};
  });

  r.each_n("triangles.H.equals-B", "H", 0, 20, [&r](int n) {
    return row_eq(r.prov.row(Family::H, n), r.prov.row(Family::B, n), "H(n,.) = B(n,.)");
  });

  r.each_n("triangles.M.reversal", "M", 1, 20, [&r](int n) -> std::pair<bool, std::string> {
    const TriangleRow& m = r.prov.row(Family::M, n);
    const TriangleRow& nn = r.prov.row(Family::N, n);
    for (int k = 1; k <= n; ++k)
      if (m.at(k) != nn.at(n - k + 1)) return {false, "M(n,k) != N(n,n-k+1)"};
    return poly_eq(family_poly(Family::M, n, r.prov),
                   reversed(family_poly(Family::N, n, r.prov), static_cast<std::size_t>(n) + 1),
                   "M_n(x) = x^{n+1} N_n(1/x)");
  });

  r.each_n("triangles.N.row-facts", "N", 1, 30, [&r](int n) -> std::pair<bool, std::string> {
    const TriangleRow& row = r.prov.row(Family::N, n);
    if (row.at(1) != int_pow(2, n - 1)) return {false, "N(n,1) != 2^{n-1}"};
    if (row.at(n) != 1) return {false, "N(n,n) != 1"};
    BigInt sum = 0;
    for (const BigInt& e : row.entries) sum += e;
    if (sum != double_factorial(2L * n - 1)) return {false, "row sum != (2n-1)!!"};
    return {true, "N(n,1), N(n,n) and the row sum check out"};
  });

  r.each_n("triangles.J.product", "", 1, 20, [&r](int n) {
    UniPoly lhs = j_poly(n, r.prov).shifted_up(1);
    UniPoly rhs = (UniPoly(1) + UniPoly::var()).pow(static_cast<std::size_t>(n) + 1) *
                  family_poly(Family::A, n, r.prov);
    return poly_eq(lhs, rhs, "x J_n(x) = (1+x)^{n+1} A_n(x)");
  });

  r.each_n("triangles.worpitzky", "a", 1, 20, [&r](int n) -> std::pair<bool, std::string> {
    TriangleRow transformed = worpitzky_from_A(n, r.prov);
    auto res = row_eq(r.prov.row(Family::LittleA, n), transformed,
                      "a(n,n-k) = sum C(i,k) A(n,i)");
    if (!res.first) return res;
    if (transformed.at(n) != factorial(n)) return {false, "a(n,n) != n!"};
    return res;
  });

  r.each_n("triangles.theorem2", "a", 0, 15, [&r](int n) -> std::pair<bool, std::string> {
    UniPoly f_rec = f_big_recurrence(n);
    Rational p2 = Rational(int_pow(2, n));
    UniPoly u = UniPoly(1) + UniPoly::monomial(2);
    UniPoly from_a = subst_pow(family_poly(Family::A, n, r.prov), u, UniPoly::monomial(2),
                               static_cast<std::size_t>(n))
                         .shifted_up(1)
                         .scaled(p2);
    auto res = poly_eq(f_rec, from_a, "F_n = 2^n y sum A(n,k)(1+y^2)^k y^{2n-2k}");
    if (!res.first) return res;
    UniPoly a_y = n == 0 ? UniPoly::var() : row_poly(r.prov.row(Family::LittleA, n), 2, 1);
    return poly_eq(f_rec, a_y.scaled(p2), "F_n = 2^n a_n(y)");
  });

  r.each_n("triangles.theorem5.R", "R", 0, 15, [&r](int n) {
    UniPoly u = UniPoly(1) + UniPoly::monomial(2);
    UniPoly rhs = subst_pow(family_poly(Family::N, n, r.prov), u, UniPoly::monomial(2),
                            static_cast<std::size_t>(n))
                      .shifted_up(1);
    return poly_eq(family_poly(Family::R, n, r.prov), rhs, "R_n(y) = y^{2n+1} N_n((1+y^2)/y^2)");
  });

  r.each_n("triangles.theorem5.T", "T", 0, 15, [&r](int n) {
    UniPoly v = UniPoly(1) + UniPoly::monomial(2);
    UniPoly rhs = subst_pow(family_poly(Family::N, n, r.prov), UniPoly::monomial(2), v,
                            static_cast<std::size_t>(n));
    return poly_eq(family_poly(Family::T, n, r.prov), rhs,
                   "T_n(y) = sum N(n,k) y^{2k} (1+y^2)^{n-k}");
  });

  r.each_n("triangles.specialize", "", 1, 20, [&r](int n) -> std::pair<bool, std::string> {
    if (family_poly(Family::R, n, r.prov).eval(1) != family_poly(Family::N, n, r.prov).eval(2))
      return {false, "R_n(1) != N_n(2)"};
    Rational rhs = family_poly(Family::N, n, r.prov).eval(make_rational(1, 2)) *
                   Rational(int_pow(2, n));
    if (family_poly(Family::T, n, r.prov).eval(1) != rhs) return {false, "T_n(1) != 2^n N_n(1/2)"};
    return {true, "R_n(1) = N_n(2) and T_n(1) = 2^n N_n(1/2)"};
  });

  r.each_n("triangles.N.closed-form", "N", 1, 20, [&r](int n) {
    return poly_eq(n_poly_closed(n, r.prov), family_poly(Family::N, n, r.prov),
                   "Stirling closed form = recurrence");
  });

  r.each_n("triangles.f.poly-recurrence", "f", 0, 15, [&r](int n) {
    return poly_eq(f_small_recurrence(n), family_poly(Family::LittleF, n, r.prov),
                   "f_{n+1} = (1+2y^2) f_n + y(1+y^2) f_n'");
  });

  r.each_n("triangles.W.poly-recurrence", "a", 0, 20, [&r](int n) {
    return poly_eq(w_recurrence(n), family_poly(Family::LittleA, n, r.prov),
                   "W_{n+1} = (x+x^2) W_n'");
  });

  r.each_n("triangles.galton-top", "", 1, 20, [&r](int n) -> std::pair<bool, std::string> {
    BigInt df = double_factorial(2L * n - 1);
    if (r.prov.entry(Family::R, n, n) != df) return {false, "R(n,n) != (2n-1)!!"};
    if (r.prov.entry(Family::T, n, n) != df) return {false, "T(n,n) != (2n-1)!!"};
    return {true, "R(n,n) = T(n,n) = (2n-1)!!"};
  });
}

void suite_oracle(Runner& r) {
  r.each_n("oracle.descents.A", "A", 1, 8, [&r](int n) {
    return poly_eq(perm_statistic_distribution(n, PermStat::DescentPlusOne).gen_poly(),
                   family_poly(Family::A, n, r.prov), "descent distribution = A row");
  });

  r.each_n("oracle.interior-peaks.W", "", 1, 8, [](int n) {
    TriangleRow w = extract_row(Shape::W, n, op_iterate(OpKind::D, SeedKind::Y, n));
    return poly_eq(perm_statistic_distribution(n, PermStat::InteriorPeak).gen_poly(),
                   row_poly(w, 1, 0), "interior-peak distribution = W row of D^n(y)");
  });

  r.each_n("oracle.left-peaks.Wl", "", 1, 8, [](int n) {
    TriangleRow w = extract_row(Shape::Wl, n, op_iterate(OpKind::D, SeedKind::Z, n));
    return poly_eq(perm_statistic_distribution(n, PermStat::LeftPeak).gen_poly(),
                   row_poly(w, 1, 0), "left-peak distribution = Wl row of D^n(z)");
  });

  r.each_n("oracle.desB.B", "B", 1, 7, [&r](int n) {
    return poly_eq(signed_perm_desB_distribution(n).gen_poly(),
                   family_poly(Family::B, n, r.prov), "signed descent distribution = B row");
  });

  r.each_n("oracle.matchings.N", "N", 1, 8, [&r](int n) -> std::pair<bool, std::string> {
    StatDistribution d = matching_odd_smaller_distribution(n);
    if (d.total != double_factorial(2L * n - 1)) return {false, "matching count != (2n-1)!!"};
    return poly_eq(d.gen_poly(), family_poly(Family::N, n, r.prov),
                   "odd-smaller distribution = N row");
  });

  r.each_n("oracle.partitions.S", "S", 1, 10, [&r](int n) -> std::pair<bool, std::string> {
    StatDistribution d = set_partition_counts(n);
    const TriangleRow& s = r.prov.row(Family::S, n);
    if (s.get(0) != 0) return {false, "S(n,0) != 0 for n >= 1"};
    for (int k = 1; k <= n; ++k)
      if (d.get(k) != s.get(k)) return {false, "partition count != S(n,k)"};
    return {true, "block-count distribution = S row"};
  });

  r.each_n("oracle.alternating.tansec", "", 0, 10, [](int n) -> std::pair<bool, std::string> {
    TanSecPair ts = tan_sec_series(10);
    UniPoly coeff = (ts.tan + ts.sec).egf_coeff(static_cast<std::size_t>(n));
    BigInt count = alternating_count(n);
    if (coeff == UniPoly(Rational(count)))
      return {true, "E_n = n! [t^n](tan+sec) = " + count.str()};
    return {false, "alternating count disagrees with the series"};
  });
}

void suite_operator(Runner& r) {
  r.each_n("operator.right-composition", "", 0, 8, [](int k) -> std::pair<bool, std::string> {
    UniPoly xx = UniPoly::var() + UniPoly::monomial(2);
    UniPoly lin = (UniPoly(1) + UniPoly::monomial(1, 2)).scaled(k);
    for (int m = 0; m <= 8; ++m) {
      UniPoly p = UniPoly::monomial(static_cast<std::size_t>(m));
      UniPoly lhs = xx * p.derivative();
      for (int i = 0; i < k; ++i) lhs = lhs.derivative();
      std::vector<UniPoly> dp = {p};
      for (int i = 0; i < k + 1; ++i) dp.push_back(dp.back().derivative());
      UniPoly rhs = xx * dp[static_cast<std::size_t>(k + 1)] + lin * dp[static_cast<std::size_t>(k)];
      if (k >= 2)
        rhs += dp[static_cast<std::size_t>(k - 1)].scaled(Rational(k) * Rational(k - 1));
      if (lhs != rhs) return {false, "identity fails on x^" + std::to_string(m)};
    }
    return {true, "D^k (x+x^2)D = (x+x^2)D^{k+1} + k(1+2x)D^k + k(k-1)D^{k-1} on monomials"};
  });

  r.each_n("operator.expansion-consistency", "", 1, 12, [](int n) -> std::pair<bool, std::string> {
    std::vector<UniPoly> division = expand_xxd_power(n);
    if (division != g_coeffs_left(n)) return {false, "division route != left recurrence"};
    if (division != g_coeffs_right(n)) return {false, "division route != right recurrence"};
    return {true, "division, left and right recurrences agree"};
  });

  r.each_n("operator.ladder", "", 1, 15, [](int n) -> std::pair<bool, std::string> {
    std::vector<UniPoly> g = expand_xxd_power(n);
    for (int k = 1; k < n; ++k) {
      if (g[static_cast<std::size_t>(k - 1)].derivative() !=
          g[static_cast<std::size_t>(k)].scaled(Rational(k) * Rational(k + 1)))
        return {false, "G_{n,k}' != k(k+1) G_{n,k+1} at k=" + std::to_string(k)};
    }
    return {true, "G_{n,k}' = k(k+1) G_{n,k+1}"};
  });

  r.each_n("operator.degree-law", "", 1, 15, [](int n) -> std::pair<bool, std::string> {
    std::vector<UniPoly> g = expand_xxd_power(n);
    for (int k = 1; k <= n; ++k) {
      const UniPoly& gk = g[static_cast<std::size_t>(k - 1)];
      if (gk.is_zero() || *gk.degree() != static_cast<std::size_t>(n - k))
        return {false, "deg G_{n,k} != n-k at k=" + std::to_string(k)};
    }
    if (g.back() != UniPoly(1)) return {false, "G_{n,n} != 1"};
    return {true, "deg G_{n,k} = n-k and G_{n,n} = 1"};
  });

  r.each_n("operator.G-triangle", "G", 1, 18, [&r](int n) -> std::pair<bool, std::string> {
    UniPoly g1 = expand_xxd_power(n)[0];
    auto res = poly_eq(g1, family_poly(Family::G, n, r.prov), "G_{n,1} = sum G(n,k) x^{k-1}");
    if (!res.first) return res;
    for (int k = 1; k <= n; ++k)
      if (g1.coeff(static_cast<std::size_t>(k - 1)) !=
          Rational(factorial(k) * r.prov.entry(Family::S, n, k)))
        return {false, "coefficient != k! S(n,k) at k=" + std::to_string(k)};
    return res;
  });

  r.each_n("operator.apply-equivalence", "", 1, 12, [](int n) -> std::pair<bool, std::string> {
    UniPoly xx = UniPoly::var() + UniPoly::monomial(2);
    std::vector<UniPoly> g = expand_xxd_power(n);
    std::vector<UniPoly> panel = {UniPoly::var(), UniPoly::monomial(2),
                                  UniPoly(1) + UniPoly::monomial(3)};
    DiffOpPoly composed = xxd_power(n);
    for (const UniPoly& p : panel) {
      UniPoly direct = p;
      for (int i = 0; i < n; ++i) direct = xx * direct.derivative();
      if (composed.apply(p) != direct) return {false, "operator form disagrees with direct steps"};
      UniPoly via_basis;
      UniPoly dp = p;
      UniPoly xx_k(1);
      for (int k = 1; k <= n; ++k) {
        dp = dp.derivative();
        xx_k *= xx;
        via_basis += g[static_cast<std::size_t>(k - 1)] * xx_k * dp;
      }
      if (via_basis != direct) return {false, "basis form disagrees with direct steps"};
    }
    return {true, "expansion and direct application agree on the test panel"};
  });

  r.each_n("operator.worpitzky", "a", 0, 12, [&r](int n) {
    return poly_eq(xxd_power(n).apply(UniPoly::var()), family_poly(Family::LittleA, n, r.prov),
                   "((x+x^2)D)^n x = W_n(x)");
  });
}

void suite_series(Runner& r) {
  r.each_n("series.pq-reduction", "", 0, 15, [](int n) -> std::pair<bool, std::string> {
    auto [py, qy] = reduce_canonical(op_iterate(OpKind::D, SeedKind::Y, n));
    if (py != derivative_poly_p(n) || !qy.is_zero())
      return {false, "D^n(y) does not reduce to (P_n, 0)"};
    auto [pz, qz] = reduce_canonical(op_iterate(OpKind::D, SeedKind::Z, n));
    if (!pz.is_zero() || qz != derivative_poly_q(n))
      return {false, "D^n(z) does not reduce to (0, Q_n)"};
    return {true, "D^n(y) -> P_n and D^n(z) -> z Q_n"};
  });

  r.once("series.pythagoras", "", []() -> std::pair<bool, std::string> {
    TanSecPair ts = tan_sec_series(16);
    TruncSeries one = TruncSeries::constant(UniPoly(1), 16);
    if (ts.tan * ts.tan + one == ts.sec * ts.sec)
      return {true, "tan^2 + 1 = sec^2 through order 16"};
    return {false, "tan^2 + 1 != sec^2"};
  });

  {
    int bound = 12;
    int hi = r.max_n == 0 ? bound : r.max_n;
    int run_to = std::min(hi, bound);
    if (run_to >= 0) {
      std::vector<IdentityReport> reports;
      try {
        reports = check_prop1(run_to, 16);
      } catch (const std::exception& e) {
        r.record("series.prop1", "", -1, CheckStatus::Fail, std::string("exception: ") + e.what());
      }
      for (const IdentityReport& rep : reports)
        r.record("series.prop1", "", rep.n, rep.ok ? CheckStatus::Pass : CheckStatus::Fail,
                 rep.detail);
    }
    for (int n = bound + 1; n <= hi; ++n)
      r.record("series.prop1", "", n, CheckStatus::Skipped, "beyond documented bound 12");
  }

  r.each_n("series.egf-A", "A", 0, 15, [&r](int n) {
    return poly_eq(egf_A_closed(15).egf_coeff(static_cast<std::size_t>(n)),
                   family_poly(Family::A, n, r.prov), "EGF coefficient = A row");
  });

  {
    int bound = 20;
    int hi = r.max_n == 0 ? bound : r.max_n;
    int run_to = std::min(hi, bound);
    if (run_to >= 0) {
      std::vector<IdentityReport> reports;
      try {
        reports = check_thm6(run_to, r.prov);
      } catch (const std::exception& e) {
        r.record("series.thm6", "N", -1, CheckStatus::Fail, std::string("exception: ") + e.what());
      }
      for (const IdentityReport& rep : reports)
        r.record("series.thm6", "N", rep.n, rep.ok ? CheckStatus::Pass : CheckStatus::Fail,
                 rep.detail);
    }
    for (int n = bound + 1; n <= hi; ++n)
      r.record("series.thm6", "N", n, CheckStatus::Skipped, "beyond documented bound 20");
  }

  r.once("series.n-squared", "N", [&r]() {
    IdentityReport rep = check_n_squared_series(16, r.prov);
    return std::pair<bool, std::string>{rep.ok, rep.detail};
  });
}

void suite_analytic(Runner& r) {
  r.each_n("analytic.real-rooted", "N", 2, 25, [&r](int n) -> std::pair<bool, std::string> {
    UniPoly full = family_poly(Family::N, n, r.prov);
    UniPoly q = divmod(full, UniPoly::var()).first;
    SturmChain chain = sturm_chain(q);
    if (!chain.squarefree()) return {false, "N_n/x is not squarefree"};
    int want = n - 1;
    if (count_real_roots(chain, RootBound::neg_inf(), RootBound::pos_inf()) != want)
      return {false, "N_n/x is not totally real"};
    if (count_real_roots(chain, RootBound::neg_inf(), RootBound::at(0)) != want)
      return {false, "a root of N_n/x is not negative"};
    SturmChain full_chain = sturm_chain(full);
    if (count_real_roots(full_chain, RootBound::neg_inf(), RootBound::at(0)) != n)
      return {false, "N_n does not have n distinct roots on (-inf, 0]"};
    return {true, "N_n has n distinct real roots, all on (-inf, 0]"};
  });

  r.each_n("analytic.interlacing", "N", 2, 25, [&r](int n) -> std::pair<bool, std::string> {
    InterlacingReport rep = verify_interlacing(n, r.prov);
    return {rep.all_real && rep.interlaced, rep.detail};
  });

  r.each_n("analytic.d1-recurrence", "N", 1, 50, [&r](int n) -> std::pair<bool, std::string> {
    BigInt lhs = n_row_d1(n + 1, r.prov);
    BigInt rhs = double_factorial(2L * n + 1) + (2 * n - 1) * n_row_d1(n, r.prov);
    if (lhs != rhs) return {false, "N_{n+1}'(1) != (2n+1)!! + (2n-1) N_n'(1)"};
    if (n_row_d1(n, r.prov) != x_closed(n)) return {false, "N_n'(1) != n^2 (2n-3)!!"};
    return {true, "first-moment recurrence and closed form hold"};
  });

  r.each_n("analytic.d2-recurrence", "N", 1, 50, [&r](int n) -> std::pair<bool, std::string> {
    if (n_row_d2(n, r.prov) != y_recursive(n))
      return {false, "N_n''(1) != (4(n-1)-2) x_{n-1} + (2(n-1)-3) y_{n-1} chain"};
    return {true, "second-moment recurrence holds"};
  });

  r.each_n("analytic.mean-gap", "N", 2, 50, [&r](int n) -> std::pair<bool, std::string> {
    MomentReport m = moment_stats(Family::N, n, r.prov);
    Rational gap = m.mean - make_rational(2L * n + 1, 4);
    if (gap < 0) gap = -gap;
    if (gap > make_rational(1, 4L * (2L * n - 1)))
      return {false, "|mu_n - (2n+1)/4| > 1/(4(2n-1))"};
    return {true, "mean within 1/(4(2n-1)) of (2n+1)/4"};
  });

  r.each_n("analytic.variance-gap", "N", 3, 50, [&r](int n) -> std::pair<bool, std::string> {
    MomentReport m = moment_stats(Family::N, n, r.prov);
    Rational gap = m.variance - make_rational(2L * n + 1, 24);
    if (gap < 0) gap = -gap;
    if (gap > make_rational(1, 10))
      return {false, "|sigma_n^2 - (2n+1)/24| > 1/10, gap = " + rational_str(gap)};
    return {true, "variance within 1/10 of (2n+1)/24, gap = " + rational_str(gap)};
  });

  r.each_n("analytic.mode-bracket", "N", 2, 50, [&r](int n) -> std::pair<bool, std::string> {
    MomentReport m = moment_stats(Family::N, n, r.prov);
    if (m.mode_indices.size() > 2) return {false, "more than two modes"};
    if (m.mode_indices.size() == 2 && m.mode_indices[1] != m.mode_indices[0] + 1)
      return {false, "modes are not adjacent"};
    BigInt lo = rational_floor(m.mean), hi = rational_ceil(m.mean);
    BigInt plo = BigInt((2 * n + 1) / 4), phi = plo + 1;  // (2n+1)/4 is never integral
    if (BigInt(lo) != plo || hi != phi)
      return {false, "exact-mean bracket differs from the (2n+1)/4 bracket"};
    for (int k : m.mode_indices)
      if (BigInt(k) != plo && BigInt(k) != phi)
        return {false, "mode " + std::to_string(k) + " outside {" + plo.str() + "," + phi.str() + "}"};
    return {true, "modes lie in {floor((2n+1)/4), ceil((2n+1)/4)}"};
  });

  r.once("analytic.erratum-x", "N", [&r]() -> std::pair<bool, std::string> {
    BigInt expected[] = {4, 27, 240};
    for (int n = 2; n <= 4; ++n) {
      BigInt exact = n_row_d1(n, r.prov);
      if (exact != expected[n - 2]) return {false, "exact N_n'(1) unexpected at n=" + std::to_string(n)};
      Rational printed = Rational(double_factorial(2L * n + 1)) / 4;
      if (Rational(exact) == printed)
        return {false, "printed (2n+1)!!/4 unexpectedly matches at n=" + std::to_string(n)};
    }
    return {true, "exact N_n'(1) = 4, 27, 240 at n=2,3,4; printed (2n+1)!!/4 differs"};
  });

  r.once("analytic.erratum-y", "N", [&r]() -> std::pair<bool, std::string> {
    if (n_row_d2(4, r.prov) != 348) return {false, "exact N_4''(1) != 348"};
    for (int n = 2; n <= 4; ++n) {
      Rational printed = Rational(double_factorial(2L * n - 1)) *
                         Rational(12L * n * n - 8L * n - 7) / 48;
      if (Rational(n_row_d2(n, r.prov)) == printed)
        return {false, "printed second-moment form unexpectedly matches at n=" + std::to_string(n)};
    }
    return {true, "exact N_4''(1) = 348; printed (2n-1)!!(12n^2-8n-7)/48 differs at n=2,3,4"};
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"all", "algebra", "triangles", "oracle", "operator", "series", "analytic"};
}

bool is_suite_name(const std::string& name) {
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

VerifyTotals run_suite(const std::string& suite, const VerifyOptions& opts,
                       const ResultSink& sink) {
  if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite: " + suite);
  Runner r(opts, sink);
  // Surface an unusable fault target as a usage error before any check runs.
  if (opts.fault) r.prov.row(opts.fault->family, opts.fault->n);
  bool all = suite == "all";
  if (all || suite == "algebra") suite_algebra(r);
  if (all || suite == "triangles") suite_triangles(r);
  if (all || suite == "oracle") suite_oracle(r);
  if (all || suite == "operator") suite_operator(r);
  if (all || suite == "series") suite_series(r);
  if (all || suite == "analytic") suite_analytic(r);
  return r.totals;
}

}  // namespace tansec
