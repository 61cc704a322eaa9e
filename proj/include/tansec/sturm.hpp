#ifndef TANSEC_STURM_HPP
#define TANSEC_STURM_HPP

#include "tansec/rational.hpp"
#include "tansec/triangles.hpp"
#include "tansec/unipoly.hpp"

#include <string>
#include <vector>

namespace tansec {

// Sturm sequence of a nonzero polynomial, built with signed pseudo-
// remainders over primitive integer polynomials.
struct SturmChain {
  std::vector<UniPoly> seq;  // seq[0] = primitive part of p, seq[1] ~ p'
  bool squarefree() const;   // last member has degree 0
};

SturmChain sturm_chain(const UniPoly& p);

struct RootBound {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rational value = 0;

  static RootBound neg_inf() { return {NegInf, 0}; }
  static RootBound pos_inf() { return {PosInf, 0}; }
  static RootBound at(Rational v) { return {Finite, std::move(v)}; }
};

// Number of distinct real roots in (lo, hi]. Signs at finite endpoints
// are right-hand limits, so a root at lo is excluded and one at hi kept
// without any numeric nudging.
int count_real_roots(const SturmChain& chain, const RootBound& lo, const RootBound& hi);

// 1 + max |c_i| / |c_d|; every real root lies in (-bound, bound].
Rational cauchy_root_bound(const UniPoly& p);

// Disjoint intervals (lo, hi], one distinct real root each, in order.
struct RootInterval {
  Rational lo;
  Rational hi;
};

std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// Halves the interval until hi - lo <= width, keeping exactly one root.
RootInterval refine_interval(const SturmChain& chain, RootInterval iv, const Rational& width);

struct InterlacingReport {
  int n = 0;                // compares roots of N_n and N_{n-1}
  bool all_real = true;     // both deflated polynomials totally real
  bool interlaced = false;  // strict alternation p,q,p,...,p
  std::string detail;
};

// Real-rootedness and interlacing of N_n / x against N_{n-1} / x.
InterlacingReport verify_interlacing(int n, const TriangleProvider& prov = clean_provider());

}  // namespace tansec

#endif
