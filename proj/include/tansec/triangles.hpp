#ifndef TANSEC_TRIANGLES_HPP
#define TANSEC_TRIANGLES_HPP

#include "tansec/rational.hpp"
#include "tansec/unipoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tansec {

// The named two-term-recurrence triangles. LittleA is the Worpitzky
// triangle a(n,k), LittleF the type-B f-vector triangle f(n,k).
enum class Family { A, B, S, E, H, LittleA, G, LittleF, M, N, R, T };

inline constexpr std::array<Family, 12> kAllFamilies = {
    Family::A, Family::B, Family::S, Family::E, Family::H, Family::LittleA,
    Family::G, Family::LittleF, Family::M, Family::N, Family::R, Family::T};

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct TriangleRow {
  int n = 0;
  int k_offset = 0;
  std::vector<BigInt> entries;

  int k_min() const { return k_offset; }
  int k_max() const { return k_offset + static_cast<int>(entries.size()) - 1; }
  const BigInt& at(int k) const;  // throws outside the support
  BigInt get(int k) const;        // zero outside the support
  bool operator==(const TriangleRow&) const = default;
};

// Affine form c0 + cn*n + ck*k for the recurrence coefficients of
// X(n+1,k) = alpha(n,k) X(n,k) + beta(n,k) X(n,k-1).
struct AffineNK {
  long c0 = 0;
  long cn = 0;
  long ck = 0;
  BigInt eval(int n, int k) const { return BigInt(c0) + BigInt(cn) * n + BigInt(ck) * k; }
};

struct TriangleSpec {
  Family family;
  AffineNK alpha;
  AffineNK beta;
  int first_n = 0;      // n of the initial row
  TriangleRow initial;
  int (*k_min)(int n);  // support of row n, n >= first_n
  int (*k_max)(int n);
};

const TriangleSpec& named_spec(Family f);

// Rows first_n .. first_n + rows - 1, computed exactly from the initial row.
std::vector<TriangleRow> generate_triangle(const TriangleSpec& spec, int rows);

// Bumps one stored entry by one; used to prove the verification suite
// notices a corrupted table.
struct FaultSpec {
  Family family;
  int n = 0;
  int k = 0;
};

// Cached row access for the registered families, with an optional fault.
class TriangleProvider {
 public:
  TriangleProvider() = default;
  explicit TriangleProvider(std::optional<FaultSpec> fault) : fault_(std::move(fault)) {}

  const TriangleRow& row(Family f, int n) const;
  BigInt entry(Family f, int n, int k) const { return row(f, n).get(k); }
  UniPoly poly(Family f, int n) const;

 private:
  std::optional<FaultSpec> fault_;
  mutable std::map<Family, std::vector<TriangleRow>> cache_;
};

const TriangleProvider& clean_provider();

// Row -> polynomial in the family's exponent convention:
//   A,B,S,E,H,M,N : sum X(n,k) x^k
//   a (LittleA)   : W_n(x) = sum a(n,k) x^(k+1)
//   G             : sum G(n,k) x^(k-1)
//   f (LittleF),T : sum X(n,k) y^(2k)
//   R             : sum R(n,k) y^(2k+1)
UniPoly family_poly(Family f, int n, const TriangleProvider& prov = clean_provider());
std::string family_variable(Family f);  // the letter the family prints in

// sum of row entries times x^(scale*k + offset)
UniPoly row_poly(const TriangleRow& row, long exp_scale, long exp_offset);

// Alternating-sum closed forms; supported for A, B and N.
BigInt explicit_entry(Family f, int n, int k, const TriangleProvider& prov = clean_provider());

// J(2n, 0..2n): B(n,.) at even positions interleaved with 2^n A(n,.) at odd.
TriangleRow interleave_J(int n, const TriangleProvider& prov = clean_provider());
UniPoly j_poly(int n, const TriangleProvider& prov = clean_provider());

// a(n, 0..n) by the binomial transform a(n,n-k) = sum_{i>=k} C(i,k) A(n,i).
TriangleRow worpitzky_from_A(int n, const TriangleProvider& prov = clean_provider());

// N_n(x) = sum_k 2^(n-2k) C(2k,k) k! S(n,k) x^k (1-x)^(n-k).
UniPoly n_poly_closed(int n, const TriangleProvider& prov = clean_provider());

// m!! for odd m >= -1; (-1)!! = 1.
BigInt double_factorial(long m);

// f_n(y) by f_{n+1} = (1+2y^2) f_n + y(1+y^2) f_n', f_0 = 1.
UniPoly f_small_recurrence(int n);
// F_n(y) = 2^n a_n(y) by F_{n+1} = (1+y^2) F_n + y(1+y^2) F_n', F_0 = y.
UniPoly f_big_recurrence(int n);

}  // namespace tansec

#endif
