#ifndef TANSEC_ORACLES_HPP
#define TANSEC_ORACLES_HPP

#include "tansec/rational.hpp"
#include "tansec/unipoly.hpp"

#include <vector>

namespace tansec {

// Histogram of a statistic over a finite family of objects of size n.
struct StatDistribution {
  int n = 0;
  int min_stat = 0;
  std::vector<BigInt> counts;  // counts[i] = #objects with stat = min_stat + i
  BigInt total = 0;

  int max_stat() const { return min_stat + static_cast<int>(counts.size()) - 1; }
  BigInt get(int stat) const;
  UniPoly gen_poly() const;  // sum counts[stat] x^stat
};

// Statistics over S_n, enumerated with std::next_permutation.
// DescentPlusOne reports des(pi) + 1 so the histogram lines up with the
// A rows without reindexing. InteriorPeak counts positions 1 < i < n with
// pi(i-1) < pi(i) > pi(i+1); LeftPeak also admits i = 1 when pi(1) > pi(2).
enum class PermStat { DescentPlusOne, InteriorPeak, LeftPeak };

StatDistribution perm_statistic_distribution(int n, PermStat stat);  // 1 <= n <= 10

// Descents of signed permutations with pi(0) = 0: the count of i in [1, n]
// with pi(i-1) > pi(i), over all 2^n n! sign/order choices. 1 <= n <= 7.
StatDistribution signed_perm_desB_distribution(int n);

// Down-up alternating permutations pi(1) > pi(2) < pi(3) > ...
// E_0 = E_1 = 1; 0 <= n <= 10.
BigInt alternating_count(int n);
std::vector<BigInt> alternating_counts_upto(int n);

// Perfect matchings of {1..2n} counted by the number of pairs whose smaller
// element is odd; generated by always pairing the smallest unmatched element.
// 1 <= n <= 8 ((2n-1)!! objects).
StatDistribution matching_odd_smaller_distribution(int n);

// Partitions of {1..n} by block count (restricted growth strings). 1 <= n <= 10.
StatDistribution set_partition_counts(int n);

}  // namespace tansec

#endif
