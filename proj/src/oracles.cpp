#include "tansec/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tansec {

BigInt StatDistribution::get(int stat) const {
  int i = stat - min_stat;
  if (i < 0 || i >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(i)];
}

UniPoly StatDistribution::gen_poly() const {
  UniPoly p;
  for (std::size_t i = 0; i < counts.size(); ++i)
    p += UniPoly::monomial(static_cast<std::size_t>(min_stat) + i, Rational(counts[i]));
  return p;
}

namespace {

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                            std::to_string(lo) + "," + std::to_string(hi) + "]");
}

// raw[s] counts objects with statistic s; keep the slice [min_stat, last nonzero].
StatDistribution finalize(int n, std::vector<BigInt> raw, int min_stat) {
  StatDistribution d;
  d.n = n;
  d.min_stat = min_stat;
  std::size_t last = raw.size();
  while (last > static_cast<std::size_t>(min_stat) && raw[last - 1] == 0) --last;
  d.counts.assign(raw.begin() + min_stat, raw.begin() + static_cast<std::ptrdiff_t>(last));
  if (d.counts.empty()) d.counts.push_back(0);
  for (const BigInt& c : d.counts) d.total += c;
  return d;
}

}  // namespace

StatDistribution perm_statistic_distribution(int n, PermStat stat) {
  require_range(n, 1, 10, "perm_statistic_distribution");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<BigInt> raw(static_cast<std::size_t>(n + 1));
  do {
    int s = 0;
    switch (stat) {
      case PermStat::DescentPlusOne:
        s = 1;
        for (int i = 0; i + 1 < n; ++i)
          if (pi[i] > pi[i + 1]) ++s;
        break;
      case PermStat::LeftPeak:
        if (n >= 2 && pi[0] > pi[1]) ++s;
        [[fallthrough]];
      case PermStat::InteriorPeak:
        for (int i = 1; i + 1 < n; ++i)
          if (pi[i - 1] < pi[i] && pi[i] > pi[i + 1]) ++s;
        break;
    }
    ++raw[static_cast<std::size_t>(s)];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return finalize(n, std::move(raw), stat == PermStat::DescentPlusOne ? 1 : 0);
}

StatDistribution signed_perm_desB_distribution(int n) {
  require_range(n, 1, 7, "signed_perm_desB_distribution");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<BigInt> raw(static_cast<std::size_t>(n + 1));
  std::vector<int> v(static_cast<std::size_t>(n));
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1u ? -pi[i] : pi[i];
      int s = 0;
      int prev = 0;  // pi(0) = 0
      for (int i = 0; i < n; ++i) {
        if (prev > v[i]) ++s;
        prev = v[i];
      }
      ++raw[static_cast<std::size_t>(s)];
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return finalize(n, std::move(raw), 0);
}

namespace {

bool is_down_up(const std::vector<int>& pi) {
  for (std::size_t j = 0; j + 1 < pi.size(); ++j) {
    if (j % 2 == 0 ? pi[j] < pi[j + 1] : pi[j] > pi[j + 1]) return false;
  }
  return true;
}

}  // namespace

BigInt alternating_count(int n) {
  require_range(n, 0, 10, "alternating_count");
  if (n <= 1) return 1;
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  BigInt count = 0;
  do {
    if (is_down_up(pi)) ++count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

std::vector<BigInt> alternating_counts_upto(int n) {
  require_range(n, 0, 10, "alternating_counts_upto");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) out.push_back(alternating_count(m));
  return out;
}

StatDistribution matching_odd_smaller_distribution(int n) {
  require_range(n, 1, 8, "matching_odd_smaller_distribution");
  int two_n = 2 * n;
  std::vector<bool> used(static_cast<std::size_t>(two_n + 1), false);
  std::vector<BigInt> raw(static_cast<std::size_t>(n + 1));
  // Pair the smallest unmatched element with every larger one in turn; each
  // matching is produced exactly once.
  std::function<void(int)> rec = [&](int odd_pairs) {
    int a = 0;
    for (int i = 1; i <= two_n; ++i) {
      if (!used[static_cast<std::size_t>(i)]) {
        a = i;
        break;
      }
    }
    if (a == 0) {
      ++raw[static_cast<std::size_t>(odd_pairs)];
      return;
    }
    used[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b <= two_n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      rec(odd_pairs + (a % 2));
      used[static_cast<std::size_t>(b)] = false;
    }
    used[static_cast<std::size_t>(a)] = false;
  };
  rec(0);
  return finalize(n, std::move(raw), 1);  // the pair containing 1 always counts
}

StatDistribution set_partition_counts(int n) {
  require_range(n, 1, 10, "set_partition_counts");
  // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<BigInt> raw(static_cast<std::size_t>(n + 1));
  std::function<void(int, int)> rec = [&](int i, int max_so_far) {
    if (i == n) {
      ++raw[static_cast<std::size_t>(max_so_far + 1)];
      return;
    }
    for (int b = 0; b <= max_so_far + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(max_so_far, b));
    }
  };
  rec(1, 0);
  return finalize(n, std::move(raw), 1);
}

}  // namespace tansec
