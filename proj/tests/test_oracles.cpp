#include "doctest.h"

#include "tansec/oracles.hpp"
#include "tansec/rational.hpp"
#include "tansec/triangles.hpp"

#include <stdexcept>
#include <vector>

using namespace tansec;

TEST_CASE("descent counts over S_n line up with the A rows") {
  StatDistribution d = perm_statistic_distribution(3, PermStat::DescentPlusOne);
  CHECK(d.total == 6);
  CHECK(d.min_stat == 1);
  CHECK(d.counts == std::vector<BigInt>{1, 4, 1});
  CHECK(d.gen_poly() == family_poly(Family::A, 3));
  CHECK(perm_statistic_distribution(4, PermStat::DescentPlusOne).gen_poly() ==
        family_poly(Family::A, 4));
}

TEST_CASE("interior and left peak histograms, hand-counted") {
  StatDistribution ip3 = perm_statistic_distribution(3, PermStat::InteriorPeak);
  CHECK(ip3.min_stat == 0);
  CHECK(ip3.counts == std::vector<BigInt>{4, 2});
  CHECK(ip3.total == 6);

  StatDistribution ip4 = perm_statistic_distribution(4, PermStat::InteriorPeak);
  CHECK(ip4.counts == std::vector<BigInt>{8, 16});
  CHECK(ip4.total == 24);

  StatDistribution lp3 = perm_statistic_distribution(3, PermStat::LeftPeak);
  CHECK(lp3.counts == std::vector<BigInt>{1, 5});

  CHECK_THROWS_AS(perm_statistic_distribution(0, PermStat::InteriorPeak), std::out_of_range);
  CHECK_THROWS_AS(perm_statistic_distribution(11, PermStat::InteriorPeak), std::out_of_range);
}

TEST_CASE("signed descent histogram matches the B rows") {
  StatDistribution d2 = signed_perm_desB_distribution(2);
  CHECK(d2.total == 8);  // 2^2 * 2!
  CHECK(d2.gen_poly() == family_poly(Family::B, 2));
  CHECK(d2.counts == std::vector<BigInt>{1, 6, 1});
  CHECK_THROWS_AS(signed_perm_desB_distribution(8), std::out_of_range);
}

TEST_CASE("alternating permutation counts") {
  std::vector<BigInt> expect{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  CHECK(alternating_counts_upto(10) == expect);
  for (int n = 0; n <= 10; ++n) CHECK(alternating_count(n) == expect[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(alternating_count(-1), std::out_of_range);
  CHECK_THROWS_AS(alternating_count(11), std::out_of_range);
}

TEST_CASE("matchings of {1..2n} by odd-smaller pairs") {
  StatDistribution m2 = matching_odd_smaller_distribution(2);
  CHECK(m2.counts == std::vector<BigInt>{2, 1});
  CHECK(m2.min_stat == 1);
  for (int n = 1; n <= 6; ++n)
    CHECK(matching_odd_smaller_distribution(n).total == double_factorial(2 * n - 1));
  CHECK_THROWS_AS(matching_odd_smaller_distribution(9), std::out_of_range);
}

TEST_CASE("set partitions by block count") {
  StatDistribution p4 = set_partition_counts(4);
  CHECK(p4.min_stat == 1);
  CHECK(p4.counts == std::vector<BigInt>{1, 7, 6, 1});
  CHECK(p4.get(2) == 7);
  CHECK(p4.total == 15);  // Bell(4)
  CHECK_THROWS_AS(set_partition_counts(0), std::out_of_range);
}

TEST_CASE("StatDistribution helpers") {
  StatDistribution d = set_partition_counts(3);
  CHECK(d.get(0) == 0);  // off the histogram
  CHECK(d.get(99) == 0);
  CHECK(d.max_stat() == 3);
  CHECK(d.gen_poly().str() == "x + 3*x^2 + x^3");
}
