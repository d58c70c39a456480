#include "maxmin/bijection.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "maxmin/weight.hpp"
#include "test_support.hpp"

namespace maxmin {
namespace {

Stem stem(std::size_t n, std::size_t d, std::vector<Label> labels) { return {labels, n, d}; }

Partition parts(std::initializer_list<std::size_t> xs) {
  return Partition{std::vector<std::size_t>(xs)};
}

TEST(CountPermsByWeight, Examples) {
  EXPECT_EQ(count_perms_by_weight(5, 2, 2), 11u);
  EXPECT_EQ(count_perms_by_weight(3, 1, 1), 1u);
  EXPECT_EQ(count_perms_by_weight(4, 0, 0), 1u);
  EXPECT_EQ(count_perms_by_weight(4, 1, 9), 0u);
  EXPECT_THROW(count_perms_by_weight(12, 5, 1), LimitError);
}

TEST(VerifyBijection, Examples) {
  QEulerianTable table({1, 9});
  const auto r52 = verify_bijection(5, 2, table);
  EXPECT_EQ(r52.weight, 2u);
  EXPECT_EQ(r52.brute, 11u);
  EXPECT_EQ(r52.tnk, 11u);
  EXPECT_TRUE(r52.three_way);

  const auto r95 = verify_bijection(9, 5, table);
  EXPECT_EQ(r95.weight, 12u);
  EXPECT_EQ(r95.brute, 92u);
  EXPECT_EQ(r95.stem_total, 92u);
  EXPECT_EQ(r95.tnk, 92u);
  EXPECT_TRUE(r95.bold_region);
  EXPECT_FALSE(r95.theorem_region);
  EXPECT_TRUE(r95.three_way);

  const auto r31 = verify_bijection(3, 1, table);
  EXPECT_EQ(r31.brute, 3u);
  EXPECT_TRUE(r31.pass);

  EXPECT_THROW(verify_bijection(4, 0, table), std::invalid_argument);
  EXPECT_THROW(verify_bijection(4, 4, table), std::invalid_argument);
}

TEST(VerifyBijection, BoldRegionSweep) {
  QEulerianTable table({1, 10});
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      if (2 * d + 1 < n) continue;
      const auto r = verify_bijection(n, d, table);
      EXPECT_TRUE(r.three_way) << "n=" << n << " d=" << d << " brute=" << r.brute
                               << " stems=" << r.stem_total << " T=" << r.tnk;
    }
  }
}

TEST(VerifyBijection, OutsideBoldRegionIsReported) {
  // n >= 2d but 2d < n-1: the counts differ, and the record says so.
  const auto r = verify_bijection(6, 2);
  EXPECT_FALSE(r.bold_region);
  EXPECT_TRUE(r.theorem_region);
  EXPECT_EQ(r.brute, 31u);
  EXPECT_EQ(r.tnk, 24u);
  EXPECT_FALSE(r.pass);
}

TEST(EnumerateStems, Examples) {
  const auto stems = enumerate_stems(9, 5);
  std::vector<std::vector<Label>> labels;
  for (const auto& s : stems) labels.push_back(s.labels);
  EXPECT_EQ(labels, (std::vector<std::vector<Label>>{{1, 2, 3, 4},
                                                     {1, 2, 3, 5},
                                                     {1, 2, 3, 6},
                                                     {1, 2, 3, 7},
                                                     {1, 2, 4, 5},
                                                     {1, 2, 4, 6},
                                                     {1, 3, 4, 5}}));
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto single = enumerate_stems(n, n - 1);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].labels, (std::vector<Label>{1}));
  }
  std::vector<std::vector<Label>> small;
  for (const auto& s : enumerate_stems(4, 2)) small.push_back(s.labels);
  EXPECT_EQ(small, (std::vector<std::vector<Label>>{{1, 2}, {1, 3}}));
  EXPECT_THROW(enumerate_stems(4, 4), std::invalid_argument);
}

TEST(StemCount, Examples) {
  EXPECT_EQ(stem_count(stem(9, 5, {1, 2, 3, 4})), 56u);
  EXPECT_EQ(stem_count(stem(9, 5, {1, 2, 3, 5})), 21u);
  EXPECT_EQ(stem_count(stem(9, 5, {1, 3, 4, 5})), 1u);
  std::vector<Count> counts;
  for (const auto& s : enumerate_stems(9, 5)) counts.push_back(stem_count(s));
  EXPECT_EQ(counts, (std::vector<Count>{56, 21, 6, 1, 6, 1, 1}));
}

TEST(StemToPartition, Examples) {
  EXPECT_EQ(stem_to_partition(stem(9, 5, {1, 2, 3, 4})), parts({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(stem_to_partition(stem(9, 5, {1, 2, 3, 5})), parts({2, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(stem_to_partition(stem(9, 5, {1, 3, 4, 5})), parts({2, 2, 2, 1, 1}));
  EXPECT_EQ(stem_to_partition(stem(9, 5, {1, 2, 3, 7})), parts({4, 1, 1, 1, 1}));
  EXPECT_EQ(stem_to_partition(stem(9, 5, {1, 2, 4, 6})), parts({3, 2, 1, 1, 1}));
  EXPECT_THROW(stem_to_partition(stem(7, 2, {1, 2, 3, 7})), std::domain_error);
}

TEST(StemToPartition, MapsOntoContributions) {
  std::set<Partition> images;
  for (const auto& s : enumerate_stems(9, 5)) {
    const Partition p = stem_to_partition(s);
    EXPECT_EQ(binomial(p.length(), 5), stem_count(s));
    images.insert(p);
  }
  std::set<Partition> expected;
  for (const auto& c : t_nk_contributions(8, 5)) expected.insert(c.partition);
  EXPECT_EQ(images, expected);
}

TEST(VerifyStemTotals, Examples) {
  const auto r95 = verify_stem_totals(9, 5);
  EXPECT_EQ(r95.stems.size(), 7u);
  EXPECT_EQ(r95.stem_total, 92u);
  EXPECT_TRUE(r95.injective);
  EXPECT_TRUE(r95.ok);

  const auto r31 = verify_stem_totals(3, 1);
  EXPECT_EQ(r31.stem_total, 3u);
  EXPECT_TRUE(r31.ok);

  for (std::size_t n = 2; n <= 12; ++n) {
    const auto r = verify_stem_totals(n, n - 1);
    EXPECT_EQ(r.stem_total, 1u);
    EXPECT_TRUE(r.ok);
  }
}

TEST(VerifyStemTotals, BoldRegionBeyondEnumeration) {
  for (std::size_t n = 2; n <= 20; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      if (2 * d + 1 < n) continue;
      EXPECT_TRUE(verify_stem_totals(n, d).ok) << n << "," << d;
    }
  }
}

// Maximum weight with d descents, reached by a path stem with every leaf at
// its bottom node.
TEST(NearMaximal, MaxWeightIsDTimesNMinusDMinusOne) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::int64_t> best(n, -1);
    testing::for_each_permutation(n, [&](const Permutation& p) {
      auto& b = best[descent_count(p)];
      b = std::max(b, weight_via_ranges(p));
    });
    for (std::size_t d = 0; d < n; ++d) {
      EXPECT_EQ(best[d], static_cast<std::int64_t>(d * (n - d - 1))) << n << "," << d;
    }
  }
}

TEST(NearMaximal, NearMaximalStemsArePaths) {
  for (std::size_t n = 2; n <= 8; ++n) {
    testing::for_each_permutation(n, [&](const Permutation& p) {
      const std::size_t d = descent_count(p);
      if (d < 1 || 2 * d + 1 < n) return;
      if (weight_via_ranges(p) != static_cast<std::int64_t>(near_max_weight(n, d))) return;
      const MinDecompTree t = build_min_decomp(p);
      ASSERT_TRUE(stem_is_path(t));
      const auto chain = stem_chain(t);
      ASSERT_EQ(chain.size(), n - d);
      const auto stems = enumerate_stems(n, d);
      ASSERT_NE(std::find(stems.begin(), stems.end(), Stem{chain, n, d}), stems.end());
    });
  }
}

TEST(StemIsPath, Examples) {
  EXPECT_TRUE(stem_is_path(build_min_decomp(Permutation::identity(5))));
  EXPECT_TRUE(stem_is_path(build_min_decomp(Permutation::reversal(5))));
  EXPECT_EQ(stem_chain(build_min_decomp(Permutation::identity(3))), (std::vector<Label>{1, 2, 3}));
  // 3 has stem children 4 and 6.
  EXPECT_FALSE(stem_is_path(build_min_decomp({1, 2, 4, 5, 3, 6})));
}

}  // namespace
}  // namespace maxmin
