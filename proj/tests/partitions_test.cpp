#include "maxmin/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

namespace maxmin {
namespace {

const std::string kTable = std::string(MAXMIN_TEST_DATA_DIR) + "/table1.csv";

// The published triangle for 0 <= k <= n <= 10.
const std::vector<std::vector<Count>> kPublished{
    {1},
    {1, 1},
    {2, 3, 1},
    {3, 6, 4, 1},
    {5, 12, 11, 5, 1},
    {7, 20, 24, 16, 6, 1},
    {11, 35, 49, 41, 22, 7, 1},
    {15, 54, 89, 91, 63, 29, 8, 1},
    {22, 86, 158, 186, 155, 92, 37, 9, 1},
    {30, 128, 262, 351, 342, 247, 129, 46, 10, 1},
    {42, 192, 428, 635, 700, 590, 376, 175, 56, 11, 1},
};

// First bold column of each published row.
const std::vector<std::size_t> kFirstBold{0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5};

Partition parts(std::initializer_list<std::size_t> xs) { return Partition{std::vector<std::size_t>(xs)}; }

TEST(EnumeratePartitions, Examples) {
  const auto zero = enumerate_partitions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].parts.empty());
  EXPECT_EQ(enumerate_partitions(4),
            (std::vector<Partition>{parts({4}), parts({3, 1}), parts({2, 2}), parts({2, 1, 1}),
                                    parts({1, 1, 1, 1})}));
  EXPECT_EQ(enumerate_partitions(8).size(), 22u);
}

TEST(EnumeratePartitions, CountsMatchRecurrence) {
  const auto oracle = testing::partition_count_table(20);
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto by_length = partitions_by_length(n);
    for (std::size_t l = 0; l <= n; ++l) ASSERT_EQ(by_length[l], oracle[n][l]) << n << "," << l;
    for (const auto& p : enumerate_partitions(n)) {
      ASSERT_EQ(p.sum(), n);
      ASSERT_TRUE(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    }
  }
}

TEST(Binomial, MatchesPascal) {
  for (std::size_t n = 0; n <= 40; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) ASSERT_EQ(binomial(n, k), testing::pascal(n, k));
  }
  static_assert(binomial(8, 5) == 56);
}

TEST(Tnk, Examples) {
  EXPECT_EQ(t_nk(8, 5), 92u);
  EXPECT_EQ(t_nk(2, 1), 3u);
  EXPECT_EQ(t_nk(4, 2), 11u);
  EXPECT_EQ(t_nk(3, 4), 0u);
  EXPECT_EQ(t_nk(0, 0), 1u);
}

TEST(Tnk, ContributionsOfEightFive) {
  const auto rows = t_nk_contributions(8, 5);
  std::vector<Partition> got;
  std::vector<Count> counts;
  for (const auto& r : rows) {
    got.push_back(r.partition);
    counts.push_back(r.ways);
  }
  EXPECT_EQ(got, (std::vector<Partition>{parts({4, 1, 1, 1, 1}), parts({3, 2, 1, 1, 1}),
                                         parts({3, 1, 1, 1, 1, 1}), parts({2, 2, 2, 1, 1}),
                                         parts({2, 2, 1, 1, 1, 1}), parts({2, 1, 1, 1, 1, 1, 1}),
                                         parts({1, 1, 1, 1, 1, 1, 1, 1})}));
  EXPECT_EQ(counts, (std::vector<Count>{1, 1, 6, 1, 6, 21, 56}));
}

TEST(TTriangle, MatchesPublishedTable) {
  const PartitionTriangle tri = t_triangle(10);
  ASSERT_EQ(tri.rows, kPublished);
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(PartitionTriangle::bold(n, k), k >= kFirstBold[n]) << n << "," << k;
    }
  }
  EXPECT_EQ(tri.at(10, 5), 590u);
  EXPECT_EQ(tri.at(3, 7), 0u);
  EXPECT_THROW((void)tri.at(11, 0), std::out_of_range);
}

TEST(TTriangle, IndependentOracle) {
  const auto p = testing::partition_count_table(18);
  const PartitionTriangle tri = t_triangle(18);
  for (std::size_t n = 0; n <= 18; ++n) {
    Count row_sum = 0;
    Count two_pow = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      Count expected = 0;
      for (std::size_t l = k; l <= n; ++l) expected += p[n][l] * testing::pascal(l, k);
      ASSERT_EQ(tri.at(n, k), expected);
      row_sum += tri.at(n, k);
    }
    for (std::size_t l = 0; l <= n; ++l) two_pow += p[n][l] << l;
    ASSERT_EQ(row_sum, two_pow);
  }
}

TEST(CrosscheckTriangle, PublishedFileMatches) {
  const TriangleReport report = crosscheck_triangle(kTable);
  EXPECT_EQ(report.cells.size(), 66u);
  EXPECT_TRUE(report.ok());
}

TEST(CrosscheckTriangle, DetectsAlteredCell) {
  std::ifstream in(kTable);
  std::stringstream text;
  text << in.rdbuf();
  std::string altered = text.str();
  altered.replace(altered.find("590"), 3, "591");
  std::istringstream stream(altered);
  const TriangleReport report = crosscheck_triangle(read_triangle(stream));
  ASSERT_EQ(report.mismatches(), 1u);
  for (const auto& c : report.cells) {
    if (!c.match()) {
      EXPECT_EQ(c.n, 10u);
      EXPECT_EQ(c.k, 5u);
      EXPECT_EQ(c.expected, 591u);
      EXPECT_EQ(c.actual, 590u);
    }
  }
}

TEST(CrosscheckTriangle, EmptyInputIsVacuous) {
  std::istringstream empty("");
  const TriangleReport report = crosscheck_triangle(read_triangle(empty));
  EXPECT_TRUE(report.cells.empty());
  EXPECT_TRUE(report.ok());
}

TEST(CrosscheckTriangle, MalformedLineReported) {
  std::istringstream bad("1\n1,1\n2,x,1\n");
  try {
    (void)read_triangle(bad);
    FAIL() << "malformed input accepted";
  } catch (const TriangleFormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream short_row("1\n1\n");
  EXPECT_THROW((void)read_triangle(short_row, TriangleFormat::Csv), TriangleFormatError);
  EXPECT_THROW((void)crosscheck_triangle("/nonexistent/triangle.csv"), std::runtime_error);
}

TEST(CrosscheckTriangle, BFile) {
  std::ostringstream bfile;
  bfile << "# A256193\n";
  std::size_t index = 0;
  for (const auto& row : kPublished) {
    for (Count v : row) bfile << index++ << ' ' << v << '\n';
  }
  std::istringstream in(bfile.str());
  const auto cells = read_triangle(in);
  ASSERT_EQ(cells.size(), 66u);
  EXPECT_EQ(cells.back().n, 10u);
  EXPECT_EQ(cells.back().k, 10u);
  EXPECT_TRUE(crosscheck_triangle(cells).ok());

  std::istringstream bad("0 1\n1 1 1\n");
  EXPECT_THROW((void)read_triangle(bad, TriangleFormat::BFile), TriangleFormatError);
}

}  // namespace
}  // namespace maxmin
