#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qtile/partition.hpp"
#include "qtile/products.hpp"

using namespace qtile;
using Rows = std::vector<std::vector<int>>;

TEST(Partition, RejectsIncreasingOrNonPositive) {
  EXPECT_NO_THROW(Partition({3, 3, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 2, 2}).size(), 7);
}

TEST(Partition, DurfeeSize) {
  EXPECT_EQ(durfee_size(Partition()), 0);
  EXPECT_EQ(durfee_size(Partition({1})), 1);
  EXPECT_EQ(durfee_size(Partition({5, 1})), 1);
  EXPECT_EQ(durfee_size(Partition({3, 3, 2})), 2);
  EXPECT_EQ(durfee_size(Partition({4, 4, 3, 3})), 3);
}

TEST(PlanePartition, Validation) {
  EXPECT_THROW(PlanePartition(Rows{{1, 2}}), std::invalid_argument);
  EXPECT_THROW(PlanePartition(Rows{{2}, {3}}), std::invalid_argument);
  EXPECT_THROW(PlanePartition(Rows{{-1}}), std::invalid_argument);
  EXPECT_THROW(PlanePartition(Rows{{2, 1}}, BoxBounds{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(PlanePartition(Rows{{3}}, BoxBounds{1, 1, 2}), std::invalid_argument);
  EXPECT_NO_THROW(PlanePartition(Rows{{2, 1}, {1}}, BoxBounds{2, 2, 2}));
}

TEST(PlanePartition, Statistics) {
  PlanePartition pi({{3, 2, 1}, {2, 2}, {1}});
  EXPECT_EQ(norm(pi), 11);
  EXPECT_EQ(trace(pi), 5);
  EXPECT_EQ(pi.max_part(), 3);
  EXPECT_EQ(pi.shape(), Partition({3, 2, 1}));
  EXPECT_EQ(k_cross_section(pi, 2), Partition({2, 2}));
  EXPECT_EQ(k_truncation(pi, 2).ragged(), (std::vector<std::vector<int>>{{3, 2}, {2, 2}}));
  EXPECT_EQ(durfee_profile(pi), (std::vector<int>{2, 2, 1}));
  EXPECT_THROW(k_truncation(pi, 0), std::invalid_argument);
}

TEST(PlanePartition, ProfileFixture) {
  // [[2,2],[2,1]]: parts >= 2 form rows of length 2 and 1.
  PlanePartition pi({{2, 2}, {2, 1}});
  oracle::Matrix m{2, 2, 2, 1};
  EXPECT_EQ(durfee_profile(pi), (std::vector<int>{oracle::durfee_by_cells(m, 2, 2, 1),
                                                  oracle::durfee_by_cells(m, 2, 2, 2)}));
  EXPECT_EQ(durfee_profile(pi), (std::vector<int>{2, 1}));
  EXPECT_TRUE(durfee_profile(PlanePartition()).empty());
}

TEST(PlanePartition, PaddingDoesNotChangeEquality) {
  PlanePartition a({{2, 1, 0}, {0, 0, 0}}), b({{2, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.padded_to(BoxBounds{3, 4, 2}), b);
  EXPECT_EQ(a.padded_to(BoxBounds{3, 4, 2}).rows(), 3);
}

TEST(Enumerate, MatchesBruteForceInOrder) {
  for (int r = 0; r <= 3; ++r)
    for (int c = 0; c <= 3; ++c)
      for (int n = 0; n <= 3; ++n) {
        if (r * c > 6 && n == 3) continue;  // keep the brute force small
        auto want = oracle::brute_box(r, c, n);
        std::vector<oracle::Matrix> got;
        for_each_in_box(BoxBounds{r, c, n}, [&](const PlanePartition& pi) { got.push_back(oracle::flatten(pi, r, c)); });
        EXPECT_EQ(got, want) << r << c << n;
      }
}

TEST(Enumerate, CountsMatchProductOracle) {
  EXPECT_EQ(macmahon_count(BoxBounds{1, 1, 1}), 2);
  EXPECT_EQ(macmahon_count(BoxBounds{2, 2, 2}), 20);
  EXPECT_EQ(macmahon_count(BoxBounds{3, 3, 3}), 980);
  EXPECT_EQ(macmahon_count(BoxBounds{4, 4, 4}), 232848);
  for (int r = 0; r <= 3; ++r)
    for (int c = 0; c <= 3; ++c)
      for (int n = 0; n <= 3; ++n) {
        BoxBounds b{r, c, n};
        EXPECT_EQ(mpz_class(static_cast<long>(enumerate_box(b).size())), macmahon_count(b)) << to_string(b);
      }
}

TEST(Enumerate, EmptyBoxHasOnlyTheEmptyPartition) {
  for (BoxBounds b : {BoxBounds{0, 0, 0}, BoxBounds{0, 3, 2}, BoxBounds{2, 0, 5}, BoxBounds{3, 3, 0}}) {
    auto all = enumerate_box(b);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_TRUE(all[0].empty());
  }
  EXPECT_TRUE(enumerate_box(BoxBounds{2, 2, 2}).front().empty());
}

TEST(Enumerate, TraceIsSumOfProfile) {
  for (int r = 0; r <= 3; ++r)
    for (int c = 0; c <= 3; ++c)
      for (int n = 0; n <= 3; ++n)
        for_each_in_box(BoxBounds{r, c, n}, [&](const PlanePartition& pi) {
          auto prof = durfee_profile(pi);
          long long s = 0;
          for (int k : prof) s += k;
          ASSERT_EQ(s, trace(pi)) << format_plane_partition(pi);
          auto m = oracle::flatten(pi, r, c);
          for (std::size_t k = 0; k < prof.size(); ++k)
            ASSERT_EQ(prof[k], oracle::durfee_by_cells(m, r, c, static_cast<int>(k) + 1));
        });
}

TEST(Format, RoundTrip) {
  EXPECT_EQ(format_plane_partition(PlanePartition()), "[]");
  EXPECT_EQ(format_plane_partition(PlanePartition(Rows{{2, 1}, {1}})), "[[2,1],[1]]");
  EXPECT_EQ(parse_plane_partition("[[2,1,0],[1,0,0]]"), PlanePartition(Rows{{2, 1}, {1}}));
  EXPECT_EQ(parse_plane_partition(" [ [ 3 ] ] "), PlanePartition(Rows{{3}}));
  EXPECT_TRUE(parse_plane_partition("[]").empty());
  EXPECT_THROW(parse_plane_partition("[[1,2]]"), std::invalid_argument);
  EXPECT_THROW(parse_plane_partition("[[1]"), std::invalid_argument);
  EXPECT_THROW(parse_plane_partition("hello"), std::invalid_argument);
  for (const auto& pi : enumerate_box(BoxBounds{2, 3, 2}))
    EXPECT_EQ(parse_plane_partition(format_plane_partition(pi)), pi);
}
