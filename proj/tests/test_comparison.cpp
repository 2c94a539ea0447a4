#include <gtest/gtest.h>

#include "seshadri/bounds.hpp"
#include "seshadri/comparison.hpp"

using namespace seshadri;

TEST(PriorBound, Radicals) {
  const RadicalBound ssz = prior_bound(PriorBoundName::ssz_7_9, 9);
  EXPECT_EQ(ssz.coef(), Rat(BigInt(1), BigInt(3)));
  EXPECT_EQ(ssz.radicand(), 63);
  EXPECT_EQ(rad_cmp(ssz, RadicalBound(Rat(1), 7)), std::strong_ordering::equal);
  EXPECT_EQ(to_decimal(prior_bound(PriorBoundName::abelian_7_8, 2), 4), "1.3229");
  EXPECT_EQ(to_decimal(prior_bound(PriorBoundName::hr_093, 2), 4), "1.3152");
  EXPECT_EQ(parse_prior_bound("hr_093"), PriorBoundName::hr_093);
  EXPECT_THROW(parse_prior_bound("nope"), std::invalid_argument);
  EXPECT_THROW(prior_bound(PriorBoundName::hr_093, 0), std::invalid_argument);
}

TEST(Table, NewBoundColumn) {
  const auto ns = published_table_ns();
  const auto rows = comparison_table(ns, 4);
  const char* expected[] = {"1.3333", "2.3333", "2.6667", "3", "6.6667", "9.4", "66.25", "132.5"};
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].new_bound_text, expected[i]);
    EXPECT_TRUE(rows[i].dominates);
  }
}

TEST(Table, PriorColumnsAtExactRounding) {
  const auto ns = published_table_ns();
  const auto rows = comparison_table(ns, 4);
  const char* abelian[] = {"1.3229", "2.2913", "2.6458", "2.9580", "6.6144", "9.3541", "66.1438", "132.2876"};
  const char* hr[] = {"1.3152", "2.2780", "2.6304", "2.9409", "6.5761", "9.3", "65.7609", "131.5219"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].abelian_text, abelian[i]) << rows[i].n;
    EXPECT_EQ(rows[i].bielliptic_text, hr[i]) << rows[i].n;
  }
}

TEST(Table, FullPrecisionKeepsZeros) {
  const std::vector<std::int64_t> ns{10, 100};
  const auto rows = comparison_table(ns, 4, DecimalStyle::full);
  EXPECT_EQ(rows[0].new_bound_text, "3.0000");
  EXPECT_EQ(rows[1].bielliptic_text, "9.3000");
}

TEST(Table, RowTwoExact) {
  // (4/3)^2 = 64/36 > 63/36 = (7/8) * 2.
  const std::vector<std::int64_t> ns{2};
  const auto row = comparison_table(ns, 4).front();
  EXPECT_EQ(rad_cmp(RadicalBound::from_rational(row.new_bound), row.abelian), std::strong_ordering::greater);
  EXPECT_EQ(row.abelian.square(), Rat(BigInt(63), BigInt(36)));
}

TEST(Table, Deterministic) {
  const auto ns = published_table_ns();
  const auto a = comparison_table(ns, 6), b = comparison_table(ns, 6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].abelian_text, b[i].abelian_text);
    EXPECT_EQ(a[i].new_bound_text, b[i].new_bound_text);
  }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_check(2));
  EXPECT_TRUE(dominance_check(20000));
  // 0.93^2 = 8649/10000 > 7/9.
  EXPECT_GT(Rat(BigInt(8649), BigInt(10000)), Rat(BigInt(7), BigInt(9)));
  EXPECT_EQ(rad_cmp(prior_bound(PriorBoundName::hr_093, 1), prior_bound(PriorBoundName::ssz_7_9, 1)),
            std::strong_ordering::greater);
}

TEST(Dominance, Range) {
  for (std::int64_t n = 2; n <= 3000; ++n) ASSERT_TRUE(dominance_check(n)) << n;
}
