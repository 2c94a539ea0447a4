#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace {

void expect_ok(const props::Outcome& o) {
  EXPECT_GE(o.cases, 1000) << o.name;
  EXPECT_EQ(o.failures, 0) << o.name << " seed " << o.seed << ": " << o.first_failure;
}

}  // namespace

TEST(Property, IsqrtContracts) { expect_ok(props::isqrt_contracts()); }
TEST(Property, RatCmpSqrtEquality) { expect_ok(props::rat_cmp_sqrt_equality()); }
TEST(Property, RadCmpTotalOrder) { expect_ok(props::rad_cmp_total_order()); }
TEST(Property, SqrtLinearAgainstFloats) { expect_ok(props::sqrt_linear_vs_float()); }
TEST(Property, OmegaDuality) { expect_ok(props::omega_duality()); }
TEST(Property, GMonotonicity) { expect_ok(props::g_monotonicity()); }
TEST(Property, FDominatesG) { expect_ok(props::f_dominates_g()); }
TEST(Property, TailSoundness) { expect_ok(props::tail_soundness()); }
TEST(Property, IntersectionForm) { expect_ok(props::intersection_form()); }
TEST(Property, StarAdditivity) { expect_ok(props::star_additivity()); }
TEST(Property, CensusMerge) { expect_ok(props::census_merge()); }

TEST(Property, OtherSeedsToo) {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    expect_ok(props::omega_duality(seed, 1000));
    expect_ok(props::isqrt_contracts(seed, 1000));
  }
}
