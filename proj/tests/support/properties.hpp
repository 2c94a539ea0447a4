#pragma once
// Randomized invariant checks. Each suite is deterministic for a given seed
// and reports how many cases it actually evaluated.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

inline constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  std::string name;
  std::uint64_t seed = kSeed;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

Outcome isqrt_contracts(std::uint64_t seed = kSeed, int cases = 2000);
Outcome rat_cmp_sqrt_equality(std::uint64_t seed = kSeed, int cases = 2000);
Outcome rad_cmp_total_order(std::uint64_t seed = kSeed, int cases = 2000);
Outcome sqrt_linear_vs_float(std::uint64_t seed = kSeed, int cases = 2000);
Outcome omega_duality(std::uint64_t seed = kSeed, int cases = 5000);
Outcome g_monotonicity(std::uint64_t seed = kSeed, int cases = 3000);
Outcome f_dominates_g(std::uint64_t seed = kSeed, int cases = 2000);
Outcome tail_soundness(std::uint64_t seed = kSeed, int problems = 12, int per_problem = 1000);
Outcome intersection_form(std::uint64_t seed = kSeed, int cases = 2000);
Outcome star_additivity(std::uint64_t seed = kSeed, int cases = 2000);
Outcome census_merge(std::uint64_t seed = kSeed, int ranges = 6);

/// Every suite above with its default sizes.
std::vector<Outcome> all(std::uint64_t seed = kSeed);

}  // namespace props
