#pragma once

// Previously known lower bounds, as exact radicals, and the comparison
// table against the new rational bound.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seshadri/exact_math.hpp"

namespace seshadri {

enum class PriorBoundName {
  ssz_7_9,      ///< sqrt(7/9) sqrt(N), any smooth surface, very general points
  abelian_7_8,  ///< sqrt(7/8) sqrt(N), abelian surfaces
  hr_093,       ///< 0.93 sqrt(N), bielliptic surfaces
};

std::string to_string(PriorBoundName name);
PriorBoundName parse_prior_bound(const std::string& text);

RadicalBound prior_bound(PriorBoundName name, std::int64_t n);

struct TableRow {
  std::int64_t n;
  RadicalBound abelian;
  RadicalBound bielliptic;
  Rat new_bound;
  std::string abelian_text;
  std::string bielliptic_text;
  std::string new_bound_text;
  /// new_bound >= both prior bounds, compared exactly.
  bool dominates;
};

/// The self-intersections listed in the published comparison table.
std::vector<std::int64_t> published_table_ns();

std::vector<TableRow> comparison_table(std::span<const std::int64_t> ns, int decimals,
                                       DecimalStyle style = DecimalStyle::compact);

/// Every link of
///   d_min(m)/m >= g(N,m) >= sqrt(14N)/4 >= 0.93 sqrt(N) > sqrt(7/9) sqrt(N)
/// for m in 2..7, each decided exactly.
bool dominance_check(std::int64_t n);

}  // namespace seshadri
