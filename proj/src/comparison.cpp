#include "seshadri/comparison.hpp"

#include <stdexcept>

#include "seshadri/bounds.hpp"

namespace seshadri {

std::string to_string(PriorBoundName name) {
  switch (name) {
    case PriorBoundName::ssz_7_9: return "ssz_7_9";
    case PriorBoundName::abelian_7_8: return "abelian_7_8";
    case PriorBoundName::hr_093: return "hr_093";
  }
  return "unknown";
}

PriorBoundName parse_prior_bound(const std::string& text) {
  if (text == "ssz_7_9") return PriorBoundName::ssz_7_9;
  if (text == "abelian_7_8") return PriorBoundName::abelian_7_8;
  if (text == "hr_093") return PriorBoundName::hr_093;
  throw std::invalid_argument("unknown prior bound '" + text + "'");
}

RadicalBound prior_bound(PriorBoundName name, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("prior_bound: N must be >= 1");
  const BigInt big_n(static_cast<long>(n));
  switch (name) {
    case PriorBoundName::ssz_7_9: return RadicalBound(Rat(1, 3), 7 * big_n);
    case PriorBoundName::abelian_7_8: return RadicalBound(Rat(1, 4), 14 * big_n);
    case PriorBoundName::hr_093: return RadicalBound(Rat(93, 100), big_n);
  }
  throw std::invalid_argument("prior_bound: unknown name");
}

std::vector<std::int64_t> published_table_ns() { return {2, 6, 8, 10, 50, 100, 5000, 20000}; }

std::vector<TableRow> comparison_table(std::span<const std::int64_t> ns, int decimals,
                                       DecimalStyle style) {
  std::vector<TableRow> rows;
  rows.reserve(ns.size());
  for (const std::int64_t n : ns) {
    const BoundProblem problem(n);
    const Rat value = lower_bound_small(problem).value;
    RadicalBound abelian = prior_bound(PriorBoundName::abelian_7_8, n);
    RadicalBound bielliptic = prior_bound(PriorBoundName::hr_093, n);
    const auto exact_value = RadicalBound::from_rational(value);
    const bool dominates = rad_cmp(exact_value, abelian) >= 0 && rad_cmp(exact_value, bielliptic) >= 0;
    rows.push_back(TableRow{n, abelian, bielliptic, value, to_decimal(abelian, decimals, style),
                            to_decimal(bielliptic, decimals, style), to_decimal(value, decimals, style),
                            dominates});
  }
  return rows;
}

bool dominance_check(std::int64_t n) {
  const BoundProblem problem(n);
  require_theorem_range(problem);
  const RadicalBound abelian = prior_bound(PriorBoundName::abelian_7_8, n);
  const RadicalBound hr = prior_bound(PriorBoundName::hr_093, n);
  const RadicalBound ssz = prior_bound(PriorBoundName::ssz_7_9, n);
  if (rad_cmp(abelian, hr) < 0) return false;
  if (rad_cmp(hr, ssz) <= 0) return false;
  for (std::int64_t m = 2; m <= 7; ++m) {
    const auto f = RadicalBound::from_rational(f_ratio(problem, m));
    const RadicalBound g = g_ratio(problem, m);
    if (rad_cmp(f, g) < 0) return false;
    if (rad_cmp(g, abelian) < 0) return false;
  }
  return true;
}

}  // namespace seshadri
