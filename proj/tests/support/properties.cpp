#include "properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "seshadri/bielliptic.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/exact_math.hpp"

namespace props {

using namespace seshadri;

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// Uniform in [0, 2^bits).
BigInt random_bits(Rng& rng, int bits) {
  BigInt out = 0;
  for (int done = 0; done < bits; done += 32) {
    out <<= 32;
    out += static_cast<unsigned long>(rng() & 0xffffffffu);
  }
  const int extra = ((bits + 31) / 32) * 32 - bits;
  if (extra > 0) out >>= extra;
  return out;
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream o;
  ((o << parts << ' '), ...);
  return o.str();
}

}  // namespace

Outcome isqrt_contracts(std::uint64_t seed, int cases) {
  Outcome out{"isqrt/ceil_sqrt contracts", seed};
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    BigInt n = random_bits(rng, static_cast<int>(uniform(rng, 1, 128)));
    if (i % 4 == 0) n = n * n + uniform(rng, -1, 1);  // near perfect squares
    if (n < 0) n = 0;
    const BigInt s = isqrt(n);
    const BigInt c = ceil_sqrt(n);
    BigInt ref;
    mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
    ++out.cases;
    if (!(s * s <= n && n < (s + 1) * (s + 1))) out.fail(describe("isqrt bracket n =", n.get_str()));
    if (s != ref) out.fail(describe("isqrt vs mpz_sqrt n =", n.get_str()));
    if (!(c - s == 0 || c - s == 1)) out.fail(describe("ceil - floor n =", n.get_str()));
    if (!(c * c >= n && (c == 0 || (c - 1) * (c - 1) < n))) out.fail(describe("ceil_sqrt n =", n.get_str()));
    if ((c == s) != (mpz_perfect_square_p(n.get_mpz_t()) != 0)) out.fail(describe("square n =", n.get_str()));
  }
  return out;
}

Outcome rat_cmp_sqrt_equality(std::uint64_t seed, int cases) {
  Outcome out{"rat_cmp_sqrt equality", seed};
  Rng rng(seed + 1);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t num = uniform(rng, 0, 5000);
    const std::int64_t den = uniform(rng, 1, 500);
    // Every other case is forced onto a square root so equality gets exercised.
    const std::int64_t n = i % 2 == 0 ? uniform(rng, 0, 1'000'000) : num * num * uniform(rng, 1, 3);
    const Rat r(big(num), big(den));
    const auto o = rat_cmp_sqrt(r, big(n));
    const oracle::i128 lhs = static_cast<oracle::i128>(r.num().get_si()) * r.num().get_si();
    const oracle::i128 rhs = static_cast<oracle::i128>(n) * r.den().get_si() * r.den().get_si();
    ++out.cases;
    if ((o == 0) != (lhs == rhs) || (o < 0) != (lhs < rhs))
      out.fail(describe("r =", r.str(), "n =", n));
  }
  return out;
}

Outcome rad_cmp_total_order(std::uint64_t seed, int cases) {
  Outcome out{"rad_cmp total order", seed};
  Rng rng(seed + 2);
  auto draw = [&] {
    // Small ranges make ties frequent.
    return RadicalBound(Rat(big(uniform(rng, 0, 12)), big(uniform(rng, 1, 6))), big(uniform(rng, 0, 40)));
  };
  for (int i = 0; i < cases; ++i) {
    const RadicalBound x = draw(), y = draw(), z = draw();
    const auto xy = rad_cmp(x, y), yx = rad_cmp(y, x), yz = rad_cmp(y, z), xz = rad_cmp(x, z);
    ++out.cases;
    if ((xy < 0) != (yx > 0) || (xy == 0) != (yx == 0)) out.fail("antisymmetry");
    if (xy <= 0 && yz <= 0 && !(xz <= 0)) out.fail("transitivity");
    if (rad_cmp(x, x) != 0) out.fail("reflexivity");
    const oracle::Dec vx = oracle::Dec(x.coef().num().get_si()) / x.coef().den().get_si() *
                           boost::multiprecision::sqrt(oracle::Dec(x.radicand().get_si()));
    const oracle::Dec vy = oracle::Dec(y.coef().num().get_si()) / y.coef().den().get_si() *
                           boost::multiprecision::sqrt(oracle::Dec(y.radicand().get_si()));
    if (xy != 0 && abs(vx - vy) > oracle::Dec("1e-30") && (xy < 0) != (vx < vy)) out.fail("float disagreement");
  }
  return out;
}

Outcome sqrt_linear_vs_float(std::uint64_t seed, int cases) {
  Outcome out{"sqrt_linear_cmp vs 50-digit floats", seed};
  Rng rng(seed + 3);
  std::int64_t skipped = 0;
  for (int i = 0; i < cases; ++i) {
    const long p = uniform(rng, 1, 60), a = uniform(rng, 1, 200), q = uniform(rng, 1, 60), b = uniform(rng, 1, 200),
               c = uniform(rng, 1, 100), n = uniform(rng, 1, 2'000'000);
    const bool exact = sqrt_linear_cmp(big(p), big(a), big(q), big(b), big(c), big(n));
    const oracle::Dec gap = oracle::linear_gap(p, a, q, b, c, n);
    const oracle::Dec scale = oracle::Dec(p) * boost::multiprecision::sqrt(oracle::Dec(a) * n) + c;
    if (abs(gap) <= scale * oracle::Dec("1e-20")) {
      ++skipped;
      continue;
    }
    ++out.cases;
    if (exact != (gap >= 0)) out.fail(describe(p, a, q, b, c, n));
  }
  return out;
}

Outcome omega_duality(std::uint64_t seed, int cases) {
  Outcome out{"Omega duality", seed};
  Rng rng(seed + 4);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t n = uniform(rng, 1, 500), d = uniform(rng, 1, 200), m = uniform(rng, 2, 50);
    const BoundProblem problem(n);
    const bool in = omega_contains(problem, OmegaPair{big(d), m});
    const bool by_dmin = big(d) >= d_min(problem, m);
    const auto mm = m_max(problem, big(d));
    const bool by_mmax = mm && m <= *mm;
    const bool by_oracle = static_cast<oracle::i128>(d) * d >= static_cast<oracle::i128>(n) * (m * m - m + 2);
    ++out.cases;
    if (in != by_dmin || in != by_mmax || in != by_oracle) out.fail(describe("N =", n, "d =", d, "m =", m));
    if (mm && m_max_closed_form(problem, big(d)) != mm) out.fail(describe("closed form N =", n, "d =", d));
  }
  return out;
}

Outcome g_monotonicity(std::uint64_t seed, int cases) {
  Outcome out{"g monotonicity", seed};
  Rng rng(seed + 5);
  auto w = [](std::int64_t m) { return static_cast<oracle::i128>(m * m - m + 2); };
  for (int i = 0; i < cases; ++i) {
    std::int64_t m1, m2;
    if (i % 3 == 0) {
      m1 = uniform(rng, 2, 3);
      m2 = uniform(rng, m1 + 1, 4);
    } else {
      m1 = uniform(rng, 4, 999);
      m2 = uniform(rng, m1 + 1, 1000);
    }
    const std::int64_t n = uniform(rng, 1, 100000);
    const BoundProblem problem(n);
    const auto o = rad_cmp(g_ratio(problem, m2), g_ratio(problem, m1));
    const oracle::i128 lhs = w(m2) * m1 * m1, rhs = w(m1) * m2 * m2;
    ++out.cases;
    if (m1 >= 4) {
      if (!(lhs > rhs) || !(o > 0)) out.fail(describe("increasing m1 =", m1, "m2 =", m2));
    } else {
      if (!(lhs < rhs) || !(o < 0)) out.fail(describe("decreasing m1 =", m1, "m2 =", m2));
    }
  }
  return out;
}

Outcome f_dominates_g(std::uint64_t seed, int cases) {
  Outcome out{"f dominates g", seed};
  Rng rng(seed + 6);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t n = uniform(rng, 1, 10000), m = uniform(rng, 2, 200);
    const BoundProblem problem(n);
    const auto o = rad_cmp(RadicalBound::from_rational(f_ratio(problem, m)), g_ratio(problem, m));
    const std::int64_t rad = n * (m * m - m + 2);
    const bool square = oracle::isqrt64(rad) * oracle::isqrt64(rad) == rad;
    ++out.cases;
    if (o < 0 || (o == 0) != square) out.fail(describe("N =", n, "m =", m));
  }
  return out;
}

Outcome tail_soundness(std::uint64_t seed, int problems, int per_problem) {
  Outcome out{"tail soundness", seed};
  Rng rng(seed + 7);
  auto check = [&](std::int64_t n, const Rat& threshold, std::int64_t cutoff, const char* what) {
    for (int j = 0; j < per_problem; ++j) {
      const std::int64_t m = uniform(rng, cutoff + 1, cutoff + 1'000'000);
      // d_min(m)/m >= p/q  <=>  q d_min(m) >= p m.
      const BigInt lhs = threshold.den() * big(oracle::d_min(n, m));
      const BigInt rhs = threshold.num() * big(m);
      ++out.cases;
      if (lhs < rhs) out.fail(describe(what, "N =", n, "m =", m));
    }
  };
  for (int i = 0; i < problems; ++i) {
    const std::int64_t n = i < 2 ? (i == 0 ? 2 : 4) : uniform(rng, 2, 100000);
    const BoundProblem problem(n);
    const BoundCertificate cert = certified_min(problem);
    if (!cert.certified()) {
      out.fail(describe("uncertified N =", n));
      continue;
    }
    check(n, cert.value, cert.tail->cutoff, "certified_min");
    const F7Report f7 = check_f7(problem);
    if (f7.tail) check(n, f7.tail->threshold, f7.tail->cutoff, "check_f7");
  }
  return out;
}

Outcome intersection_form(std::uint64_t seed, int cases) {
  Outcome out{"intersection form", seed};
  Rng rng(seed + 8);
  auto draw = [&] { return DivisorClass{uniform(rng, -1000, 1000), uniform(rng, -1000, 1000)}; };
  for (const auto& kind : surface_kinds()) {
    ++out.cases;
    if (intersect(kind, class_of_e(kind), class_of_f(kind)) != kind.group_order)
      out.fail(describe("E.F type", kind.type_index));
    if (self_int(class_of_e(kind)) != 0 || self_int(class_of_f(kind)) != 0) out.fail("E^2, F^2");
  }
  for (int i = 0; i < cases; ++i) {
    const SurfaceKind& kind = surface_kind(static_cast<int>(uniform(rng, 1, 7)));
    const DivisorClass x = draw(), y = draw(), z = draw();
    ++out.cases;
    if (intersect(kind, x + y, z) != intersect(kind, x, z) + intersect(kind, y, z)) out.fail("bilinearity");
    if (intersect(kind, x, y) != intersect(kind, y, x)) out.fail("symmetry");
    if (self_int(x) % 2 != 0 || self_int(x) != intersect(kind, x, x)) out.fail("evenness");
    if (self_int(x) == 0 && x.a != 0 && x.b != 0) out.fail("fibre");
    const FiberDegrees fd = fiber_degrees(kind, x);
    if (fd.deg_e != intersect(kind, x, class_of_e(kind)) || fd.deg_f != intersect(kind, x, class_of_f(kind)))
      out.fail("fiber degrees");
  }
  return out;
}

Outcome star_additivity(std::uint64_t seed, int cases) {
  Outcome out{"star additivity", seed};
  Rng rng(seed + 9);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t s = uniform(rng, 1, 5), t = uniform(rng, 1, 5);
    const auto points = uniform(rng, 0, 5);
    std::vector<std::int64_t> as, bs, sums;
    std::int64_t need_a = 2 * s, need_b = 2 * t, cross = 0;
    for (std::int64_t k = 0; k < points; ++k) {
      const std::int64_t a = uniform(rng, 2, 8), b = uniform(rng, 2, 8);
      as.push_back(a);
      bs.push_back(b);
      sums.push_back(a + b);
      need_a += a * (a - 1);
      need_b += b * (b - 1);
      cross += a * b;
    }
    const std::int64_t a2 = need_a + uniform(rng, 0, 20), b2 = need_b + uniform(rng, 0, 20);
    const std::int64_t ab = cross + uniform(rng, 0, 20);
    ++out.cases;
    if (!star_check_reducible(a2, s, as) || !star_check_reducible(b2, t, bs)) {
      out.fail("premise");
      continue;
    }
    if (!star_check_reducible(a2 + b2 + 2 * ab, s + t, sums)) out.fail(describe("conclusion case", i));
    // Pure arithmetic form of the same step.
    std::int64_t rhs = 2 * (s + t);
    for (const auto v : sums) rhs += v * (v - 1);
    if (a2 + b2 + 2 * ab < rhs) out.fail("identity");
  }
  return out;
}

Outcome census_merge(std::uint64_t seed, int ranges) {
  Outcome out{"census merge determinism", seed};
  Rng rng(seed + 10);
  for (int i = 0; i < ranges; ++i) {
    const Domain domain = i % 2 == 0 ? Domain::even : Domain::all;
    const std::int64_t from = uniform(rng, 2, 3000);
    const std::int64_t to = from + uniform(rng, 200, 800);
    const CensusReport sequential = census(from, to, domain, 1);
    for (const int parts : {1, 2, 8}) {
      std::vector<std::int64_t> cuts{from};
      for (int k = 1; k < parts; ++k) cuts.push_back(uniform(rng, from, to));
      cuts.push_back(to + 1);
      std::sort(cuts.begin() + 1, cuts.end() - 1);
      std::vector<CensusReport> pieces;
      for (int k = 0; k < parts; ++k)
        if (cuts[k] <= cuts[k + 1] - 1) pieces.push_back(census(cuts[k], cuts[k + 1] - 1, domain, 1));
      std::shuffle(pieces.begin(), pieces.end(), rng);
      const CensusReport merged = merge(pieces);
      const CensusReport threaded = census(from, to, domain, static_cast<unsigned>(parts));
      for (const auto* other : {&merged, &threaded}) {
        ++out.cases;
        bool same = other->counts == sequential.counts && other->per_n.size() == sequential.per_n.size();
        for (auto it = sequential.per_n.begin(), jt = other->per_n.begin(); same && it != sequential.per_n.end();
             ++it, ++jt)
          same = it->first == jt->first && it->second.value == jt->second.value &&
                 it->second.argmins == jt->second.argmins && it->second.smallest_argmin == jt->second.smallest_argmin;
        if (!same) out.fail(describe("range", from, to, "parts", parts));
      }
    }
    for (const auto& [n, entry] : sequential.per_n) {
      ++out.cases;
      const oracle::SmallMin ref = oracle::small_min(n);
      if (entry.smallest_argmin != ref.m || entry.value != Rat(big(ref.d), big(ref.m)))
        out.fail(describe("oracle N =", n));
    }
  }
  return out;
}

std::vector<Outcome> all(std::uint64_t seed) {
  return {isqrt_contracts(seed), rat_cmp_sqrt_equality(seed), rad_cmp_total_order(seed),
          sqrt_linear_vs_float(seed), omega_duality(seed),        g_monotonicity(seed),
          f_dominates_g(seed),        tail_soundness(seed),        intersection_form(seed),
          star_additivity(seed),      census_merge(seed)};
}

}  // namespace props
