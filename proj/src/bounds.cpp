#include "seshadri/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "seshadri/parallel.hpp"

namespace seshadri {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

void require_m(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("multiplicity m must be >= 2, got " + std::to_string(m));
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

BoundProblem::BoundProblem(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("self-intersection N must be >= 1, got " + std::to_string(n));
}

void require_theorem_range(const BoundProblem& problem) {
  if (problem.n() < 2)
    throw std::invalid_argument("self-intersection N must be >= 2, got " + std::to_string(problem.n()));
}

BigInt multiplicity_weight(std::int64_t m) {
  const BigInt mm = big(m);
  return mm * mm - mm + 2;
}

bool omega_contains(const BoundProblem& problem, const OmegaPair& pair) {
  require_m(pair.m);
  if (pair.d < 1) throw std::invalid_argument("degree d must be >= 1");
  return pair.d * pair.d >= problem.big_n() * multiplicity_weight(pair.m);
}

BigInt d_min(const BoundProblem& problem, std::int64_t m) {
  require_m(m);
  return ceil_sqrt(problem.big_n() * multiplicity_weight(m));
}

Rat f_ratio(const BoundProblem& problem, std::int64_t m) { return Rat(d_min(problem, m), big(m)); }

RadicalBound g_ratio(const BoundProblem& problem, std::int64_t m) {
  require_m(m);
  return RadicalBound(Rat(BigInt(1), big(m)), problem.big_n() * multiplicity_weight(m));
}

std::optional<std::int64_t> m_max(const BoundProblem& problem, const BigInt& d) {
  if (d < 1) throw std::invalid_argument("degree d must be >= 1");
  const BigInt n = problem.big_n();
  const BigInt d2 = d * d;
  auto fits = [&](std::int64_t m) { return n * multiplicity_weight(m) <= d2; };
  if (!fits(2)) return std::nullopt;
  // The weight grows in m, so membership is a prefix [2, m_max].
  std::int64_t lo = 2;
  std::int64_t hi = 4;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::optional<std::int64_t> m_max_closed_form(const BoundProblem& problem, const BigInt& d) {
  const BigInt n = problem.big_n();
  const BigInt inner = 4 * d * d - 7 * n;
  if (inner < 0) return std::nullopt;
  // floor(1/2 + sqrt(d^2/N - 7/4)) = floor((N + sqrt(N (4d^2 - 7N))) / 2N)
  //                                = floor((N + isqrt(N (4d^2 - 7N))) / 2N)
  const BigInt m = (n + isqrt(n * inner)) / (2 * n);
  if (m < 2) return std::nullopt;
  return to_int64(m);
}

SmallBound lower_bound_small(const BoundProblem& problem) {
  require_theorem_range(problem);
  SmallBound out;
  for (std::int64_t m = 2; m <= 7; ++m) out.ratios[static_cast<std::size_t>(m - 2)] = f_ratio(problem, m);
  out.value = *std::min_element(out.ratios.begin(), out.ratios.end());
  for (std::int64_t m = 2; m <= 7; ++m)
    if (out.ratios[static_cast<std::size_t>(m - 2)] == out.value) out.argmins.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::int64_t> eventually_positive_from(const Quadratic& q, std::int64_t start,
                                                     bool strict) {
  auto good = [&](const BigInt& x) {
    const BigInt v = q.at(x);
    return strict ? v > 0 : v >= 0;
  };
  BigInt x0;
  if (q.a > 0) {
    const BigInt disc = q.b * q.b - 4 * q.a * q.c;
    if (disc < 0) return start;
    // guess lies within 3/2 below the larger root; starting at or right of the
    // vertex keeps the walk on the increasing branch.
    const BigInt guess = floor_div(-q.b + isqrt(disc), 2 * q.a);
    const BigInt vertex = ceil_div(-q.b, 2 * q.a);
    x0 = std::max(guess, vertex);
    while (!good(x0)) ++x0;
    // Step back while still on the increasing branch and still good.
    while (x0 - 1 >= vertex && good(x0 - 1)) --x0;
  } else if (q.a == 0) {
    if (q.b > 0) {
      x0 = strict ? BigInt(floor_div(-q.c, q.b) + 1) : ceil_div(-q.c, q.b);
    } else if (q.b == 0) {
      if (!(strict ? q.c > 0 : q.c >= 0)) return std::nullopt;
      return start;
    } else {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  if (x0 <= big(start)) return start;
  return to_int64(x0);
}

Quadratic tail_polynomial(const BoundProblem& problem, const Rat& threshold) {
  const BigInt n = problem.big_n();
  const BigInt& p = threshold.num();
  const BigInt& q = threshold.den();
  const BigInt nq2 = n * q * q;
  return Quadratic{nq2 - p * p, 2 * p - nq2, 2 * nq2 - 1};
}

std::optional<TailWitness> tail_witness(const BoundProblem& problem, const Rat& threshold,
                                        std::int64_t start) {
  if (threshold.sign() <= 0) throw std::invalid_argument("tail_witness: threshold must be positive");
  Quadratic poly = tail_polynomial(problem, threshold);
  const auto cutoff = eventually_positive_from(poly, std::max<std::int64_t>(start, 1), true);
  if (!cutoff) return std::nullopt;
  return TailWitness{threshold, *cutoff, std::move(poly)};
}

BoundCertificate certified_min(const BoundProblem& problem, std::int64_t scan_cap) {
  require_theorem_range(problem);
  if (scan_cap < 8) throw std::invalid_argument("scan_cap must be >= 8");

  BoundCertificate cert;
  cert.n = problem.n();
  std::optional<Rat> best;
  std::optional<TailWitness> witness;
  bool dirty = true;
  for (std::int64_t m = 2; m <= scan_cap; ++m) {
    Rat r = f_ratio(problem, m);
    if (!best || r < *best) {
      best = std::move(r);
      cert.argmins.assign(1, m);
      dirty = true;
    } else if (r == *best) {
      cert.argmins.push_back(m);
    }
    if (m >= 7 && dirty) {
      // A witness for an older, larger threshold stays valid for the new one.
      auto w = tail_witness(problem, *best, m + 1);
      if (w && (!witness || w->cutoff < witness->cutoff)) witness = std::move(w);
      dirty = false;
    }
    if (witness && witness->cutoff <= m + 1) {
      cert.value = *best;
      cert.scanned_to = m;
      cert.tail = std::move(witness);
      return cert;
    }
  }
  cert.value = *best;
  cert.scanned_to = scan_cap;
  return cert;
}

// ---------------------------------------------------------------------------

std::string to_string(F7Status status) {
  switch (status) {
    case F7Status::holds_for_all_m: return "holds_for_all_m";
    case F7Status::counterexamples: return "counterexamples";
    case F7Status::uncertified: return "uncertified";
  }
  return "unknown";
}

LinearSqrtInequality f7_inequality() { return {7, 58, 8, 44, 8}; }

LinearSqrtInequality g4_inequality(std::int64_t m) {
  require_m(m);
  return {4, multiplicity_weight(m), big(m), 14, big(m)};
}

F7Report check_f7(const BoundProblem& problem, std::int64_t scan_cap) {
  require_theorem_range(problem);
  if (scan_cap < 8) throw std::invalid_argument("scan_cap must be >= 8");
  F7Report report;
  report.n = problem.n();
  report.f7 = f_ratio(problem, 7);

  if (f7_inequality().holds(problem.big_n())) {
    report.analytic = true;
    report.status = F7Status::holds_for_all_m;
    return report;
  }

  auto scan = [&](std::int64_t last) {
    for (std::int64_t m = 8; m <= last; ++m) {
      Rat r = f_ratio(problem, m);
      if (r < report.f7) report.counterexamples.push_back({m, std::move(r)});
    }
    report.scanned_to = std::max<std::int64_t>(7, last);
  };

  if (rat_cmp_sqrt(report.f7, problem.big_n()) > 0) {
    // f(N,m) < g(N,m) + 1/m <= f(N,7) once N q^2 (m^2-m+2) <= (pm - q)^2.
    const BigInt n = problem.big_n();
    const BigInt& p = report.f7.num();
    const BigInt& q = report.f7.den();
    report.violation_polynomial = Quadratic{p * p - n * q * q, n * q * q - 2 * p * q, q * q - 2 * n * q * q};
    report.violated_from = eventually_positive_from(report.violation_polynomial, 8, false);
    if (!report.violated_from || *report.violated_from - 1 > scan_cap) {
      report.violated_from.reset();
      scan(scan_cap);
      report.status = F7Status::uncertified;
      return report;
    }
    scan(*report.violated_from - 1);
    report.status = F7Status::counterexamples;
    return report;
  }

  report.tail = tail_witness(problem, report.f7, 8);
  if (!report.tail || report.tail->cutoff - 1 > scan_cap) {
    report.tail.reset();
    scan(scan_cap);
    report.status = F7Status::uncertified;
    return report;
  }
  scan(report.tail->cutoff - 1);
  report.status = report.counterexamples.empty() ? F7Status::holds_for_all_m : F7Status::counterexamples;
  return report;
}

std::vector<F7Report> check_f7_sweep(std::int64_t from, std::int64_t to, std::int64_t scan_cap,
                                     unsigned threads) {
  if (from < 2 || from > to) throw std::invalid_argument("check_f7_sweep: need 2 <= from <= to");
  const auto count = static_cast<std::size_t>(to - from + 1);
  auto parts = run_chunked(count, resolve_threads(threads), [&](std::size_t b, std::size_t e) {
    std::vector<F7Report> part;
    for (std::size_t i = b; i < e; ++i)
      part.push_back(check_f7(BoundProblem(from + static_cast<std::int64_t>(i)), scan_cap));
    return part;
  });
  std::vector<F7Report> out;
  out.reserve(count);
  for (auto& part : parts)
    for (auto& r : part) out.push_back(std::move(r));
  return out;
}

AgreementSweep agreement_sweep(std::int64_t from, std::int64_t to, std::int64_t scan_cap,
                               unsigned threads) {
  if (from < 2 || from > to) throw std::invalid_argument("agreement_sweep: need 2 <= from <= to");
  const auto count = static_cast<std::size_t>(to - from + 1);
  auto parts = run_chunked(count, resolve_threads(threads), [&](std::size_t b, std::size_t e) {
    AgreementSweep part;
    for (std::size_t i = b; i < e; ++i) {
      const BoundProblem problem(from + static_cast<std::int64_t>(i));
      const BoundCertificate cert = certified_min(problem, scan_cap);
      ++part.checked;
      part.max_scanned_to = std::max(part.max_scanned_to, cert.scanned_to);
      if (!cert.certified()) {
        part.uncertified.push_back(problem.n());
        continue;
      }
      part.max_cutoff = std::max(part.max_cutoff, cert.tail->cutoff);
      if (cert.value != lower_bound_small(problem).value) part.mismatches.push_back(problem.n());
    }
    return part;
  });
  AgreementSweep out;
  out.from = from;
  out.to = to;
  for (const auto& part : parts) {
    out.checked += part.checked;
    out.max_scanned_to = std::max(out.max_scanned_to, part.max_scanned_to);
    out.max_cutoff = std::max(out.max_cutoff, part.max_cutoff);
    out.mismatches.insert(out.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
    out.uncertified.insert(out.uncertified.end(), part.uncertified.begin(), part.uncertified.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Domain domain) { return domain == Domain::even ? "even" : "all"; }

Domain parse_domain(const std::string& text) {
  if (text == "even") return Domain::even;
  if (text == "all") return Domain::all;
  throw std::invalid_argument("unknown domain '" + text + "' (expected even or all)");
}

std::vector<std::int64_t> domain_values(std::int64_t from, std::int64_t to, Domain domain) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = from; n <= to; ++n)
    if (domain == Domain::all || n % 2 == 0) out.push_back(n);
  return out;
}

CensusReport merge(const std::vector<CensusReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge: no parts");
  CensusReport out;
  out.domain = parts.front().domain;
  out.from = parts.front().from;
  out.to = parts.front().to;
  for (const auto& part : parts) {
    if (part.domain != out.domain) throw std::invalid_argument("merge: mixed domains");
    out.from = std::min(out.from, part.from);
    out.to = std::max(out.to, part.to);
    for (const auto& [n, entry] : part.per_n) {
      if (!out.per_n.emplace(n, entry).second)
        throw std::invalid_argument("merge: overlapping ranges at N=" + std::to_string(n));
    }
  }
  for (const auto& [n, entry] : out.per_n) ++out.counts[entry.smallest_argmin];
  return out;
}

CensusReport census(std::int64_t from, std::int64_t to, Domain domain, unsigned threads) {
  if (from < 2 || from > to)
    throw std::invalid_argument("census: need 2 <= from <= to, got [" + std::to_string(from) + ", " +
                                std::to_string(to) + "]");
  const auto values = domain_values(from, to, domain);
  auto parts = run_chunked(values.size(), resolve_threads(threads), [&](std::size_t b, std::size_t e) {
    CensusReport part;
    part.domain = domain;
    part.from = from;
    part.to = to;
    for (std::size_t i = b; i < e; ++i) {
      SmallBound s = lower_bound_small(BoundProblem(values[i]));
      const std::int64_t smallest = s.argmins.front();
      part.per_n.emplace(values[i], CensusEntry{std::move(s.value), std::move(s.argmins), smallest});
    }
    return part;
  });
  CensusReport out = merge(parts);
  out.from = from;
  out.to = to;
  return out;
}

// ---------------------------------------------------------------------------

Quadratic LinearSqrtInequality::squared_form() const {
  const BigInt k = slope();
  const BigInt c2 = c * c;
  return Quadratic{k * k, -(2 * k * c2 + 4 * q * q * c2 * b), c2 * c2};
}

std::int64_t smallest_holding_n(const LinearSqrtInequality& ineq) {
  if (ineq.slope() <= 0) throw std::invalid_argument("smallest_holding_n: inequality is not eventually true");
  // sqrt(N)(sqrt(p^2 a) - sqrt(q^2 b)) >= c is monotone in N.
  std::int64_t hi = 1;
  while (!ineq.holds(big(hi))) {
    if (hi > std::numeric_limits<std::int64_t>::max() / 2) throw std::overflow_error("threshold too large");
    hi *= 2;
  }
  if (hi == 1) return 1;
  std::int64_t lo = hi / 2;  // fails
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (ineq.holds(big(mid)) ? hi : lo) = mid;
  }
  return hi;
}

AnalyticThreshold analytic_threshold() {
  AnalyticThreshold out{0, {}};
  for (std::int64_t m : {2, 3, 5, 6, 7}) {
    const auto ineq = g4_inequality(m);
    const std::int64_t n_min = smallest_holding_n(ineq);
    const Quadratic sq = ineq.squared_form();
    const BigInt k = ineq.slope();
    const BigInt before = big(n_min - 1);
    const BigInt at = big(n_min);
    ThresholdCertificate cert{m,
                              ineq,
                              n_min,
                              sq,
                              k * before - ineq.c * ineq.c,
                              k * at - ineq.c * ineq.c,
                              sq.at(before),
                              sq.at(at)};
    out.threshold = std::max(out.threshold, n_min);
    out.per_m.emplace(m, std::move(cert));
  }
  return out;
}

CeilingThreshold ceiling_threshold(Domain domain, unsigned threads) {
  const std::int64_t analytic = analytic_threshold().threshold;
  const auto values = domain_values(2, analytic - 1, domain);
  struct Partial {
    std::optional<std::int64_t> last;
    std::int64_t count = 0;
  };
  auto parts = run_chunked(values.size(), resolve_threads(threads), [&](std::size_t b, std::size_t e) {
    Partial p;
    for (std::size_t i = b; i < e; ++i) {
      const BoundProblem problem(values[i]);
      if (lower_bound_small(problem).value != f_ratio(problem, 4)) {
        p.last = values[i];
        ++p.count;
      }
    }
    return p;
  });
  CeilingThreshold out{2, domain, analytic, std::nullopt, 0};
  for (const auto& p : parts) {
    if (p.last) out.last_exception = std::max(out.last_exception.value_or(0), *p.last);
    out.exceptions += p.count;
  }
  if (out.last_exception) out.value = *out.last_exception + (domain == Domain::even ? 2 : 1);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(CandidateKind kind) {
  return kind == CandidateKind::omega ? "omega" : "integer_fiber";
}

std::vector<Candidate> candidate_values(const BoundProblem& problem, std::int64_t max_m) {
  require_theorem_range(problem);
  if (max_m < 2) throw std::invalid_argument("max_m must be >= 2");
  const BigInt n = problem.big_n();
  std::map<Rat, OmegaPair> omega;
  for (std::int64_t m = 2; m <= max_m; ++m) {
    for (BigInt d = d_min(problem, m);; ++d) {
      Rat r(d, big(m));
      if (rat_cmp_sqrt(r, n) >= 0) break;
      omega.emplace(std::move(r), OmegaPair{d, m});
    }
  }
  std::vector<Candidate> out;
  for (auto& [value, pair] : omega) out.push_back({value, CandidateKind::omega, pair});
  const BigInt root = isqrt(n);
  for (BigInt k = 1; k <= root; ++k) out.push_back({Rat(k), CandidateKind::integer_fiber, std::nullopt});
  std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.kind == CandidateKind::omega && y.kind != CandidateKind::omega;
  });
  return out;
}

}  // namespace seshadri
