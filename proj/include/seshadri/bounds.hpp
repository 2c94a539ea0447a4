#pragma once

// Lower bounds for Seshadri constants on surfaces where every irreducible
// curve C with C^2 > 0 and multiplicity m at x satisfies
// C^2 >= m(m-1) + 2. With N = L^2 the admissible (degree, multiplicity)
// data of a submaximal curve form the set
//
//   Omega = { (d, m) : d^2 >= N (2 + m(m-1)), m >= 2 }.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/exact_math.hpp"
#include "seshadri/parallel.hpp"

namespace seshadri {

/// The self-intersection N = L^2 of the line bundle. N >= 1 to construct;
/// theorem-level operations additionally require N >= 2.
class BoundProblem {
 public:
  explicit BoundProblem(std::int64_t n);
  std::int64_t n() const { return n_; }
  BigInt big_n() const { return BigInt(static_cast<long>(n_)); }

 private:
  std::int64_t n_;
};

struct OmegaPair {
  BigInt d;
  std::int64_t m;
};

/// 2 + m(m-1).
BigInt multiplicity_weight(std::int64_t m);

bool omega_contains(const BoundProblem& problem, const OmegaPair& pair);

/// ceil(sqrt(N (2 + m(m-1)))), the least d with (d, m) in Omega.
BigInt d_min(const BoundProblem& problem, std::int64_t m);

/// d_min(N, m) / m.
Rat f_ratio(const BoundProblem& problem, std::int64_t m);

/// sqrt(N (2 + m(m-1))) / m as an exact radical.
RadicalBound g_ratio(const BoundProblem& problem, std::int64_t m);

/// Largest m >= 2 with (d, m) in Omega, found by exact bisection; empty when
/// d^2 < 4N.
std::optional<std::int64_t> m_max(const BoundProblem& problem, const BigInt& d);

/// floor(1/2 + sqrt(d^2/N - 7/4)) evaluated in integers. Only defined when
/// 4 d^2 >= 7 N. Used to cross-check m_max.
std::optional<std::int64_t> m_max_closed_form(const BoundProblem& problem, const BigInt& d);

struct SmallBound {
  Rat value;
  std::vector<std::int64_t> argmins;
  /// f(N, m) for m = 2..7.
  std::array<Rat, 6> ratios;
};

/// min { d_min(m)/m : m in 2..7 }.
SmallBound lower_bound_small(const BoundProblem& problem);

// ---------------------------------------------------------------------------
// Quadratic tail certificates

/// a m^2 + b m + c over the integers.
struct Quadratic {
  BigInt a;
  BigInt b;
  BigInt c;

  BigInt at(const BigInt& x) const { return (a * x + b) * x + c; }
};

/// Smallest integer M >= start such that q(x) > 0 (strict) or q(x) >= 0 for
/// every integer x >= M. Empty when no such M exists (q eventually negative).
std::optional<std::int64_t> eventually_positive_from(const Quadratic& q, std::int64_t start,
                                                     bool strict);

/// Witness that f(N, m) >= threshold for every m >= cutoff.
struct TailWitness {
  Rat threshold;
  std::int64_t cutoff;
  /// Q(m) = (Nq^2 - p^2) m^2 + (2p - Nq^2) m + (2Nq^2 - 1) with threshold p/q.
  /// Q(m) > 0 gives sqrt(N(m^2 - m + 2)) > (pm - 1)/q >= ceil(pm/q) - 1,
  /// hence d_min(N, m) >= pm/q.
  Quadratic polynomial;
};

Quadratic tail_polynomial(const BoundProblem& problem, const Rat& threshold);

/// Tail witness for `threshold` valid from some cutoff >= start, if the
/// polynomial is eventually positive.
std::optional<TailWitness> tail_witness(const BoundProblem& problem, const Rat& threshold,
                                        std::int64_t start);

inline constexpr std::int64_t kDefaultScanCap = 1'000'000;

struct BoundCertificate {
  std::int64_t n = 0;
  Rat value;
  std::vector<std::int64_t> argmins;
  std::int64_t scanned_to = 0;
  std::optional<TailWitness> tail;

  bool certified() const { return tail.has_value(); }
};

/// Minimum of d_min(N, m)/m over all m >= 2. Scans m upward and stops once a
/// tail witness covers everything past the scan. If scan_cap is reached first
/// the certificate comes back without a tail witness.
BoundCertificate certified_min(const BoundProblem& problem,
                               std::int64_t scan_cap = kDefaultScanCap);

// ---------------------------------------------------------------------------
// f(N, m) >= f(N, 7) for m >= 8

enum class F7Status { holds_for_all_m, counterexamples, uncertified };

std::string to_string(F7Status status);

struct F7Counterexample {
  std::int64_t m;
  Rat f_m;
};

struct F7Report {
  std::int64_t n = 0;
  Rat f7;
  F7Status status = F7Status::uncertified;
  std::vector<F7Counterexample> counterexamples;
  /// Settled by 7 sqrt(58N) >= 8 sqrt(44N) + 8 and monotonicity of g.
  bool analytic = false;
  std::int64_t scanned_to = 7;
  std::optional<TailWitness> tail;
  /// When f(N,7) > sqrt(N): every m >= violated_from is a counterexample.
  std::optional<std::int64_t> violated_from;
  Quadratic violation_polynomial{};
};

F7Report check_f7(const BoundProblem& problem, std::int64_t scan_cap = kDefaultScanCap);

// ---------------------------------------------------------------------------
// Census of minimizing m

/// Which self-intersections a sweep visits. L^2 is even on abelian and
/// bielliptic surfaces, so `even` is the realizable domain.
enum class Domain { even, all };

std::string to_string(Domain domain);
Domain parse_domain(const std::string& text);

/// Values of N in [from, to] that belong to the domain, ascending.
std::vector<std::int64_t> domain_values(std::int64_t from, std::int64_t to, Domain domain);

struct CensusEntry {
  Rat value;
  std::vector<std::int64_t> argmins;
  std::int64_t smallest_argmin;
};

struct CensusReport {
  std::int64_t from = 0;
  std::int64_t to = 0;
  Domain domain = Domain::even;
  std::map<std::int64_t, CensusEntry> per_n;
  std::map<std::int64_t, std::int64_t> counts;

  std::int64_t size() const { return static_cast<std::int64_t>(per_n.size()); }
};

/// threads == 0 lets the implementation pick. The result does not depend on
/// the thread count.
CensusReport census(std::int64_t from, std::int64_t to, Domain domain = Domain::even,
                    unsigned threads = 1);

/// Union of reports over disjoint ranges with the same domain.
CensusReport merge(const std::vector<CensusReport>& parts);

// ---------------------------------------------------------------------------
// Thresholds in N

/// p sqrt(a N) >= q sqrt(b N) + c.
struct LinearSqrtInequality {
  BigInt p, a, q, b, c;

  bool holds(const BigInt& n) const { return sqrt_linear_cmp(p, a, q, b, c, n); }
  /// p^2 a - q^2 b; the inequality can only hold for large N when this is > 0.
  BigInt slope() const { return p * p * a - q * q * b; }
  /// (slope N - c^2)^2 - 4 q^2 c^2 b N as a polynomial in N.
  Quadratic squared_form() const;
};

/// Smallest N >= 1 from which the inequality holds for every larger N.
/// Requires slope() > 0 (then the inequality is monotone in N).
std::int64_t smallest_holding_n(const LinearSqrtInequality& ineq);

/// 7 sqrt(58N) >= 8 sqrt(44N) + 8, i.e. g(N,8) >= g(N,7) + 1/7.
LinearSqrtInequality f7_inequality();

/// 4 sqrt((2+m(m-1)) N) >= m sqrt(14N) + m, i.e. g(N,m) >= g(N,4) + 1/4.
LinearSqrtInequality g4_inequality(std::int64_t m);

struct ThresholdCertificate {
  std::int64_t m;
  LinearSqrtInequality inequality;
  std::int64_t n_min;
  Quadratic squared_form;
  /// slope*N - c^2 and the squared form at n_min - 1 and n_min.
  BigInt linear_before, linear_at;
  BigInt quadratic_before, quadratic_at;
};

struct AnalyticThreshold {
  std::int64_t threshold;
  std::map<std::int64_t, ThresholdCertificate> per_m;
};

/// For N >= threshold and m in {2,3,5,6,7}: g(N,m) >= g(N,4) + 1/4 > f(N,4),
/// so the small minimum is attained at m = 4.
AnalyticThreshold analytic_threshold();

struct CeilingThreshold {
  std::int64_t value;
  Domain domain;
  std::int64_t analytic_threshold;
  /// Largest scanned N whose minimum differs from d_min(4)/4.
  std::optional<std::int64_t> last_exception;
  std::int64_t exceptions;
};

/// Smallest N0 in the domain with lower_bound_small(N).value = d_min(N,4)/4
/// for every N >= N0 in the domain. Brute force below the analytic
/// threshold, analytic argument beyond.
CeilingThreshold ceiling_threshold(Domain domain = Domain::even, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Potential Seshadri constants

enum class CandidateKind { omega, integer_fiber };

std::string to_string(CandidateKind kind);

struct Candidate {
  Rat value;
  CandidateKind kind;
  /// Representative (d, m) for omega candidates, the one with least m.
  std::optional<OmegaPair> pair;
};

/// Values d/m < sqrt(N) with (d, m) in Omega and m <= max_m, together with the
/// integers 1..floor(sqrt(N)), ascending.
std::vector<Candidate> candidate_values(const BoundProblem& problem, std::int64_t max_m);

void require_theorem_range(const BoundProblem& problem);

// ---------------------------------------------------------------------------
// Range sweeps. Results are independent of the thread count.

struct AgreementSweep {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t checked = 0;
  /// N where the certified minimum differs from the small minimum.
  std::vector<std::int64_t> mismatches;
  /// N where no tail witness was found below scan_cap.
  std::vector<std::int64_t> uncertified;
  std::int64_t max_scanned_to = 0;
  std::int64_t max_cutoff = 0;

  bool passed() const { return mismatches.empty() && uncertified.empty(); }
};

/// certified_min(N).value == lower_bound_small(N).value for every N in range.
AgreementSweep agreement_sweep(std::int64_t from, std::int64_t to,
                               std::int64_t scan_cap = kDefaultScanCap, unsigned threads = 1);

std::vector<F7Report> check_f7_sweep(std::int64_t from, std::int64_t to,
                                     std::int64_t scan_cap = kDefaultScanCap, unsigned threads = 1);

}  // namespace seshadri
