#pragma once

#include <optional>
#include <vector>

#include "pillai/bounds.hpp"
#include "pillai/solver.hpp"

namespace pillai {

/// Admissible-B rule for a sweep: |B| < kappa*A, |B| < A^(2-eps), or an
/// explicit range.
struct BRule {
  enum class Kind { KappaA, APow, Range };
  Kind kind = Kind::KappaA;
  mpq_class kappa = 1;
  mpq_class epsilon = mpq_class(1, 2);
  long lo = 0, hi = 0;

  static BRule kappa_a(const mpq_class& k);
  static BRule a_pow(const mpq_class& eps);
  static BRule range(long lo, long hi);

  /// Inclusive B interval scanned for a given A (before validation).
  std::pair<long, long> b_span(long A) const;
};

struct SweepConfig {
  long b = 2;
  long A_lo = 1, A_hi = 10;
  BRule b_rule;
  unsigned long n_max = 25;
  unsigned long m_max = 0;  // 0: per-pair auto so b^m_max just exceeds max V_n
  int min_solutions = 2;
  int m_min = 1;
  unsigned long work_budget = 400000000ULL;  // (n,m) cells across all pairs
  int workers = 1;

  void check() const;
};

/// A value of c whose solution bucket reached min_solutions for one (A,B).
struct Finding {
  long A = 0, B = 0;
  mpz_class c;
  std::vector<Solution> solutions;  // sorted by n; distinct n by construction
  bool equal_value_pair = false;    // some V_{n_i} == V_{n_j}, n_i != n_j
};

struct SweepResult {
  std::vector<Finding> findings;  // ordered by (A, B, c)
  unsigned long pairs_scanned = 0;
  unsigned long cells_scanned = 0;
};

/// Exhaustive bucketed search: for every admissible (A,B) enumerate
/// c = V_n - b^m over n <= n_max, m_min <= m <= m_max and emit buckets with
/// at least min_solutions entries. Deterministic output for a fixed config
/// regardless of worker count. Throws WorkBudgetExceeded up front (never a
/// silent truncation).
SweepResult sweep(const SweepConfig& config);

struct CarmichaelEntry {
  unsigned long n = 0;
  enum class Status { Yes, No, Unknown } status = Status::Unknown;
  mpz_class witness;       // a primitive prime if one was identified, else 0
  mpz_class primitive_part;  // part of V_n coprime to every earlier V_m
};

struct CarmichaelReport {
  std::vector<CarmichaelEntry> entries;  // n in [2, n_max], n != 3
  bool exception_hit = false;            // the (A,B,n) = (1,-1,6) exception
};

/// Primitive-divisor check per Carmichael: strip from V_n every prime shared
/// with an earlier V_m (repeated gcd); a primitive prime exists iff the
/// stripped part exceeds 1. A missing primitive divisor outside the stated
/// exception throws TheoremFalsified.
CarmichaelReport carmichael_check(const LucasParams& params, unsigned long n_max);

struct C0Report {
  unsigned long instances = 0;
  unsigned long with_solution = 0;
  unsigned long max_solutions = 0;
};

/// c = 0 uniqueness: for every b in b_values and admissible (A,B) with
/// A in [A_lo, A_hi], A > 1, count solutions of V_n = b^m with n in
/// [1, n_max]; two or more throws TheoremFalsified.
C0Report c0_check(const std::vector<long>& b_values, long A_lo, long A_hi,
                  const BRule& b_rule, unsigned long n_max);

struct VerifiedFinding {
  Finding finding;
  std::optional<TheoremCheck> theorem1, theorem2;
  std::optional<BoundReport> report;
  // Two-solution window 5/2 > b^m1/alpha^n1 > 3/8 on the two largest
  // solutions; hypotheses_met reflects the window lemma's prerequisites.
  std::optional<Cert> window;
  bool window_hypotheses_met = false;
};

/// Attach theorem verdicts (for >= 3 solutions, using the three largest n)
/// and window checks (for >= 2) to findings. A certified "fails" with
/// hypotheses met throws TheoremFalsified.
std::vector<VerifiedFinding> cross_validate(const std::vector<Finding>& findings, long b,
                                            const mpq_class& epsilon, const mpq_class& kappa,
                                            mpfr_prec_t prec = kDefaultPrec);

}  // namespace pillai
