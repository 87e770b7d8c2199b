#pragma once

#include <map>
#include <string>
#include <vector>

#include "pillai/interval.hpp"
#include "pillai/lucas.hpp"

namespace pillai {

/// K0 = 2.69e9 log b.
Interval k0(long b, mpfr_prec_t prec = kDefaultPrec);

/// alpha^(n1 - K0 log(27.62 n1)) - |beta|^n1; a certified lower bound for
/// |c| under the two-solution hypothesis. Often negative (vacuous) at desk
/// scale; returned as-is.
Interval c_lower_bound(const LucasParams& params, long b, unsigned long n1,
                       mpfr_prec_t prec = kDefaultPrec);

/// n1 < 2.58e22 (log alpha / eps)(log b)^2 log(7.12e23 (log alpha/eps)(log b)^2)^2.
Interval n1_bound_from_alpha(const Interval& log_alpha, const mpq_class& epsilon, long b,
                             mpfr_prec_t prec = kDefaultPrec);

struct IntermediateBounds {
  Interval n1_minus_n2;  // 2.69e9 log b log(27.62 n1)
  Interval m1_minus_m2;  // 2.7e9 log alpha log(27.62 n1)
  Interval n1_rhs;       // 6.42e21 (log alpha/eps)[log b log(27.62 n1)]^2
};
IntermediateBounds intermediate_bounds(const mpz_class& n1, long b,
                                       const Interval& log_alpha, const mpq_class& epsilon,
                                       mpfr_prec_t prec = kDefaultPrec);

/// The three-possibilities thresholds plus the five M-maximum sub-case
/// bounds and the five M0 fallback bounds, keyed by case label.
std::map<std::string, Interval> case_analysis(const mpz_class& n1, long b,
                                              const mpq_class& epsilon,
                                              mpfr_prec_t prec = kDefaultPrec);

/// C1 = 4.83e32 (log b)^4/eps^2 (log(5.56e36 (log b)^4/eps^2))^4.
Interval c1(const mpq_class& epsilon, long b, mpfr_prec_t prec = kDefaultPrec);
/// C2 = 4.35e10 log(4 kappa) log b log(5.98e11 log b).
Interval c2(const mpq_class& kappa, long b, mpfr_prec_t prec = kDefaultPrec);
/// C3 = 9.41e9 [log(1.4e36 (log b)^4 (log(2.23e37 (log b)^4))^4) log b]^2.
Interval c3(long b, mpfr_prec_t prec = kDefaultPrec);

/// The four final-stage displayed bounds of the degenerate and m2-m3 cases.
std::map<std::string, Interval> final_case_formulas(long b, const mpq_class& epsilon,
                                                    const mpz_class& n1,
                                                    mpfr_prec_t prec = kDefaultPrec);

struct SolutionPoint {
  unsigned long n = 0;
  unsigned long m = 0;
};

/// Three solutions of V_n - b^m = c with n1 > n2 > n3 and m1 > m2 > m3,
/// bound to their instance. check() certifies exact residuals and ordering.
struct SolutionTriple {
  LucasParams params;
  long b;
  mpz_class c;
  SolutionPoint s1, s2, s3;

  void check() const;  // throws InvalidTriple
};

enum class Verdict { Holds, Fails, HypothesesNotMet };
const char* verdict_name(Verdict v);

struct TheoremCheck {
  Verdict verdict = Verdict::HypothesesNotMet;
  std::vector<std::string> failed_hypotheses;
  bool via_a_branch = false;  // theorem 1 only: decided by A < 32^(1/eps)
  Interval bound;             // C1, or max{C2, C3}
};

/// Theorem 1: n1 < C1 or A < 32^(1/eps), under |B| < A^(2-eps), the b/c sign
/// rule, and n3 >= ceil(N0(eps)).
TheoremCheck verify_theorem1(const SolutionTriple& triple, const mpq_class& epsilon,
                             mpfr_prec_t prec = kDefaultPrec);

/// Theorem 2: log A < max{C2, C3}, under |B| < kappa A, the sign rule, and
/// n3 >= 1.
TheoremCheck verify_theorem2(const SolutionTriple& triple, const mpq_class& kappa,
                             mpfr_prec_t prec = kDefaultPrec);

struct BoundReport {
  Interval K0, C1, C2, C3;
  std::map<std::string, Interval> case_thresholds;
  Verdict verdict = Verdict::HypothesesNotMet;
};

BoundReport build_bound_report(long b, const mpq_class& epsilon, const mpq_class& kappa,
                               const mpz_class& n1, Verdict verdict,
                               mpfr_prec_t prec = kDefaultPrec);

}  // namespace pillai
