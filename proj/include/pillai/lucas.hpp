#pragma once

#include <gmpxx.h>

#include <vector>

#include "pillai/interval.hpp"
#include "pillai/surd.hpp"

namespace pillai {

/// Hypothesis bundle under which the auxiliary lemmas hold.
///   A1: |B| < A^(2-eps), A^eps >= 32, N0 = 3/(2 eps)
///   A2: |B| < kappa*A, A >= max{kappa^2, 16 kappa + 12, 1024}, N0 = 1
struct Regime {
  enum class Kind { A1, A2 };

  static Regime a1(const mpq_class& epsilon);
  static Regime a2(const mpq_class& kappa);

  Kind kind;
  mpq_class epsilon;  // in (0,1); meaningful for A1
  mpq_class kappa;    // >= 1; meaningful for A2

  mpq_class n0() const;
  unsigned long n0_ceil() const;
  const char* name() const { return kind == Kind::A1 ? "A1" : "A2"; }
};

/// Validated coefficient pair (A, B) of X^2 - A X + B together with the
/// discriminant and the exact roots alpha > |beta|.
class LucasParams {
 public:
  /// Throws Error with one of NonPositiveA / NotCoprime /
  /// NonPositiveDiscriminant / ReduciblePolynomial.
  static LucasParams validate(long A, long B);

  long A() const { return A_; }
  long B() const { return B_; }
  const mpz_class& discriminant() const { return disc_; }
  const QuadraticSurd& alpha() const { return alpha_; }
  const QuadraticSurd& beta() const { return beta_; }
  QuadraticSurd abs_beta() const { return beta_.abs(); }

  /// Exact V_n via the order-2 recurrence V0=2, V1=A, V_{k+1}=A V_k - B V_{k-1}.
  mpz_class v(unsigned long n) const;
  /// V_0 .. V_n_max inclusive.
  std::vector<mpz_class> v_prefix(unsigned long n_max) const;

  Interval alpha_iv(mpfr_prec_t prec = kDefaultPrec) const { return alpha_.to_interval(prec); }
  Interval abs_beta_iv(mpfr_prec_t prec = kDefaultPrec) const {
    return abs_beta().to_interval(prec);
  }
  Interval log_alpha(mpfr_prec_t prec = kDefaultPrec) const { return log(alpha_iv(prec)); }

  bool operator==(const LucasParams& o) const { return A_ == o.A_ && B_ == o.B_; }

 private:
  LucasParams(long A, long B, mpz_class disc);

  long A_, B_;
  mpz_class disc_;
  QuadraticSurd alpha_, beta_;
};

struct RegimeReport {
  Regime regime;
  bool b_bound = false;  // |B| < A^(2-eps)  /  |B| < kappa A
  bool a_floor = false;  // A^eps >= 32      /  A >= max{kappa^2, 16 kappa+12, 1024}
  mpq_class n0;
  bool holds() const { return b_bound && a_floor; }
};

/// Exact (integer-arithmetic) evaluation of both regime conditions.
RegimeReport check_regime(const LucasParams& params, const Regime& regime);

/// gamma = min{alpha, alpha/|beta|}; equals alpha's enclosure when |beta| < 1.
Interval gamma_iv(const LucasParams& params, mpfr_prec_t prec = kDefaultPrec);

/// A/2 < alpha < 2A. Caller must ensure |B| < A^2 (PreconditionViolated).
Cert lemma_alpha_window(const LucasParams& params);

/// |1 - |beta|| >= 2/(2A+5); requires A >= 4.
Cert lemma_beta_one_gap(const LucasParams& params);

/// alpha/|beta| > A^eps / 2, or A^eps < 8. Requires |B| < A^(2-eps).
struct RatioReport {
  enum class Which { RatioHolds, ASmall } which;
  Cert cert;
};
RatioReport lemma_ratio(const LucasParams& params, const mpq_class& epsilon);

/// |beta| < 2 kappa, or A < 4 kappa. Requires |B| < kappa A.
struct BetaSmallReport {
  enum class Which { BetaSmall, ASmall } which;
  Cert cert;
};
BetaSmallReport lemma_beta_small(const LucasParams& params, const mpq_class& kappa);

/// ceil(N0) plus an exact check that V is strictly increasing on
/// [ceil(N0), ceil(N0)+64]. RegimeViolated if the regime fails.
unsigned long monotone_start(const LucasParams& params, const Regime& regime);

/// Hypotheses under which the growth envelope (and the two-solution window)
/// are provable: the lemma needs less than the full regime (A^eps >= 8 for
/// A1, A >= 16 kappa for A2).
bool growth_hypotheses(const LucasParams& params, const Regime& regime);

/// 5/4 alpha^n > V_n > 3/4 alpha^n for n >= N0, via exact V_n and interval
/// alpha^n, with an exact surd fallback instead of Unknown.
Cert lemma_growth_envelope(const LucasParams& params, const Regime& regime, unsigned long n);

/// 5/2 > b^m1 / alpha^n1 > 3/8 (the two-solution window). Pure inequality
/// check; hypothesis gating is the caller's concern.
Cert two_solution_window(const LucasParams& params, long b, unsigned long n1,
                         unsigned long m1);

/// Whether the window lemma's hypotheses hold for a given second-largest
/// solution index n2: growth hypotheses plus alpha > 4 plus n2 >= N0.
bool window_hypotheses(const LucasParams& params, const Regime& regime, unsigned long n2);

}  // namespace pillai
