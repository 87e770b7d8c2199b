#pragma once

#include <vector>

#include "pillai/interval.hpp"
#include "pillai/lucas.hpp"

namespace pillai {

/// Inputs for Matveev's lower bound on |b_1 log eta_1 + ... + b_N log eta_N|.
/// field_real is Matveev's kappa flag (1 if the field is real, 2 otherwise);
/// it is deliberately not called kappa here to avoid collision with the
/// ratio bound of the A2 regime.
///
/// Matveev states b_N != 0; applications sometimes put the structurally
/// nonzero coefficient elsewhere, so the requirement here is that the
/// designated pivot coefficient (default: the last) is nonzero. Reindexing
/// the terms so the pivot lands last leaves every formula unchanged.
struct MatveevInput {
  int N = 2;
  int D = 2;
  bool field_real = true;
  std::vector<Interval> A_list;      // per-term height majorants, each >= 0.16
  std::vector<long> b_list;     // integer coefficients
  int pivot = -1;                    // -1 means last
  Interval E;                        // >= max |b_j| A_j / A_pivot, >= 1

  void check() const;  // throws InvalidInput
};

struct MatveevBound {
  Interval log_lambda_lower;  // certified lower bound on log|Lambda|
  Interval C;                 // C(N, kappa)
  Interval C0;
  Interval W0;
  Interval Omega;
  /// C(N,kappa) * max{1, N/6} * C0 * D^2 — the multiplier in front of
  /// W0 * Omega; what the paper's corollary rounds to 6.7e8 / 7.26e10.
  Interval coefficient;
};

/// h(alpha) = (log alpha + max{0, log|beta|}) / 2 for the validated pair;
/// uses log|alpha*beta| = log|B| when |beta| > 1. Also certifies
/// h(alpha) <= log(alpha).
Interval weil_height_quadratic(const LucasParams& params, mpfr_prec_t prec = kDefaultPrec);

enum class HeightKind { BaseB, Alpha, BPowerPm1, AlphaPowerPm1 };

/// The height-lemma majorants 2 log b, 2 log alpha, 2(t+1) log b,
/// 2(t+1) log alpha, outward rounded and floored at 0.16.
Interval height_majorant(HeightKind kind, unsigned long t, const Interval& value,
                         mpfr_prec_t prec = kDefaultPrec);

MatveevBound matveev_general(const MatveevInput& input, mpfr_prec_t prec = kDefaultPrec);

/// The D=2, real-field specialization: -7.26e10 log(13.81 E) Omega for N=3
/// and -6.7e8 log(13.81 E) Omega for N=2.
Interval matveev_special(int N, const Interval& E, const Interval& Omega,
                         mpfr_prec_t prec = kDefaultPrec);

/// Petho-de Weger: certified upper bound for the largest solution of
/// x = a + b (log x)^h, a,b >= 0, h >= 1. If the branch condition
/// b > (e^2/h)^h cannot be decided, the max of both branch bounds is
/// returned (each branch bound is valid on its branch).
Interval petho_de_weger(const Interval& a, const Interval& b, const Interval& h,
                        mpfr_prec_t prec = kDefaultPrec);

/// 2/9 x^2 <= x - log(1+x) <= 2 x^2 for |x| <= 0.5.
Cert check_log_est(const Interval& x, mpfr_prec_t cap = 1024);
/// |log x| <= 2 |x-1| for |x-1| <= 0.5.
Cert check_log_near_one(const Interval& x, mpfr_prec_t cap = 1024);
/// |(1+x)^n - 1| <= 2.6 n |x| for |2nx| < 0.5, n >= 1.
Cert check_exp_est(const Interval& x, const Interval& n, mpfr_prec_t cap = 1024);

}  // namespace pillai
