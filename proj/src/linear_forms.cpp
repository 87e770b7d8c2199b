#include "pillai/linear_forms.hpp"

#include <string>

namespace pillai {

namespace {

Interval iv_int(long v, mpfr_prec_t p) { return Interval::from_long(v, p); }

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

void MatveevInput::check() const {
  if (N < 1 || A_list.size() != static_cast<size_t>(N) || b_list.size() != static_cast<size_t>(N))
    fail(Errc::InvalidInput, "Matveev input: N and list sizes disagree");
  if (D < 1) fail(Errc::InvalidInput, "Matveev input: D must be positive");
  int pv = pivot < 0 ? N - 1 : pivot;
  if (pv < 0 || pv >= N) fail(Errc::InvalidInput, "Matveev input: pivot out of range");
  if (b_list[pv] == 0) fail(Errc::InvalidInput, "Matveev input: pivot coefficient is zero");
  for (const Interval& a : A_list) {
    if (mpfr_cmp_d(a.lo(), 0.16) < 0)
      fail(Errc::InvalidInput, "Matveev input: A_j below the 0.16 floor");
  }
  mpz_class abs_bp(std::labs(b_list[pv]));
  if (mpfr_cmp_z(E.lo(), abs_bp.get_mpz_t()) < 0)
    fail(Errc::InvalidInput, "Matveev input: E < |b_pivot|");
  if (mpfr_cmp_ui(E.lo(), 1) < 0) fail(Errc::InvalidInput, "Matveev input: E < 1");
}

Interval weil_height_quadratic(const LucasParams& params, mpfr_prec_t prec) {
  QuadraticSurd ab = params.abs_beta();
  Interval half = Interval::from_mpq(mpq_class(1, 2), prec);
  Interval h(prec);
  if (ab.compare(mpq_class(1)) > 0) {
    // both roots outside the unit circle: h = log|alpha beta| / 2 = log|B| / 2
    h = mul(half, log(Interval::from_long(std::labs(params.B()), prec)));
  } else {
    h = mul(half, params.log_alpha(prec));
  }
  if (cert_leq(h, params.log_alpha(prec)) == Cert::False)
    fail(Errc::TheoremFalsified, "h(alpha) > log(alpha)");
  return h;
}

Interval height_majorant(HeightKind kind, unsigned long t, const Interval& value,
                         mpfr_prec_t prec) {
  long factor = 2;
  if (kind == HeightKind::BPowerPm1 || kind == HeightKind::AlphaPowerPm1) {
    if (t < 1) fail(Errc::InvalidInput, "height_majorant: t must be >= 1");
    factor = 2 * (static_cast<long>(t) + 1);
  }
  Interval m = mul(iv_int(factor, prec), log(value));
  return max(m, Interval::from_decimal("0.16", prec));
}

MatveevBound matveev_general(const MatveevInput& input, mpfr_prec_t prec) {
  input.check();
  const int N = input.N, D = input.D;
  const int km = input.field_real ? 1 : 2;

  Interval e = exp(iv_int(1, prec));

  // C(N, kappa) = 16/(N! kappa) e^N (2N+1+2kappa)(N+2)(4(N+1))^{N+1} (eN/2)^kappa
  mpz_class pow_term;
  mpz_ui_pow_ui(pow_term.get_mpz_t(), static_cast<unsigned long>(4 * (N + 1)),
                static_cast<unsigned long>(N + 1));
  mpq_class rational_prefactor =
      mpq_class(16 * (2 * N + 1 + 2 * km) * (N + 2)) * mpq_class(pow_term) /
      (mpq_class(factorial(N)) * km);
  rational_prefactor.canonicalize();
  Interval C = mul(Interval::from_mpq(rational_prefactor, prec), exp(iv_int(N, prec)));
  C = mul(C, pow_i(mul(e, Interval::from_mpq(mpq_class(N, 2), prec)), km));

  Interval log_eD = log(mul(e, iv_int(D, prec)));

  // C0 = log(e^{4.4N+7} N^{5.5} D^2 log(eD))
  Interval exp_term = exp(Interval::from_mpq(mpq_class(22 * N + 35, 5), prec));
  Interval n_pow = mul(pow_i(iv_int(N, prec), 5), sqrt(iv_int(N, prec)));
  Interval C0 = log(mul(mul(mul(exp_term, n_pow), iv_int(D * D, prec)), log_eD));

  // W0 = log(1.5 e E D log(eD))
  Interval W0 = log(mul(mul(mul(mul(Interval::from_decimal("1.5", prec), e), input.E),
                            iv_int(D, prec)),
                        log_eD));

  Interval Omega = iv_int(1, prec);
  for (const Interval& a : input.A_list) Omega = mul(Omega, a);

  Interval n6 = Interval::from_mpq(std::max(mpq_class(1), mpq_class(N, 6)), prec);
  Interval coefficient = mul(mul(mul(C, n6), C0), iv_int(D * D, prec));

  MatveevBound out;
  out.C = C;
  out.C0 = C0;
  out.W0 = W0;
  out.Omega = Omega;
  out.coefficient = coefficient;
  out.log_lambda_lower = neg(mul(mul(coefficient, W0), Omega));
  return out;
}

Interval matveev_special(int N, const Interval& E, const Interval& Omega, mpfr_prec_t prec) {
  if (mpfr_cmp_ui(E.lo(), 1) < 0) fail(Errc::InvalidInput, "matveev_special: E < 1");
  if (mpfr_sgn(Omega.lo()) <= 0) fail(Errc::InvalidInput, "matveev_special: Omega <= 0");
  const char* c;
  if (N == 2)
    c = "6.7e8";
  else if (N == 3)
    c = "7.26e10";
  else
    fail(Errc::InvalidInput, "matveev_special: N must be 2 or 3");
  Interval lg = log(mul(Interval::from_decimal("13.81", prec), E));
  return neg(mul(mul(Interval::from_decimal(c, prec), lg), Omega));
}

Interval petho_de_weger(const Interval& a, const Interval& b, const Interval& h,
                        mpfr_prec_t prec) {
  if (mpfr_sgn(a.lo()) < 0 || mpfr_sgn(b.lo()) < 0)
    fail(Errc::InvalidInput, "petho_de_weger: a, b must be nonnegative");
  if (mpfr_cmp_ui(h.lo(), 1) < 0) fail(Errc::InvalidInput, "petho_de_weger: h must be >= 1");

  Interval e2 = exp(iv_int(2, prec));
  Interval threshold = rpow(div(e2, h), h);  // (e^2/h)^h
  Interval inv_h = div(iv_int(1, prec), h);
  Interval two_h = rpow(iv_int(2, prec), h);
  Interval a_root = rpow_nonneg(a, inv_h);

  auto branch_large_b = [&](const Interval& bb) {
    // 2^h (a^{1/h} + b^{1/h} log(h^h b))^h
    Interval b_root = rpow(bb, inv_h);
    Interval lg = log(mul(rpow(h, h), bb));
    return mul(two_h, rpow(add(a_root, mul(b_root, lg)), h));
  };
  auto branch_small_b = [&]() {
    // 2^h (a^{1/h} + 2 e^2)^h
    return mul(two_h, rpow(add(a_root, mul(iv_int(2, prec), e2)), h));
  };

  Cert c = cert_less(threshold, b);
  if (c == Cert::True) return branch_large_b(b);
  if (c == Cert::False) return branch_small_b();
  // Undecided: the true b is on one side or the other; take the max of both
  // bounds, evaluating the large-b branch on b clipped up to the threshold
  // so its log stays in domain.
  return max(branch_large_b(max(b, threshold)), branch_small_b());
}

namespace {

// Conjunction of two leq-certificates with refinement: re-evaluates the
// expression triple at doubling precision until decided or capped.
template <typename Eval>
Cert refine_conjunction(Eval eval, mpfr_prec_t cap) {
  for (mpfr_prec_t p = kDefaultPrec;; p *= 2) {
    Cert c = eval(p);
    if (c != Cert::Unknown || p >= cap) return c;
  }
}

}  // namespace

Cert check_log_est(const Interval& x, mpfr_prec_t cap) {
  if (mpfr_cmp_d(abs(x).hi(), 0.5) > 0)
    fail(Errc::PreconditionViolated, "check_log_est needs |x| <= 0.5");
  return refine_conjunction(
      [&](mpfr_prec_t p) {
        Interval one = iv_int(1, p);
        Interval mid = sub(x, log(add(one, x)));
        Interval x2 = sqr(x);
        Cert lower = cert_leq(mul(Interval::from_mpq(mpq_class(2, 9), p), x2), mid);
        Cert upper = cert_leq(mid, mul(iv_int(2, p), x2));
        if (lower == Cert::False || upper == Cert::False) return Cert::False;
        if (lower == Cert::True && upper == Cert::True) return Cert::True;
        return Cert::Unknown;
      },
      cap);
}

Cert check_log_near_one(const Interval& x, mpfr_prec_t cap) {
  Interval xm1 = sub(x, Interval::from_long(1, x.prec()));
  if (mpfr_cmp_d(abs(xm1).hi(), 0.5) > 0)
    fail(Errc::PreconditionViolated, "check_log_near_one needs |x-1| <= 0.5");
  return refine_conjunction(
      [&](mpfr_prec_t p) {
        Interval d = abs(sub(x, iv_int(1, p)));
        return cert_leq(abs(log(x)), mul(iv_int(2, p), d));
      },
      cap);
}

Cert check_exp_est(const Interval& x, const Interval& n, mpfr_prec_t cap) {
  if (mpfr_cmp_ui(n.lo(), 1) < 0)
    fail(Errc::PreconditionViolated, "check_exp_est needs n >= 1");
  Interval two_nx = mul(mul(Interval::from_long(2, x.prec()), n), x);
  if (mpfr_cmp_d(abs(two_nx).hi(), 0.5) >= 0)
    fail(Errc::PreconditionViolated, "check_exp_est needs |2nx| < 0.5");
  return refine_conjunction(
      [&](mpfr_prec_t p) {
        Interval one = iv_int(1, p);
        Interval lhs = abs(sub(rpow(add(one, x), n), one));
        Interval rhs = mul(mul(Interval::from_decimal("2.6", p), n), abs(x));
        return cert_leq(lhs, rhs);
      },
      cap);
}

}  // namespace pillai
