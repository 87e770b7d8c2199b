#include "pillai/lucas.hpp"

#include <string>

namespace pillai {

namespace {

unsigned long to_ulong_exp(const mpz_class& e, const char* what) {
  if (e < 0 || !e.fits_ulong_p())
    fail(Errc::InvalidInput, std::string(what) + ": exponent out of range");
  return e.get_ui();
}

// A^u vs C^v, exact.
int cmp_pow(const mpz_class& base_a, unsigned long u, const mpz_class& base_c, unsigned long v) {
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), base_a.get_mpz_t(), u);
  mpz_pow_ui(rhs.get_mpz_t(), base_c.get_mpz_t(), v);
  return cmp(lhs, rhs);
}

// |B| < A^(2-eps) with eps = u/v in (0,1):  |B|^v < A^(2v-u).
bool b_below_a_pow(long A, long B, const mpq_class& eps) {
  mpz_class u = eps.get_num(), v = eps.get_den();
  unsigned long uu = to_ulong_exp(u, "epsilon numerator");
  unsigned long vv = to_ulong_exp(v, "epsilon denominator");
  mpz_class absB = ::abs(mpz_class(B));
  return cmp_pow(absB, vv, mpz_class(A), 2 * vv - uu) < 0;
}

// A^eps >= bound  <=>  A^u >= bound^v.
bool a_pow_at_least(long A, const mpq_class& eps, long bound) {
  unsigned long uu = to_ulong_exp(eps.get_num(), "epsilon numerator");
  unsigned long vv = to_ulong_exp(eps.get_den(), "epsilon denominator");
  return cmp_pow(mpz_class(A), uu, mpz_class(bound), vv) >= 0;
}

bool a_pow_below(long A, const mpq_class& eps, long bound) {
  return !a_pow_at_least(A, eps, bound);
}

mpq_class mpq_of(long v) { return mpq_class(mpz_class(v)); }

}  // namespace

Regime Regime::a1(const mpq_class& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) fail(Errc::InvalidInput, "A1 requires 0 < epsilon < 1");
  Regime r;
  r.kind = Kind::A1;
  r.epsilon = epsilon;
  r.kappa = 0;
  return r;
}

Regime Regime::a2(const mpq_class& kappa) {
  if (kappa < 1) fail(Errc::InvalidInput, "A2 requires kappa >= 1");
  Regime r;
  r.kind = Kind::A2;
  r.epsilon = 0;
  r.kappa = kappa;
  return r;
}

mpq_class Regime::n0() const {
  if (kind == Kind::A1) return mpq_class(3) / (2 * epsilon);
  return mpq_class(1);
}

unsigned long Regime::n0_ceil() const {
  mpq_class v = n0();
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return to_ulong_exp(q, "N0");
}

LucasParams::LucasParams(long A, long B, mpz_class disc)
    : A_(A),
      B_(B),
      disc_(std::move(disc)),
      alpha_(mpz_class(A), 1, 2, disc_),
      beta_(mpz_class(A), -1, 2, disc_) {}

LucasParams LucasParams::validate(long A, long B) {
  if (A <= 0) fail(Errc::NonPositiveA, "A must be positive, got " + std::to_string(A));
  mpz_class g;
  mpz_class za(A), zb(B);
  mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  if (g != 1)
    fail(Errc::NotCoprime, "gcd(A,B) = " + g.get_str() + " for (A,B) = (" + std::to_string(A) +
                               "," + std::to_string(B) + ")");
  mpz_class disc = za * za - 4 * zb;
  if (disc <= 0)
    fail(Errc::NonPositiveDiscriminant,
         "A^2 - 4B = " + disc.get_str() + " is not positive");
  if (mpz_perfect_square_p(disc.get_mpz_t()))
    fail(Errc::ReduciblePolynomial,
         "A^2 - 4B = " + disc.get_str() + " is a perfect square; X^2-AX+B is reducible");
  return LucasParams(A, B, disc);
}

mpz_class LucasParams::v(unsigned long n) const {
  if (n == 0) return 2;
  mpz_class prev = 2, cur = A_;
  for (unsigned long k = 1; k < n; ++k) {
    mpz_class next = A_ * cur - B_ * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<mpz_class> LucasParams::v_prefix(unsigned long n_max) const {
  std::vector<mpz_class> vs;
  vs.reserve(n_max + 1);
  vs.emplace_back(2);
  if (n_max == 0) return vs;
  vs.emplace_back(A_);
  for (unsigned long k = 2; k <= n_max; ++k) vs.push_back(A_ * vs[k - 1] - B_ * vs[k - 2]);
  return vs;
}

RegimeReport check_regime(const LucasParams& params, const Regime& regime) {
  RegimeReport rep;
  rep.regime = regime;
  rep.n0 = regime.n0();
  long A = params.A(), B = params.B();
  if (regime.kind == Regime::Kind::A1) {
    rep.b_bound = b_below_a_pow(A, B, regime.epsilon);
    rep.a_floor = a_pow_at_least(A, regime.epsilon, 32);
  } else {
    const mpq_class& k = regime.kappa;
    rep.b_bound = mpq_of(std::labs(B)) < k * mpq_of(A);
    rep.a_floor = mpq_of(A) >= k * k && mpq_of(A) >= 16 * k + 12 && A >= 1024;
  }
  return rep;
}

Interval gamma_iv(const LucasParams& params, mpfr_prec_t prec) {
  if (params.beta().is_zero()) fail(Errc::DegenerateBeta, "beta == 0 after validation");
  QuadraticSurd ab = params.abs_beta();
  if (ab.compare(mpq_class(1)) < 0) return params.alpha_iv(prec);
  // alpha/|beta| = alpha^2/|B|
  mpq_class absB = mpq_of(std::labs(params.B()));
  QuadraticSurd ratio =
      div(params.alpha().pow(2), QuadraticSurd::from_rational(absB, params.discriminant()));
  return ratio.to_interval(prec);
}

Cert lemma_alpha_window(const LucasParams& params) {
  mpz_class a2 = mpz_class(params.A()) * params.A();
  if (mpz_class(std::labs(params.B())) > a2)
    fail(Errc::PreconditionViolated, "lemma_alpha_window needs |B| <= A^2");
  mpq_class half_a(params.A(), 2);
  half_a.canonicalize();
  bool lower = params.alpha().compare(half_a) > 0;
  bool upper = params.alpha().compare(mpq_of(2 * params.A())) < 0;
  return (lower && upper) ? Cert::True : Cert::False;
}

Cert lemma_beta_one_gap(const LucasParams& params) {
  if (params.A() < 4) fail(Errc::PreconditionViolated, "lemma_beta_one_gap needs A >= 4");
  QuadraticSurd gap =
      sub(QuadraticSurd::from_int(1, params.discriminant()), params.abs_beta()).abs();
  mpq_class rhs(2, 2 * params.A() + 5);
  rhs.canonicalize();
  return gap.compare(rhs) >= 0 ? Cert::True : Cert::False;
}

RatioReport lemma_ratio(const LucasParams& params, const mpq_class& epsilon) {
  if (!b_below_a_pow(params.A(), params.B(), epsilon))
    fail(Errc::PreconditionViolated, "lemma_ratio needs |B| < A^(2-eps)");
  if (a_pow_below(params.A(), epsilon, 8)) return {RatioReport::Which::ASmall, Cert::True};
  // alpha/|beta| > A^eps/2  <=>  alpha^(2v) > A^u |B|^v / 2^v  (eps = u/v)
  unsigned long u = to_ulong_exp(epsilon.get_num(), "epsilon numerator");
  unsigned long v = to_ulong_exp(epsilon.get_den(), "epsilon denominator");
  mpz_class au, bv, twov;
  mpz_pow_ui(au.get_mpz_t(), mpz_class(params.A()).get_mpz_t(), u);
  mpz_pow_ui(bv.get_mpz_t(), mpz_class(std::labs(params.B())).get_mpz_t(), v);
  mpz_ui_pow_ui(twov.get_mpz_t(), 2, v);
  mpq_class rhs(au * bv, twov);
  rhs.canonicalize();
  Cert c = params.alpha().pow(2 * v).compare(rhs) > 0 ? Cert::True : Cert::False;
  return {RatioReport::Which::RatioHolds, c};
}

BetaSmallReport lemma_beta_small(const LucasParams& params, const mpq_class& kappa) {
  if (!(mpq_of(std::labs(params.B())) < kappa * mpq_of(params.A())))
    fail(Errc::PreconditionViolated, "lemma_beta_small needs |B| < kappa A");
  if (mpq_of(params.A()) < 4 * kappa) return {BetaSmallReport::Which::ASmall, Cert::True};
  Cert c = params.abs_beta().compare(mpq_class(2 * kappa)) < 0 ? Cert::True : Cert::False;
  return {BetaSmallReport::Which::BetaSmall, c};
}

unsigned long monotone_start(const LucasParams& params, const Regime& regime) {
  RegimeReport rep = check_regime(params, regime);
  if (!rep.holds())
    fail(Errc::RegimeViolated, std::string("regime ") + regime.name() +
                                   " does not hold for (A,B) = (" + std::to_string(params.A()) +
                                   "," + std::to_string(params.B()) + ")");
  unsigned long n0 = regime.n0_ceil();
  auto vs = params.v_prefix(n0 + 65);
  for (unsigned long k = n0; k < n0 + 65; ++k) {
    if (!(vs[k + 1] > vs[k]))
      fail(Errc::TheoremFalsified,
           "V_n not strictly increasing at n = " + std::to_string(k) + " despite regime " +
               regime.name());
  }
  return n0;
}

bool growth_hypotheses(const LucasParams& params, const Regime& regime) {
  if (regime.kind == Regime::Kind::A1) {
    return b_below_a_pow(params.A(), params.B(), regime.epsilon) &&
           a_pow_at_least(params.A(), regime.epsilon, 8);
  }
  return mpq_of(std::labs(params.B())) < regime.kappa * mpq_of(params.A()) &&
         mpq_of(params.A()) >= 16 * regime.kappa;
}

Cert lemma_growth_envelope(const LucasParams& params, const Regime& regime, unsigned long n) {
  if (mpq_class(static_cast<long>(n)) < regime.n0())
    fail(Errc::PreconditionViolated, "growth envelope needs n >= N0");
  if (!growth_hypotheses(params, regime))
    fail(Errc::PreconditionViolated, "growth envelope hypotheses fail");

  mpz_class vn = params.v(n);
  mpz_class four_v = 4 * vn;

  // Interval route first; exact surd route only if the enclosure is undecided.
  for (mpfr_prec_t p = kDefaultPrec; p <= 1024; p *= 2) {
    Interval an = pow_i(params.alpha_iv(p), static_cast<long>(n));
    Interval fv = Interval::from_mpz(four_v, p);
    Cert upper = cert_less(fv, mul(Interval::from_long(5, p), an));
    Cert lower = cert_less(mul(Interval::from_long(3, p), an), fv);
    if (upper == Cert::True && lower == Cert::True) return Cert::True;
    if (upper == Cert::False || lower == Cert::False) return Cert::False;
  }
  QuadraticSurd an = params.alpha().pow(n);
  mpq_class fv(four_v);
  bool upper = mul(an, QuadraticSurd::from_int(5, params.discriminant())).compare(fv) > 0;
  bool lower = mul(an, QuadraticSurd::from_int(3, params.discriminant())).compare(fv) < 0;
  return (upper && lower) ? Cert::True : Cert::False;
}

Cert two_solution_window(const LucasParams& params, long b, unsigned long n1,
                         unsigned long m1) {
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), mpz_class(b).get_mpz_t(), m1);
  mpz_class two_p = 2 * power, eight_p = 8 * power;

  for (mpfr_prec_t p = kDefaultPrec; p <= 1024; p *= 2) {
    Interval an = pow_i(params.alpha_iv(p), static_cast<long>(n1));
    Cert upper = cert_less(Interval::from_mpz(two_p, p), mul(Interval::from_long(5, p), an));
    Cert lower = cert_less(mul(Interval::from_long(3, p), an), Interval::from_mpz(eight_p, p));
    if (upper == Cert::True && lower == Cert::True) return Cert::True;
    if (upper == Cert::False || lower == Cert::False) return Cert::False;
  }
  QuadraticSurd an = params.alpha().pow(n1);
  bool upper = mul(an, QuadraticSurd::from_int(5, params.discriminant())).compare(mpq_class(two_p)) > 0;
  bool lower = mul(an, QuadraticSurd::from_int(3, params.discriminant())).compare(mpq_class(eight_p)) < 0;
  return (upper && lower) ? Cert::True : Cert::False;
}

bool window_hypotheses(const LucasParams& params, const Regime& regime, unsigned long n2) {
  return growth_hypotheses(params, regime) && params.alpha().compare(mpq_class(4)) > 0 &&
         mpq_class(static_cast<long>(n2)) >= regime.n0();
}

}  // namespace pillai
