#include "pillai/bounds.hpp"

#include <mutex>
#include <sstream>

namespace pillai {

namespace {

// Constants are cached per (tag, b, rational parameter, precision); the
// hunter re-evaluates them per instance. Reads and inserts are serialized;
// values are immutable once stored.
class ConstantCache {
 public:
  template <typename Fn>
  Interval get_or(const std::string& key, Fn compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Interval v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::string, Interval> map_;
};

ConstantCache& cache() {
  static ConstantCache c;
  return c;
}

std::string key_of(const char* tag, long b, const mpq_class& r, mpfr_prec_t prec) {
  std::ostringstream os;
  os << tag << "|" << b << "|" << r.get_str() << "|" << prec;
  return os.str();
}

void require_base(long b) {
  if (b < 2) fail(Errc::InvalidInput, "base b must be an integer >= 2");
}

void require_eps(const mpq_class& eps) {
  if (eps <= 0 || eps >= 1) fail(Errc::InvalidInput, "epsilon must satisfy 0 < eps < 1");
}

Interval log_b(long b, mpfr_prec_t p) { return log(Interval::from_long(b, p)); }

Interval dec(const char* s, mpfr_prec_t p) { return Interval::from_decimal(s, p); }

// A^eps < bound, exact (eps = u/v: A^u < bound^v).
bool a_pow_below_exact(long A, const mpq_class& eps, long bound) {
  mpz_class u = eps.get_num(), v = eps.get_den();
  if (!u.fits_ulong_p() || !v.fits_ulong_p())
    fail(Errc::InvalidInput, "epsilon exponent out of range");
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), mpz_class(A).get_mpz_t(), u.get_ui());
  mpz_pow_ui(rhs.get_mpz_t(), mpz_class(bound).get_mpz_t(), v.get_ui());
  return lhs < rhs;
}

bool b_below_a_pow_exact(long A, long B, const mpq_class& eps) {
  mpz_class u = eps.get_num(), v = eps.get_den();
  if (!u.fits_ulong_p() || !v.fits_ulong_p())
    fail(Errc::InvalidInput, "epsilon exponent out of range");
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), mpz_class(std::labs(B)).get_mpz_t(), v.get_ui());
  mpz_pow_ui(rhs.get_mpz_t(), mpz_class(A).get_mpz_t(), 2 * v.get_ui() - u.get_ui());
  return lhs < rhs;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "hypotheses-not-met";
  }
}

Interval k0(long b, mpfr_prec_t prec) {
  require_base(b);
  return cache().get_or(key_of("k0", b, 0, prec),
                        [&] { return mul(dec("2.69e9", prec), log_b(b, prec)); });
}

Interval c_lower_bound(const LucasParams& params, long b, unsigned long n1,
                       mpfr_prec_t prec) {
  require_base(b);
  if (n1 < 1) fail(Errc::InvalidInput, "c_lower_bound needs n1 >= 1");
  Interval n1_iv = Interval::from_ulong(n1, prec);
  Interval expo = sub(n1_iv, mul(k0(b, prec), log(mul(dec("27.62", prec), n1_iv))));
  Interval first = rpow(params.alpha_iv(prec), expo);
  Interval second = pow_i(params.abs_beta_iv(prec), static_cast<long>(n1));
  return sub(first, second);
}

Interval n1_bound_from_alpha(const Interval& log_alpha, const mpq_class& epsilon, long b,
                             mpfr_prec_t prec) {
  require_base(b);
  require_eps(epsilon);
  if (mpfr_sgn(log_alpha.lo()) <= 0)
    fail(Errc::InvalidInput, "n1_bound_from_alpha needs log_alpha > 0");
  Interval y = mul(div(log_alpha, Interval::from_mpq(epsilon, prec)), sqr(log_b(b, prec)));
  return mul(mul(dec("2.58e22", prec), y), sqr(log(mul(dec("7.12e23", prec), y))));
}

IntermediateBounds intermediate_bounds(const mpz_class& n1, long b,
                                       const Interval& log_alpha, const mpq_class& epsilon,
                                       mpfr_prec_t prec) {
  require_base(b);
  require_eps(epsilon);
  if (n1 < 1) fail(Errc::InvalidInput, "intermediate_bounds needs n1 >= 1");
  Interval l27 = log(mul(dec("27.62", prec), Interval::from_mpz(n1, prec)));
  Interval lb = log_b(b, prec);
  IntermediateBounds out;
  out.n1_minus_n2 = mul(mul(dec("2.69e9", prec), lb), l27);
  out.m1_minus_m2 = mul(mul(dec("2.7e9", prec), log_alpha), l27);
  out.n1_rhs = mul(mul(dec("6.42e21", prec), div(log_alpha, Interval::from_mpq(epsilon, prec))),
                   sqr(mul(lb, l27)));
  return out;
}

std::map<std::string, Interval> case_analysis(const mpz_class& n1, long b,
                                              const mpq_class& epsilon, mpfr_prec_t prec) {
  require_base(b);
  require_eps(epsilon);
  if (n1 < 1) fail(Errc::InvalidInput, "case_analysis needs n1 >= 1");
  Interval n1_iv = Interval::from_mpz(n1, prec);
  Interval eps_iv = Interval::from_mpq(epsilon, prec);
  Interval two = Interval::from_long(2, prec);
  auto lg = [&](const char* c) { return log(mul(dec(c, prec), n1_iv)); };
  auto lgc = [&](long c) { return log(Interval::from_long(c, prec)); };

  std::map<std::string, Interval> t;
  t.emplace("ii_m2_m3", mul(dec("1.45", prec), lg("43.3")));
  t.emplace("iii_log_alpha", div(mul(two, lg("34.7")), eps_iv));
  t.emplace("M_alpha_n3_n2", lg("17.4"));
  t.emplace("M_b_m2_m3", mul(dec("1.45", prec), lg("43.3")));
  t.emplace("M_gamma_n2", div(mul(two, lg("34.7")), eps_iv));
  t.emplace("M_alpha_n2_n1", lg("40.4"));
  t.emplace("M_gamma_n1", div(mul(two, lg("23.1")), eps_iv));
  t.emplace("M0_alpha_n3_n2", lgc(6));
  t.emplace("M0_b_m2_m3", Interval::from_long(3, prec));
  t.emplace("M0_gamma_n2", div(lgc(144), eps_iv));
  t.emplace("M0_alpha_n2_n1", lgc(14));
  t.emplace("M0_gamma_n1", div(lgc(64), eps_iv));
  return t;
}

Interval c1(const mpq_class& epsilon, long b, mpfr_prec_t prec) {
  require_base(b);
  require_eps(epsilon);
  return cache().get_or(key_of("c1", b, epsilon, prec), [&] {
    Interval x =
        div(pow_i(log_b(b, prec), 4), Interval::from_mpq(epsilon * epsilon, prec));
    return mul(mul(dec("4.83e32", prec), x), pow_i(log(mul(dec("5.56e36", prec), x)), 4));
  });
}

Interval c2(const mpq_class& kappa, long b, mpfr_prec_t prec) {
  require_base(b);
  if (kappa < 1) fail(Errc::InvalidInput, "c2 needs kappa >= 1");
  return cache().get_or(key_of("c2", b, kappa, prec), [&] {
    Interval lb = log_b(b, prec);
    Interval l4k = log(Interval::from_mpq(4 * kappa, prec));
    return mul(mul(mul(dec("4.35e10", prec), l4k), lb), log(mul(dec("5.98e11", prec), lb)));
  });
}

Interval c3(long b, mpfr_prec_t prec) {
  require_base(b);
  return cache().get_or(key_of("c3", b, 0, prec), [&] {
    Interval lb = log_b(b, prec);
    Interval l4 = pow_i(lb, 4);
    Interval inner = mul(mul(dec("1.4e36", prec), l4),
                         pow_i(log(mul(dec("2.23e37", prec), l4)), 4));
    return mul(dec("9.41e9", prec), sqr(mul(log(inner), lb)));
  });
}

std::map<std::string, Interval> final_case_formulas(long b, const mpq_class& epsilon,
                                                    const mpz_class& n1, mpfr_prec_t prec) {
  require_base(b);
  require_eps(epsilon);
  if (n1 < 1) fail(Errc::InvalidInput, "final_case_formulas needs n1 >= 1");
  Interval lb = log_b(b, prec);
  Interval eps_iv = Interval::from_mpq(epsilon, prec);
  Interval lb_over_eps = div(lb, eps_iv);
  Interval n1_iv = Interval::from_mpz(n1, prec);

  std::map<std::string, Interval> t;
  t.emplace("deg_a1_n1", mul(mul(dec("2.17e10", prec), lb_over_eps),
                             log(mul(dec("2.99e11", prec), lb_over_eps))));
  t.emplace("deg_a2_n1",
            mul(mul(dec("4.34e10", prec), lb), log(mul(dec("5.98e11", prec), lb))));
  t.emplace("m2m3_log_alpha",
            mul(div(dec("4.7e9", prec), eps_iv),
                sqr(mul(log(mul(dec("719", prec), n1_iv)), lb))));
  Interval l4 = pow_i(lb, 4);
  t.emplace("m2m3_a2_n1", mul(mul(dec("1.94e33", prec), l4),
                              pow_i(log(mul(dec("2.23e37", prec), l4)), 4)));
  return t;
}

void SolutionTriple::check() const {
  if (b < 2) fail(Errc::InvalidTriple, "triple has b < 2");
  if (!(s1.n > s2.n && s2.n > s3.n))
    fail(Errc::InvalidTriple, "solution indices must satisfy n1 > n2 > n3");
  if (!(s1.m > s2.m && s2.m > s3.m))
    fail(Errc::InvalidTriple, "solution exponents must satisfy m1 > m2 > m3");
  for (const SolutionPoint& s : {s1, s2, s3}) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(b).get_mpz_t(), s.m);
    if (params.v(s.n) - power != c)
      fail(Errc::InvalidTriple, "nonzero residual at (n,m) = (" + std::to_string(s.n) + "," +
                                    std::to_string(s.m) + ")");
  }
}

namespace {

// n1 < bound(prec), refined until the enclosure decides.
Verdict compare_against(const mpz_class& n1, const char* what,
                        const std::function<Interval(mpfr_prec_t)>& bound, mpfr_prec_t start) {
  for (mpfr_prec_t p = start;; p *= 2) {
    Interval c = bound(p);
    if (mpfr_cmp_z(c.lo(), n1.get_mpz_t()) > 0) return Verdict::Holds;
    if (mpfr_cmp_z(c.hi(), n1.get_mpz_t()) <= 0) return Verdict::Fails;
    if (p >= kPrecCap)
      fail(Errc::PrecisionExhausted, std::string("cannot separate ") + what + " from its bound");
  }
}

}  // namespace

TheoremCheck verify_theorem1(const SolutionTriple& triple, const mpq_class& epsilon,
                             mpfr_prec_t prec) {
  require_eps(epsilon);
  triple.check();
  TheoremCheck out;
  out.bound = c1(epsilon, triple.b, prec);

  if (triple.c >= 0) {
    if (triple.b < 2) out.failed_hypotheses.push_back("b >= 2 (c >= 0)");
  } else if (triple.b < 3) {
    out.failed_hypotheses.push_back("b >= 3 (c < 0)");
  }
  if (!b_below_a_pow_exact(triple.params.A(), triple.params.B(), epsilon))
    out.failed_hypotheses.push_back("|B| < A^(2-eps)");
  unsigned long n0 = Regime::a1(epsilon).n0_ceil();
  if (triple.s3.n < n0)
    out.failed_hypotheses.push_back("n3 >= ceil(N0) = " + std::to_string(n0));
  if (!out.failed_hypotheses.empty()) {
    out.verdict = Verdict::HypothesesNotMet;
    return out;
  }

  // A < 32^(1/eps) <=> A^eps < 32, exact.
  if (a_pow_below_exact(triple.params.A(), epsilon, 32)) {
    out.verdict = Verdict::Holds;
    out.via_a_branch = true;
    return out;
  }
  out.verdict = compare_against(
      mpz_class(static_cast<unsigned long>(triple.s1.n)), "n1",
      [&](mpfr_prec_t p) { return c1(epsilon, triple.b, p); }, prec);
  return out;
}

TheoremCheck verify_theorem2(const SolutionTriple& triple, const mpq_class& kappa,
                             mpfr_prec_t prec) {
  if (kappa < 1) fail(Errc::InvalidInput, "verify_theorem2 needs kappa >= 1");
  triple.check();
  TheoremCheck out;

  if (triple.c >= 0) {
    if (triple.b < 2) out.failed_hypotheses.push_back("b >= 2 (c >= 0)");
  } else if (triple.b < 3) {
    out.failed_hypotheses.push_back("b >= 3 (c < 0)");
  }
  if (!(mpq_class(std::labs(triple.params.B())) < kappa * mpq_class(triple.params.A())))
    out.failed_hypotheses.push_back("|B| < kappa A");
  if (triple.s3.n < 1) out.failed_hypotheses.push_back("n3 >= 1");

  Interval bound = max(c2(kappa, triple.b, prec), c3(triple.b, prec));
  out.bound = bound;
  if (!out.failed_hypotheses.empty()) {
    out.verdict = Verdict::HypothesesNotMet;
    return out;
  }

  for (mpfr_prec_t p = prec;; p *= 2) {
    Interval log_a = log(Interval::from_long(triple.params.A(), p));
    Interval bd = max(c2(kappa, triple.b, p), c3(triple.b, p));
    Cert c = cert_less(log_a, bd);
    if (c == Cert::True) {
      out.verdict = Verdict::Holds;
      return out;
    }
    if (c == Cert::False) {
      out.verdict = Verdict::Fails;
      return out;
    }
    if (p >= kPrecCap)
      fail(Errc::PrecisionExhausted, "cannot separate log A from max{C2, C3}");
  }
}

BoundReport build_bound_report(long b, const mpq_class& epsilon, const mpq_class& kappa,
                               const mpz_class& n1, Verdict verdict, mpfr_prec_t prec) {
  BoundReport rep;
  rep.K0 = k0(b, prec);
  rep.C1 = c1(epsilon, b, prec);
  rep.C2 = c2(kappa, b, prec);
  rep.C3 = c3(b, prec);
  rep.case_thresholds = case_analysis(n1, b, epsilon, prec);
  rep.verdict = verdict;
  return rep;
}

}  // namespace pillai
