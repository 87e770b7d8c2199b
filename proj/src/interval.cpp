#include "pillai/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace pillai {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DomainError: return "DomainError";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NonPositiveA: return "NonPositiveA";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NonPositiveDiscriminant: return "NonPositiveDiscriminant";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DegenerateBeta: return "DegenerateBeta";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::RegimeViolated: return "RegimeViolated";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::WorkBudgetExceeded: return "WorkBudgetExceeded";
    case Errc::FactorizationTimeout: return "FactorizationTimeout";
    case Errc::TheoremFalsified: return "TheoremFalsified";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  if (prec < MPFR_PREC_MIN) prec_ = MPFR_PREC_MIN;
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_ulong(unsigned long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

// Exact decimal literal -> rational. Accepts [+-]ddd[.ddd][eE[+-]ddd].
mpq_class parse_decimal(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(Errc::InvalidInput, "empty decimal literal");

  size_t i = 0;
  bool negative = false;
  if (t[i] == '+' || t[i] == '-') negative = (t[i++] == '-');

  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.'); ++i) {
    if (t[i] == '.') {
      if (seen_dot) fail(Errc::InvalidInput, "bad decimal literal: " + s);
      seen_dot = true;
    } else {
      digits.push_back(t[i]);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
  }
  if (!seen_digit) fail(Errc::InvalidInput, "bad decimal literal: " + s);

  long exp10 = 0;
  if (i < t.size()) {
    if (t[i] != 'e' && t[i] != 'E') fail(Errc::InvalidInput, "bad decimal literal: " + s);
    ++i;
    bool eneg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) eneg = (t[i++] == '-');
    if (i >= t.size()) fail(Errc::InvalidInput, "bad decimal literal: " + s);
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        fail(Errc::InvalidInput, "bad decimal literal: " + s);
      exp10 = exp10 * 10 + (t[i] - '0');
      if (exp10 > 1000000000L) fail(Errc::InvalidInput, "decimal exponent out of range: " + s);
    }
    if (eneg) exp10 = -exp10;
  }

  mpz_class num;
  if (mpz_set_str(num.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10) != 0)
    fail(Errc::InvalidInput, "bad decimal literal: " + s);
  if (negative) num = -num;
  long shift = exp10 - frac_digits;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q;
  if (shift >= 0)
    q = mpq_class(num * p10);
  else
    q = mpq_class(num, p10);
  q.canonicalize();
  return q;
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
  return from_mpq(parse_decimal(s), prec);
}

Interval Interval::whole_line(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_inf(r.lo_, -1);
  mpfr_set_inf(r.hi_, 1);
  return r;
}

Interval Interval::span(const std::string& lo_dec, const std::string& hi_dec, mpfr_prec_t prec) {
  mpq_class lo = parse_decimal(lo_dec), hi = parse_decimal(hi_dec);
  if (lo > hi) fail(Errc::InvalidInput, "span endpoints out of order");
  Interval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

mpq_class Interval::lo_rational() const {
  if (!mpfr_number_p(lo_)) fail(Errc::DomainError, "non-finite endpoint has no rational value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class Interval::hi_rational() const {
  if (!mpfr_number_p(hi_)) fail(Errc::DomainError, "non-finite endpoint has no rational value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double Interval::width_d() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::contains(const mpq_class& v) const {
  // lo <= v <= hi, comparisons exact
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::inside(const std::string& lo_dec, const std::string& hi_dec) const {
  mpq_class a = parse_decimal(lo_dec), b = parse_decimal(hi_dec);
  if (!finite()) return false;
  return mpfr_cmp_q(lo_, a.get_mpq_t()) >= 0 && mpfr_cmp_q(hi_, b.get_mpq_t()) <= 0;
}

std::string Interval::str(size_t digits) const {
  std::ostringstream os;
  char* ls = nullptr;
  char* hs = nullptr;
  mpfr_asprintf(&ls, "%.*Rg", static_cast<int>(digits), lo_);
  mpfr_asprintf(&hs, "%.*Rg", static_cast<int>(digits), hi_);
  os << "[" << ls << ", " << hs << "]";
  mpfr_free_str(ls);
  mpfr_free_str(hs);
  return os.str();
}

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.prec(), b.prec());
}

// Endpoint product with the 0 * inf = 0 convention (containment-safe for
// interval endpoints).
void prod(mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x) || mpfr_zero_p(y)) {
    mpfr_set_zero(r, 1);
    return;
  }
  mpfr_mul(r, x, y, rnd);
}

void quot(mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x) && !mpfr_zero_p(y)) {
    mpfr_set_zero(r, 1);
    return;
  }
  if (mpfr_inf_p(x) && mpfr_inf_p(y)) {
    // inf/inf: any magnitude is possible; handled by caller taking min/max
    // over finite candidates, so return with the widest sign convention.
    mpfr_set_inf(r, mpfr_sgn(x) * mpfr_sgn(y));
    return;
  }
  mpfr_div(r, x, y, rnd);
}

}  // namespace

// Non-trivial interval results all funnel through this helper class so the
// endpoint bookkeeping lives in one place.
class IntervalOps {
 public:
  static Interval make(mpfr_prec_t prec) { return Interval(prec); }
  static mpfr_ptr lo(Interval& iv) { return iv.lo_; }
  static mpfr_ptr hi(Interval& iv) { return iv.hi_; }
};

Interval add(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_add(IntervalOps::lo(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(IntervalOps::hi(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval sub(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_sub(IntervalOps::lo(r), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(IntervalOps::hi(r), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval neg(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(IntervalOps::lo(r), a.hi(), MPFR_RNDD);
  mpfr_neg(IntervalOps::hi(r), a.lo(), MPFR_RNDU);
  return r;
}

Interval mul(const Interval& a, const Interval& b) {
  mpfr_prec_t p = join_prec(a, b);
  Interval r(p);
  mpfr_t c[4];
  for (auto& t : c) mpfr_init2(t, p);

  prod(c[0], a.lo(), b.lo(), MPFR_RNDD);
  prod(c[1], a.lo(), b.hi(), MPFR_RNDD);
  prod(c[2], a.hi(), b.lo(), MPFR_RNDD);
  prod(c[3], a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(c[0], c[0], c[1], MPFR_RNDD);
  mpfr_min(c[2], c[2], c[3], MPFR_RNDD);
  mpfr_min(IntervalOps::lo(r), c[0], c[2], MPFR_RNDD);

  prod(c[0], a.lo(), b.lo(), MPFR_RNDU);
  prod(c[1], a.lo(), b.hi(), MPFR_RNDU);
  prod(c[2], a.hi(), b.lo(), MPFR_RNDU);
  prod(c[3], a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(c[0], c[0], c[1], MPFR_RNDU);
  mpfr_max(c[2], c[2], c[3], MPFR_RNDU);
  mpfr_max(IntervalOps::hi(r), c[0], c[2], MPFR_RNDU);

  for (auto& t : c) mpfr_clear(t);
  return r;
}

Interval div(const Interval& a, const Interval& b) {
  mpfr_prec_t p = join_prec(a, b);
  if (b.contains_zero()) {
    if (mpfr_zero_p(b.lo()) && mpfr_zero_p(b.hi()))
      fail(Errc::DomainError, "division by exact zero");
    return Interval::whole_line(p);
  }
  Interval r(p);
  mpfr_t c[4];
  for (auto& t : c) mpfr_init2(t, p);

  quot(c[0], a.lo(), b.lo(), MPFR_RNDD);
  quot(c[1], a.lo(), b.hi(), MPFR_RNDD);
  quot(c[2], a.hi(), b.lo(), MPFR_RNDD);
  quot(c[3], a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(c[0], c[0], c[1], MPFR_RNDD);
  mpfr_min(c[2], c[2], c[3], MPFR_RNDD);
  mpfr_min(IntervalOps::lo(r), c[0], c[2], MPFR_RNDD);

  quot(c[0], a.lo(), b.lo(), MPFR_RNDU);
  quot(c[1], a.lo(), b.hi(), MPFR_RNDU);
  quot(c[2], a.hi(), b.lo(), MPFR_RNDU);
  quot(c[3], a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(c[0], c[0], c[1], MPFR_RNDU);
  mpfr_max(c[2], c[2], c[3], MPFR_RNDU);
  mpfr_max(IntervalOps::hi(r), c[0], c[2], MPFR_RNDU);

  for (auto& t : c) mpfr_clear(t);
  return r;
}

Interval abs(const Interval& a) {
  Interval r(a.prec());
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return neg(a);
  // straddles zero
  mpfr_set_zero(IntervalOps::lo(r), 1);
  mpfr_t t;
  mpfr_init2(t, a.prec());
  mpfr_neg(t, a.lo(), MPFR_RNDU);
  mpfr_max(IntervalOps::hi(r), t, a.hi(), MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval sqr(const Interval& a) {
  Interval r(a.prec());
  if (a.contains_zero()) {
    mpfr_set_zero(IntervalOps::lo(r), 1);
    mpfr_t t1, t2;
    mpfr_init2(t1, a.prec());
    mpfr_init2(t2, a.prec());
    mpfr_sqr(t1, a.lo(), MPFR_RNDU);
    mpfr_sqr(t2, a.hi(), MPFR_RNDU);
    mpfr_max(IntervalOps::hi(r), t1, t2, MPFR_RNDU);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
  }
  if (mpfr_sgn(a.lo()) > 0) {
    mpfr_sqr(IntervalOps::lo(r), a.lo(), MPFR_RNDD);
    mpfr_sqr(IntervalOps::hi(r), a.hi(), MPFR_RNDU);
  } else {
    mpfr_sqr(IntervalOps::lo(r), a.hi(), MPFR_RNDD);
    mpfr_sqr(IntervalOps::hi(r), a.lo(), MPFR_RNDU);
  }
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_min(IntervalOps::lo(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(IntervalOps::hi(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_max(IntervalOps::lo(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(IntervalOps::hi(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo()) < 0) fail(Errc::DomainError, "sqrt of an interval with negative lo");
  Interval r(a.prec());
  mpfr_sqrt(IntervalOps::lo(r), a.lo(), MPFR_RNDD);
  mpfr_sqrt(IntervalOps::hi(r), a.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0)
    fail(Errc::DomainError, "log of an interval touching (-inf, 0]");
  Interval r(a.prec());
  mpfr_log(IntervalOps::lo(r), a.lo(), MPFR_RNDD);
  mpfr_log(IntervalOps::hi(r), a.hi(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.prec());
  mpfr_exp(IntervalOps::lo(r), a.lo(), MPFR_RNDD);
  mpfr_exp(IntervalOps::hi(r), a.hi(), MPFR_RNDU);
  return r;
}

Interval pow_i(const Interval& a, long n) {
  mpfr_prec_t p = a.prec();
  if (n == 0) return Interval::from_long(1, p);
  if (n < 0) return div(Interval::from_long(1, p), pow_i(a, -n));

  unsigned long un = static_cast<unsigned long>(n);
  Interval r(p);
  if (mpfr_sgn(a.lo()) >= 0) {
    mpfr_pow_ui(IntervalOps::lo(r), a.lo(), un, MPFR_RNDD);
    mpfr_pow_ui(IntervalOps::hi(r), a.hi(), un, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(a.hi()) <= 0) {
    if (un % 2 == 0) {
      mpfr_pow_ui(IntervalOps::lo(r), a.hi(), un, MPFR_RNDD);
      mpfr_pow_ui(IntervalOps::hi(r), a.lo(), un, MPFR_RNDU);
    } else {
      mpfr_pow_ui(IntervalOps::lo(r), a.lo(), un, MPFR_RNDD);
      mpfr_pow_ui(IntervalOps::hi(r), a.hi(), un, MPFR_RNDU);
    }
    return r;
  }
  // straddles zero
  if (un % 2 == 0) {
    mpfr_set_zero(IntervalOps::lo(r), 1);
    mpfr_t t1, t2;
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    mpfr_pow_ui(t1, a.lo(), un, MPFR_RNDU);
    mpfr_pow_ui(t2, a.hi(), un, MPFR_RNDU);
    mpfr_abs(t1, t1, MPFR_RNDU);
    mpfr_max(IntervalOps::hi(r), t1, t2, MPFR_RNDU);
    mpfr_clear(t1);
    mpfr_clear(t2);
  } else {
    mpfr_pow_ui(IntervalOps::lo(r), a.lo(), un, MPFR_RNDD);
    mpfr_pow_ui(IntervalOps::hi(r), a.hi(), un, MPFR_RNDU);
  }
  return r;
}

Interval rpow(const Interval& x, const Interval& y) { return exp(mul(y, log(x))); }

Interval rpow_nonneg(const Interval& x, const Interval& y) {
  if (mpfr_sgn(y.lo()) <= 0) fail(Errc::DomainError, "rpow_nonneg needs a positive exponent");
  if (mpfr_sgn(x.lo()) < 0) fail(Errc::DomainError, "rpow_nonneg needs a nonnegative base");
  if (mpfr_zero_p(x.hi())) return Interval::from_long(0, x.prec());
  if (mpfr_zero_p(x.lo())) {
    Interval hi_part(x.prec());
    mpfr_set(IntervalOps::lo(hi_part), x.hi(), MPFR_RNDD);
    mpfr_set(IntervalOps::hi(hi_part), x.hi(), MPFR_RNDU);
    Interval up = rpow(hi_part, y);
    Interval r(up.prec());
    mpfr_set_zero(IntervalOps::lo(r), 1);
    mpfr_set(IntervalOps::hi(r), up.hi(), MPFR_RNDU);
    return r;
  }
  return rpow(x, y);
}

Cert cert_less(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Cert::True;
  if (mpfr_greaterequal_p(a.lo(), b.hi())) return Cert::False;
  return Cert::Unknown;
}

Cert cert_leq(const Interval& a, const Interval& b) {
  if (mpfr_lessequal_p(a.hi(), b.lo())) return Cert::True;
  if (mpfr_greater_p(a.lo(), b.hi())) return Cert::False;
  return Cert::Unknown;
}

Cert cert_sign(const Interval& a, int& sign_out) {
  if (mpfr_sgn(a.lo()) > 0) {
    sign_out = 1;
    return Cert::True;
  }
  if (mpfr_sgn(a.hi()) < 0) {
    sign_out = -1;
    return Cert::True;
  }
  if (mpfr_zero_p(a.lo()) && mpfr_zero_p(a.hi())) {
    sign_out = 0;
    return Cert::True;
  }
  sign_out = 0;
  return Cert::Unknown;
}

IvExpr constant(const std::string& decimal) {
  mpq_class q = parse_decimal(decimal);
  return [q](mpfr_prec_t p) { return Interval::from_mpq(q, p); };
}

IvExpr constant(long v) {
  return [v](mpfr_prec_t p) { return Interval::from_long(v, p); };
}

namespace {

template <typename Cmp>
Cert certify_loop(const IvExpr& lhs, const IvExpr& rhs, mpfr_prec_t start, mpfr_prec_t cap,
                  Cmp cmp) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(start, MPFR_PREC_MIN);
  for (;;) {
    Cert c = cmp(lhs(p), rhs(p));
    if (c != Cert::Unknown) return c;
    if (p >= cap) return Cert::Unknown;
    p = std::min<mpfr_prec_t>(p * 2, cap);
  }
}

}  // namespace

Cert certify_less(const IvExpr& lhs, const IvExpr& rhs, mpfr_prec_t start, mpfr_prec_t cap) {
  return certify_loop(lhs, rhs, start, cap,
                      [](const Interval& a, const Interval& b) { return cert_less(a, b); });
}

Cert certify_leq(const IvExpr& lhs, const IvExpr& rhs, mpfr_prec_t start, mpfr_prec_t cap) {
  return certify_loop(lhs, rhs, start, cap,
                      [](const Interval& a, const Interval& b) { return cert_leq(a, b); });
}

}  // namespace pillai
