#include "pillai/surd.hpp"

#include <sstream>

namespace pillai {

namespace {

void check_radicand(const mpz_class& D) {
  if (D <= 0) fail(Errc::DomainError, "surd radicand must be positive");
  if (mpz_perfect_square_p(D.get_mpz_t()))
    fail(Errc::DomainError, "surd radicand must not be a perfect square");
}

}  // namespace

QuadraticSurd::QuadraticSurd() : p_(0), q_(0), r_(1), D_(2) {}

QuadraticSurd::QuadraticSurd(mpz_class p, mpz_class q, mpz_class r, mpz_class D)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), D_(std::move(D)) {
  check_radicand(D_);
  if (r_ == 0) fail(Errc::DomainError, "surd denominator is zero");
  normalize();
}

QuadraticSurd QuadraticSurd::from_rational(const mpq_class& v, const mpz_class& D) {
  return QuadraticSurd(v.get_num(), 0, v.get_den(), D);
}

QuadraticSurd QuadraticSurd::from_int(long v, const mpz_class& D) {
  return QuadraticSurd(v, 0, 1, D);
}

void QuadraticSurd::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

void QuadraticSurd::coerce(QuadraticSurd& a, QuadraticSurd& b) {
  if (a.D_ == b.D_) return;
  if (a.q_ == 0)
    a.D_ = b.D_;
  else if (b.q_ == 0)
    b.D_ = a.D_;
  else
    fail(Errc::InvalidInput, "surd arithmetic across different radicands");
}

mpq_class QuadraticSurd::rational_value() const {
  if (q_ != 0) fail(Errc::DomainError, "surd is irrational");
  mpq_class v(p_, r_);
  v.canonicalize();
  return v;
}

int QuadraticSurd::sign() const {
  // r > 0, so the sign is that of p + q*sqrt(D).
  int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: |p| vs |q|*sqrt(D), decided by p^2 vs q^2*D.
  mpz_class lhs = p_ * p_;
  mpz_class rhs = q_ * q_ * D_;
  int c = cmp(lhs, rhs);
  if (c == 0) fail(Errc::DomainError, "p^2 == q^2 D contradicts non-square D");
  return c > 0 ? sp : sq;
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-p_, -q_, r_, D_); }

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(p_, -q_, r_, D_); }

QuadraticSurd QuadraticSurd::abs() const { return sign() >= 0 ? *this : -*this; }

QuadraticSurd QuadraticSurd::pow(unsigned long n) const {
  QuadraticSurd acc = from_int(1, D_);
  QuadraticSurd base = *this;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return acc;
}

int QuadraticSurd::compare(const QuadraticSurd& other) const {
  QuadraticSurd a = *this, b = other;
  coerce(a, b);
  return sub(a, b).sign();
}

int QuadraticSurd::compare(const mpq_class& other) const {
  return compare(from_rational(other, D_));
}

Interval QuadraticSurd::to_interval(mpfr_prec_t prec) const {
  Interval root = sqrt(Interval::from_mpz(D_, prec));
  Interval num = add(Interval::from_mpz(p_, prec), mul(Interval::from_mpz(q_, prec), root));
  return div(num, Interval::from_mpz(r_, prec));
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  os << "(" << p_ << " + " << q_ << "*sqrt(" << D_ << "))/" << r_;
  return os.str();
}

QuadraticSurd add(const QuadraticSurd& a_in, const QuadraticSurd& b_in) {
  QuadraticSurd a = a_in, b = b_in;
  QuadraticSurd::coerce(a, b);
  return QuadraticSurd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_, a.D_);
}

QuadraticSurd sub(const QuadraticSurd& a, const QuadraticSurd& b) { return add(a, -b); }

QuadraticSurd mul(const QuadraticSurd& a_in, const QuadraticSurd& b_in) {
  QuadraticSurd a = a_in, b = b_in;
  QuadraticSurd::coerce(a, b);
  return QuadraticSurd(a.p_ * b.p_ + a.q_ * b.q_ * a.D_, a.p_ * b.q_ + a.q_ * b.p_,
                       a.r_ * b.r_, a.D_);
}

QuadraticSurd div(const QuadraticSurd& a_in, const QuadraticSurd& b_in) {
  QuadraticSurd a = a_in, b = b_in;
  QuadraticSurd::coerce(a, b);
  if (b.is_zero()) fail(Errc::DomainError, "surd division by zero");
  // 1/b = r*(p - q*sqrt(D)) / (p^2 - q^2 D)
  mpz_class norm = b.p_ * b.p_ - b.q_ * b.q_ * b.D_;
  QuadraticSurd inv(b.r_ * b.p_, -b.r_ * b.q_, norm, b.D_);
  return mul(a, inv);
}

Ordering surd_compare(const QuadraticSurd& x, const mpq_class& y) {
  return ordering_of(x.compare(y));
}

}  // namespace pillai
