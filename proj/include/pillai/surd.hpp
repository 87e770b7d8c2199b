#pragma once

#include <gmpxx.h>

#include <string>

#include "pillai/interval.hpp"

namespace pillai {

/// Exact element of Q(sqrt(D)) for a fixed positive non-square D, stored as
/// (p + q*sqrt(D)) / r with r > 0 and gcd(p, q, r) = 1. Comparisons, signs
/// and arithmetic are exact integer computations; no rounding is involved
/// until to_interval().
///
/// Mixed-D arithmetic is rejected unless one operand is rational (q == 0),
/// in which case it is coerced to the other operand's D.
class QuadraticSurd {
 public:
  QuadraticSurd();  // zero over a placeholder D
  QuadraticSurd(mpz_class p, mpz_class q, mpz_class r, mpz_class D);

  static QuadraticSurd from_rational(const mpq_class& v, const mpz_class& D);
  static QuadraticSurd from_int(long v, const mpz_class& D);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  const mpz_class& r() const { return r_; }
  const mpz_class& D() const { return D_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  mpq_class rational_value() const;  // requires is_rational()

  int sign() const;
  QuadraticSurd operator-() const;
  QuadraticSurd conjugate() const;  // q -> -q
  QuadraticSurd abs() const;
  QuadraticSurd pow(unsigned long n) const;

  /// Exact three-way comparison; result <0, 0, >0. Never "unknown".
  int compare(const QuadraticSurd& other) const;
  int compare(const mpq_class& other) const;

  Interval to_interval(mpfr_prec_t prec = kDefaultPrec) const;
  std::string str() const;

  friend QuadraticSurd add(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd sub(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd mul(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd div(const QuadraticSurd& a, const QuadraticSurd& b);

 private:
  void normalize();
  static void coerce(QuadraticSurd& a, QuadraticSurd& b);

  mpz_class p_, q_, r_, D_;
};

QuadraticSurd add(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd sub(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd mul(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd div(const QuadraticSurd& a, const QuadraticSurd& b);

inline QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) { return add(a, b); }
inline QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return sub(a, b); }
inline QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) { return mul(a, b); }
inline QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) { return div(a, b); }

enum class Ordering { Less, Equal, Greater };

inline Ordering ordering_of(int cmp) {
  return cmp < 0 ? Ordering::Less : (cmp == 0 ? Ordering::Equal : Ordering::Greater);
}

inline const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    default: return "greater";
  }
}

/// Exact ordering of a surd against a rational; the spec-level entry point.
Ordering surd_compare(const QuadraticSurd& x, const mpq_class& y);

}  // namespace pillai
