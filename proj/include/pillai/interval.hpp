#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <string>
#include <utility>

#include "pillai/errors.hpp"

namespace pillai {

/// Three-valued certification verdict. True/False are proofs; Unknown means
/// the enclosures still overlap at the precision cap.
enum class Cert { True, False, Unknown };

inline const char* cert_name(Cert c) {
  switch (c) {
    case Cert::True: return "true";
    case Cert::False: return "false";
    default: return "unknown";
  }
}

constexpr mpfr_prec_t kDefaultPrec = 128;
constexpr mpfr_prec_t kPrecCap = 4096;

/// Exact decimal literal ("2.69e9", "-0.5") -> rational; never a binary
/// float on the way.
mpq_class parse_decimal(const std::string& s);

/// Directed-rounding enclosure [lo, hi] of a real number. lo is always
/// rounded toward -inf and hi toward +inf, so the exact value of any
/// expression built from exact inputs is contained in the result. Endpoints
/// may be +-inf (overflow degrades to a wide but valid enclosure); they are
/// never NaN.
///
/// Instances are immutable after construction and safe to read from many
/// threads.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrec);
  static Interval from_ulong(unsigned long v, mpfr_prec_t prec = kDefaultPrec);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec = kDefaultPrec);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec = kDefaultPrec);
  /// Exact decimal literal ("2.69e9", "-0.5", "27.62"); parsed as a rational,
  /// then rounded outward. The way all paper constants enter computations.
  static Interval from_decimal(const std::string& s, mpfr_prec_t prec = kDefaultPrec);
  static Interval whole_line(mpfr_prec_t prec = kDefaultPrec);
  /// Outward hull of two exact decimals (lo <= hi required).
  static Interval span(const std::string& lo_dec, const std::string& hi_dec,
                       mpfr_prec_t prec = kDefaultPrec);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_prec_t prec() const { return prec_; }

  bool is_point() const { return mpfr_equal_p(lo_, hi_); }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  /// Exact rational value of an endpoint (endpoints are binary rationals).
  mpq_class lo_rational() const;
  mpq_class hi_rational() const;

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double width_d() const;
  double mid_d() const { return 0.5 * (lo_d() + hi_d()); }

  bool contains(const mpq_class& v) const;
  /// True iff this interval is contained in [lo, hi] given as exact decimals.
  bool inside(const std::string& lo_dec, const std::string& hi_dec) const;

  std::string str(size_t digits = 17) const;  // "[lo, hi]" for diagnostics

 private:
  friend class IntervalOps;
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

// Arithmetic. Result precision is the max of the operand precisions; all
// rounding is outward.
Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);  // 0 in b => whole line
Interval neg(const Interval& a);
Interval abs(const Interval& a);
Interval sqr(const Interval& a);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

/// sqrt: requires lo >= 0 (DomainError otherwise).
Interval sqrt(const Interval& a);
/// Natural log; requires a certified positive lower bound (DomainError).
Interval log(const Interval& a);
Interval exp(const Interval& a);
/// Integer power; exact for n = 0 ([1,1]).
Interval pow_i(const Interval& a, long n);
/// Real power for a certified-positive base: exp(y * log(x)).
Interval rpow(const Interval& x, const Interval& y);
/// Real power for a nonnegative base; handles a zero lower endpoint (used by
/// the Petho-de Weger formulas where a may be exactly 0). Requires y > 0.
Interval rpow_nonneg(const Interval& x, const Interval& y);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

/// One-shot comparisons on fixed enclosures.
Cert cert_less(const Interval& a, const Interval& b);   // a <  b
Cert cert_leq(const Interval& a, const Interval& b);    // a <= b
Cert cert_sign(const Interval& a, int& sign_out);       // sign of a, if decided

/// An expression re-evaluated from exact inputs at a requested precision.
/// This is the carrier for precision-refined certification: certify() calls
/// it with doubling precision until the verdict is decided.
using IvExpr = std::function<Interval(mpfr_prec_t)>;

IvExpr constant(const std::string& decimal);
IvExpr constant(long v);

/// Certify a strict inequality lhs < rhs by evaluating both sides at
/// doubling precision from `start` to `cap`. True and False are proofs;
/// Unknown is returned only when the cap is reached with overlap.
Cert certify_less(const IvExpr& lhs, const IvExpr& rhs,
                  mpfr_prec_t start = kDefaultPrec, mpfr_prec_t cap = kPrecCap);
Cert certify_leq(const IvExpr& lhs, const IvExpr& rhs,
                 mpfr_prec_t start = kDefaultPrec, mpfr_prec_t cap = kPrecCap);

}  // namespace pillai
