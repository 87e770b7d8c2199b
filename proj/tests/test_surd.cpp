#include <doctest.h>

#include <random>

#include "pillai/surd.hpp"

using namespace pillai;

namespace {

QuadraticSurd surd(long p, long q, long r, long D) {
  return QuadraticSurd(mpz_class(p), mpz_class(q), mpz_class(r), mpz_class(D));
}

}  // namespace

TEST_CASE("surd_compare against rationals") {
  // (1+sqrt5)/2 = 1.618..., (3+sqrt5)/2 = 2.618..., (4+sqrt12)/2 = 3.732...
  CHECK(surd_compare(surd(1, 1, 2, 5), mpq_class(2)) == Ordering::Less);
  CHECK(surd_compare(surd(3, 1, 2, 5), mpq_class(2)) == Ordering::Greater);
  CHECK(surd_compare(surd(4, 1, 2, 12), mpq_class(37, 10)) == Ordering::Greater);
  CHECK(surd_compare(surd(1, 1, 2, 5), mpq_class(1, 2)) == Ordering::Greater);
}

TEST_CASE("root identities of X^2 - X - 1") {
  QuadraticSurd a = surd(1, 1, 2, 5), b = surd(1, -1, 2, 5);
  CHECK((a + b).rational_value() == 1);   // alpha + beta = A
  CHECK((a * b).rational_value() == -1);  // alpha * beta = B
  CHECK(a.pow(2).compare(surd(3, 1, 2, 5)) == 0);
  // alpha * (-beta) = 1, so 1/alpha = -beta
  QuadraticSurd inv = div(QuadraticSurd::from_int(1, 5), a);
  CHECK(inv.compare(-b) == 0);
}

TEST_CASE("sign analysis with opposite-sign terms") {
  CHECK(surd(1, -1, 2, 5).sign() == -1);   // (1-sqrt5)/2 < 0
  CHECK(surd(-3, 1, 1, 5).sign() == -1);   // sqrt5 < 3
  CHECK(surd(-2, 1, 1, 5).sign() == 1);    // sqrt5 > 2
  CHECK(surd(0, -2, 3, 7).sign() == -1);
  CHECK(QuadraticSurd::from_int(0, 5).sign() == 0);
  CHECK(surd(1, -1, 2, 5).abs().sign() == 1);
}

TEST_CASE("mixed radicands only through rationals") {
  QuadraticSurd five = QuadraticSurd::from_int(5, 7);  // rational, D coerces
  QuadraticSurd a = surd(1, 1, 2, 5);
  CHECK((a + five).compare(surd(11, 1, 2, 5)) == 0);
  CHECK_THROWS_AS(add(surd(1, 1, 1, 5), surd(1, 1, 1, 7)), Error);
}

TEST_CASE("construction rejects square or nonpositive radicands") {
  CHECK_THROWS_AS(surd(1, 1, 2, 9), Error);
  CHECK_THROWS_AS(surd(1, 1, 2, 0), Error);
  CHECK_THROWS_AS(surd(1, 1, 2, -5), Error);
  CHECK_THROWS_AS(surd(1, 1, 0, 5), Error);
}

TEST_CASE("to_interval encloses the value (integer-sqrt oracle)") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> coeff(-30, 30), denom(1, 12), rad(2, 80);
  int done = 0;
  while (done < 300) {
    long D = rad(rng);
    mpz_class zD(D);
    if (mpz_perfect_square_p(zD.get_mpz_t())) continue;
    QuadraticSurd s = surd(coeff(rng), coeff(rng), denom(rng), D);

    // oracle bracket of sqrt(D) at 200 fractional bits
    mpz_class scaled = zD << 400, root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = mpz_class(1) << 200;
    mpq_class rlo(root, den), rhi(root + 1, den);

    mpq_class p(s.p()), q(s.q()), r(s.r());
    mpq_class vlo = (p + q * (q >= 0 ? rlo : rhi)) / r;
    mpq_class vhi = (p + q * (q >= 0 ? rhi : rlo)) / r;

    Interval iv = s.to_interval(128);
    CHECK(iv.lo_rational() <= vhi);
    CHECK(iv.hi_rational() >= vlo);
    ++done;
  }
}

TEST_CASE("surd_compare agrees with decisive interval comparisons") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> coeff(-40, 40), denom(1, 10), rad(2, 60), rnum(-60, 60),
      rden(1, 15);
  int done = 0;
  while (done < 500) {
    long D = rad(rng);
    mpz_class zD(D);
    if (mpz_perfect_square_p(zD.get_mpz_t())) continue;
    QuadraticSurd s = surd(coeff(rng), coeff(rng), denom(rng), D);
    mpq_class y(rnum(rng), rden(rng));
    y.canonicalize();

    Ordering exact = surd_compare(s, y);
    Cert by_interval = cert_less(s.to_interval(192), Interval::from_mpq(y, 192));
    if (by_interval == Cert::True) CHECK(exact == Ordering::Less);
    if (by_interval == Cert::False) CHECK(exact != Ordering::Less);
    ++done;
  }
}
