#include <doctest.h>

#include <random>

#include "pillai/interval.hpp"

using namespace pillai;

namespace {

// Exact rational bracket for sqrt(n): s = isqrt(n * 4^k) gives
// s/2^k <= sqrt(n) < (s+1)/2^k.
std::pair<mpq_class, mpq_class> sqrt_bracket(unsigned long n, unsigned long k) {
  mpz_class scaled = mpz_class(n) << (2 * k);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den = mpz_class(1) << k;
  return {mpq_class(s, den), mpq_class(s + 1, den)};
}

// Exact rational bracket for log 2 = 2 atanh(1/3): partial sum plus a
// geometric tail bound.
std::pair<mpq_class, mpq_class> log2_bracket(unsigned terms) {
  mpq_class sum = 0;
  mpq_class z2(1, 9);
  mpq_class pow(1, 3);  // (1/3)^(2k+1)
  for (unsigned k = 0; k < terms; ++k) {
    sum += pow / (2 * k + 1);
    pow *= z2;
  }
  mpq_class tail = pow / (2 * terms + 1) * mpq_class(9, 8);  // 1/(1-z^2) = 9/8
  return {2 * sum, 2 * (sum + tail)};
}

// Exact rational bracket for e^2 via the Taylor series.
std::pair<mpq_class, mpq_class> exp2_bracket(unsigned terms) {
  mpq_class sum = 0, term = 1;
  for (unsigned k = 0; k < terms; ++k) {
    sum += term;
    term *= 2;
    term /= (k + 1);
  }
  // tail < term * (1 + 2/(K+2) + (2/(K+2))^2 + ...) <= 2*term for K >= 2
  return {sum, sum + 2 * term};
}

}  // namespace

TEST_CASE("log(1) is a tight zero enclosure") {
  Interval one = Interval::from_long(1, 64);
  Interval l = log(one);
  CHECK(l.contains(mpq_class(0)));
  CHECK(l.width_d() < std::ldexp(1.0, -60));
}

TEST_CASE("sqrt(5) encloses the true value (integer-sqrt oracle)") {
  auto [lo, hi] = sqrt_bracket(5, 300);
  Interval s = sqrt(Interval::from_long(5, 128));
  // the oracle bracket is far tighter than the enclosure can miss by
  CHECK(mpq_class(s.lo_rational()) <= hi);
  CHECK(mpq_class(s.hi_rational()) >= lo);
  // and endpoint squares bracket 5 exactly
  CHECK(s.lo_rational() * s.lo_rational() <= 5);
  CHECK(s.hi_rational() * s.hi_rational() >= 5);
}

TEST_CASE("certify: log 2 < 1, e^2 vs 7.389, x < x") {
  CHECK(certify_less([](mpfr_prec_t p) { return log(Interval::from_long(2, p)); },
                     constant(1)) == Cert::True);

  // oracle first: the exact series shows e^2 > 7.389
  auto [lo, hi] = exp2_bracket(40);
  REQUIRE(lo > parse_decimal("7.389"));
  CHECK(certify_less([](mpfr_prec_t p) { return exp(Interval::from_long(2, p)); },
                     constant("7.389")) == Cert::False);

  IvExpr x = constant("1.25");
  CHECK(certify_less(x, x) == Cert::False);
}

TEST_CASE("log 2 enclosure overlaps the exact series bracket") {
  auto [lo, hi] = log2_bracket(120);
  Interval l = log(Interval::from_long(2, 128));
  CHECK(l.lo_rational() <= hi);
  CHECK(l.hi_rational() >= lo);
}

TEST_CASE("containment: exact rational arithmetic lies inside interval arithmetic") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20), op(0, 3);

  int done = 0;
  while (done < 1000) {
    mpq_class x(num(rng), den(rng));
    mpq_class y(num(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    int o = op(rng);
    if (o == 3 && y == 0) continue;
    mpq_class exact;
    double prev_width = -1;
    for (mpfr_prec_t p : {64, 128, 256}) {
      Interval xi = Interval::from_mpq(x, p), yi = Interval::from_mpq(y, p);
      Interval r(p);
      switch (o) {
        case 0: exact = x + y; r = add(xi, yi); break;
        case 1: exact = x - y; r = sub(xi, yi); break;
        case 2: exact = x * y; r = mul(xi, yi); break;
        default: exact = x / y; r = div(xi, yi); break;
      }
      CHECK(r.contains(exact));
      // refinement never widens the same expression
      if (prev_width >= 0) CHECK(r.width_d() <= prev_width);
      prev_width = r.width_d();
    }
    ++done;
  }
}

TEST_CASE("monotone refinement: widths shrink with precision") {
  auto expr = [](mpfr_prec_t p) {
    Interval two = Interval::from_long(2, p);
    return add(mul(log(two), sqrt(Interval::from_long(5, p))),
               div(exp(Interval::from_long(1, p)), Interval::from_long(7, p)));
  };
  double prev = expr(64).width_d();
  for (mpfr_prec_t p : {128, 256, 512, 1024}) {
    double w = expr(p).width_d();
    CHECK(w <= prev);
    prev = w;
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log(Interval::from_long(0)), Error);
  CHECK_THROWS_AS(log(sub(Interval::from_long(1), Interval::from_long(2))), Error);
  CHECK_THROWS_AS(sqrt(Interval::from_long(-4)), Error);
  try {
    log(Interval::from_long(-1));
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DomainError);
  }
}

TEST_CASE("division by a zero-straddling interval degrades to the whole line") {
  Interval z = sub(Interval::from_long(1), Interval::from_long(1));  // [0,0] exact
  Interval r = div(Interval::from_long(1), Interval::span("-0.25", "0.5"));
  CHECK(!r.finite());
  CHECK_THROWS_AS(div(Interval::from_long(1), z), Error);
}

TEST_CASE("integer powers handle signs and straddles") {
  Interval m2 = Interval::from_long(-2);
  CHECK(pow_i(m2, 3).contains(mpq_class(-8)));
  CHECK(pow_i(m2, 3).is_point());
  CHECK(pow_i(m2, 2).contains(mpq_class(4)));
  CHECK(pow_i(m2, 0).contains(mpq_class(1)));

  Interval straddle = Interval::span("-0.5", "0.25");
  Interval even = pow_i(straddle, 2);
  CHECK(even.contains(mpq_class(0)));
  CHECK(even.contains(mpq_class(1, 4)));
  CHECK(!even.contains(mpq_class(-1, 100)));
  Interval odd = pow_i(straddle, 3);
  CHECK(odd.contains(mpq_class(-1, 8)));
  CHECK(odd.contains(mpq_class(1, 64)));

  CHECK(pow_i(Interval::from_decimal("0.25"), 2).contains(mpq_class(1, 16)));
  CHECK(pow_i(Interval::from_long(3), -2).contains(mpq_class(1, 9)));
}

TEST_CASE("from_decimal is exact") {
  Interval c = Interval::from_decimal("27.62");
  CHECK(c.contains(mpq_class(1381, 50)));
  CHECK(c.width_d() < 1e-30);
  CHECK(parse_decimal("-3.5e2") == mpq_class(-350));
  CHECK(parse_decimal("1.25e-2") == mpq_class(1, 80));
  CHECK_THROWS_AS(parse_decimal("1..2"), Error);
}

TEST_CASE("golden ratio compares greater than 3/2 through intervals") {
  auto phi = [](mpfr_prec_t p) {
    return div(add(Interval::from_long(1, p), sqrt(Interval::from_long(5, p))),
               Interval::from_long(2, p));
  };
  CHECK(certify_less(constant("1.5"), phi) == Cert::True);
}
