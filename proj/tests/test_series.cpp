#include <catch2/catch_amalgamated.hpp>

#include "glhom/exact.hpp"
#include "glhom/qpoly.hpp"
#include "glhom/series.hpp"

using namespace glhom;

namespace {

/* Deterministic "random-looking" rational with small numerator/denominator:
 * enough variety for round-trip tests without an RNG dependency here. */
Rational wiggle(long n, long salt) {
  const long num = ((n * 37 + salt * 101) % 19) - 9;
  const long den = (n * 13 + salt * 7) % 11 + 1;
  return make_rational(num, den);
}

}  // namespace

TEST_CASE("series construction and arithmetic") {
  TruncatedSeries<Rational> a(6);
  REQUIRE(a.order() == 6);
  REQUIRE(a[3] == 0);
  a.set(0, Rational(1));
  a.set(2, make_rational(1, 2));
  const TruncatedSeries<Rational> one = TruncatedSeries<Rational>::one(6);
  REQUIRE((a + one)[0] == Rational(2));
  REQUIRE((a - a)[2] == 0);
  const TruncatedSeries<Rational> sq = a * a;
  REQUIRE(sq[0] == 1);
  REQUIRE(sq[2] == 1);
  REQUIRE(sq[4] == make_rational(1, 4));
  REQUIRE(sq[5] == 0);
  REQUIRE((a * make_rational(3, 1))[2] == make_rational(3, 2));
}

TEST_CASE("exp and log round trips") {
  const long N = 16;
  for (long salt = 0; salt < 6; ++salt) {
    TruncatedSeries<Rational> a(N);
    for (long n = 1; n <= N; ++n) a.set(n, wiggle(n, salt));
    const TruncatedSeries<Rational> back = series_log(series_exp(a));
    REQUIRE(back == a);

    TruncatedSeries<Rational> b(N);
    b.set(0, Rational(1));
    for (long n = 1; n <= N; ++n) b.set(n, wiggle(n, salt + 100));
    REQUIRE(series_exp(series_log(b)) == b);
  }
  // edge cases
  TruncatedSeries<Rational> zero(8);
  REQUIRE(series_exp(zero) == TruncatedSeries<Rational>::one(8));
  REQUIRE(series_log(TruncatedSeries<Rational>::one(8)) == zero);
  TruncatedSeries<Rational> bad(4);
  bad.set(0, Rational(1));
  REQUIRE_THROWS_AS(series_exp(bad), input_error);
  REQUIRE_THROWS_AS(series_log(zero), input_error);
}

TEST_CASE("exp turns sums into products") {
  const long N = 12;
  TruncatedSeries<Rational> a(N), b(N);
  for (long n = 1; n <= N; ++n) {
    a.set(n, wiggle(n, 3));
    b.set(n, wiggle(n, 8));
  }
  REQUIRE(series_exp(a + b) == series_exp(a) * series_exp(b));
}

TEST_CASE("exp(z + z^2/2) counts involutions") {
  // [z^n] exp(z + z^2/2) = I_n / n! with I_4 = 10, I_8 = 764.
  TruncatedSeries<Rational> a(8);
  a.set(1, Rational(1));
  a.set(2, make_rational(1, 2));
  const TruncatedSeries<Rational> e = series_exp(a);
  Integer fact4(24), fact8(40320);
  REQUIRE(e[4] * Rational(fact4) == Rational(10));
  REQUIRE(e[8] * Rational(fact8) == Rational(764));
}

TEST_CASE("z substitutions") {
  TruncatedSeries<Rational> a(5);
  for (long n = 0; n <= 5; ++n) a.set(n, Rational(n + 1));
  const TruncatedSeries<Rational> spread = spread_z(a, 3, 17);
  REQUIRE(spread.order() == 17);
  REQUIRE(spread[0] == 1);
  REQUIRE(spread[3] == 2);
  REQUIRE(spread[15] == 6);
  REQUIRE(spread[4] == 0);

  const TruncatedSeries<Rational> scaled = scale_z(a, make_rational(1, 2));
  for (long n = 0; n <= 5; ++n)
    REQUIRE(scaled[n] == a[n] * pow_rat(make_rational(1, 2), n));
}

TEST_CASE("series powers") {
  TruncatedSeries<Rational> a(10);
  a.set(0, Rational(1));
  a.set(1, Rational(2));
  a.set(3, make_rational(-1, 3));
  TruncatedSeries<Rational> direct = TruncatedSeries<Rational>::one(10);
  for (int i = 0; i < 5; ++i) direct = direct * a;
  REQUIRE(series_pow(a, 5) == direct);
  REQUIRE(series_pow(a, 0) == TruncatedSeries<Rational>::one(10));
  REQUIRE(series_pow(a, 1) == a);
}

TEST_CASE("polynomial-coefficient series multiply") {
  const QPolynomial q = QPolynomial::variable();
  TruncatedSeries<QPolynomial> a(4), b(4);
  a.set(0, QPolynomial(1));
  a.set(1, q);
  b.set(0, QPolynomial(1));
  b.set(1, -q);
  const TruncatedSeries<QPolynomial> prod = a * b;
  REQUIRE(prod[0] == QPolynomial(1));
  REQUIRE(prod[1].is_zero());
  REQUIRE(prod[2] == -(q * q));
}
