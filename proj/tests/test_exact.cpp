#include <catch2/catch_amalgamated.hpp>

#include "glhom/exact.hpp"

using namespace glhom;

TEST_CASE("valuation ordering and arithmetic") {
  const Valuation inf = Valuation::infinity();
  REQUIRE(inf.is_infinite());
  REQUIRE(Valuation(3) < inf);
  REQUIRE(inf == Valuation::infinity());
  REQUIRE(Valuation(-2) < Valuation(0));
  REQUIRE((Valuation(2) + Valuation(3)) == Valuation(5));
  REQUIRE((Valuation(2) + inf).is_infinite());
  REQUIRE(vmin(Valuation(4), Valuation(-1)) == Valuation(-1));
  REQUIRE(vmin(inf, Valuation(7)) == Valuation(7));
  REQUIRE(Valuation(5).str() == "5");
  REQUIRE(inf.str() == "+inf");
}

TEST_CASE("p-adic valuation of integers and rationals") {
  REQUIRE(vp(Integer(8), 2) == Valuation(3));
  REQUIRE(vp(Integer(0), 2).is_infinite());
  REQUIRE(vp(Integer(-24), 2) == Valuation(3));
  REQUIRE(vp(Integer(-24), 3) == Valuation(1));
  REQUIRE(vp(make_rational(4, 3), 2) == Valuation(2));
  REQUIRE(vp(make_rational(3, 4), 2) == Valuation(-2));
  REQUIRE(vp(Rational(0), 5).is_infinite());

  // multiplicativity on a small deterministic grid
  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b <= 40; ++b) {
      REQUIRE(vp(Integer(a * b), 2) ==
              vp(Integer(a), 2) + vp(Integer(b), 2));
      REQUIRE(vp(make_rational(a, b), 3) ==
              Valuation(vp(Integer(a), 3).finite() -
                        vp(Integer(b), 3).finite()));
    }
}

TEST_CASE("factorial valuation agrees with Legendre's formula") {
  REQUIRE(vp_factorial(4, 2) == 3);
  REQUIRE(vp_factorial(10, 3) == 4);
  REQUIRE(vp_factorial(0, 5) == 0);
  for (const unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
    Integer fact(1);
    for (long n = 1; n <= 60; ++n) {
      fact *= n;
      REQUIRE(vp(fact, p) == Valuation(vp_factorial(n, p)));
      // Legendre: v_p(n!) = (n - s_p(n)) / (p - 1)
      REQUIRE(vp_factorial(n, p) ==
              (n - digit_sum(n, p)) / static_cast<long long>(p - 1));
    }
  }
}

TEST_CASE("digit sums") {
  REQUIRE(digit_sum(0, 2) == 0);
  REQUIRE(digit_sum(7, 2) == 3);
  REQUIRE(digit_sum(8, 2) == 1);
  REQUIRE(digit_sum(255, 16) == 30);
  REQUIRE(digit_sum(100, 10) == 1);
}

TEST_CASE("moebius function") {
  REQUIRE(moebius(1) == 1);
  REQUIRE(moebius(2) == -1);
  REQUIRE(moebius(6) == 1);
  REQUIRE(moebius(12) == 0);
  REQUIRE(moebius(30) == -1);
  REQUIRE(moebius(49) == 0);
  // sum_{d | n} mu(d) = [n == 1]
  for (unsigned long n = 1; n <= 200; ++n) {
    int sum = 0;
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) sum += moebius(d);
    REQUIRE(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("primality and prime power decomposition") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(97));
  REQUIRE_FALSE(is_prime(1));
  REQUIRE_FALSE(is_prime(91));  // 7 * 13
  unsigned long p = 0;
  unsigned e = 0;
  REQUIRE(prime_power_split(8, p, e));
  REQUIRE(p == 2);
  REQUIRE(e == 3);
  REQUIRE(prime_power_split(163, p, e));
  REQUIRE(p == 163);
  REQUIRE(e == 1);
  REQUIRE_FALSE(prime_power_split(12, p, e));
  REQUIRE_FALSE(prime_power_split(1, p, e));
}

TEST_CASE("multiplicative order") {
  REQUIRE(mult_order(Integer(3), 2) == 1);
  REQUIRE(mult_order(Integer(2), 3) == 2);
  REQUIRE(mult_order(Integer(3), 7) == 6);
  REQUIRE(mult_order(Integer(17), 3) == 2);
  REQUIRE(mult_order(Integer(163), 3) == 1);
  // d | p - 1 and q^d = 1 mod p, q^j != 1 for 0 < j < d
  for (const unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL})
    for (long q = 2; q <= 30; ++q) {
      if (q % static_cast<long>(p) == 0) continue;
      const unsigned long d = mult_order(Integer(q), p);
      REQUIRE((p - 1) % d == 0);
      REQUIRE(pow_int(Integer(q), d) % static_cast<long>(p) == 1);
      for (unsigned long j = 1; j < d; ++j)
        REQUIRE(pow_int(Integer(q), j) % static_cast<long>(p) != 1);
    }
}

TEST_CASE("binomials and powers") {
  REQUIRE(binomial(4, 2) == 6);
  REQUIRE(binomial(7, 0) == 1);
  REQUIRE(binomial(3, 5) == 0);
  REQUIRE(binomial(40, 20) == Integer("137846528820"));
  REQUIRE(choose2(0) == 0);
  REQUIRE(choose2(1) == 0);
  REQUIRE(choose2(5) == 10);
  REQUIRE(pow_int(Integer(3), 4) == 81);
  REQUIRE(pow_int(Integer(2), 0) == 1);
  REQUIRE(pow_rat(Rational(2), -3) == make_rational(1, 8));
  REQUIRE(pow_rat(make_rational(2, 3), 2) == make_rational(4, 9));
}

TEST_CASE("rational canonicalization") {
  REQUIRE(make_rational(2, -4) == make_rational(-1, 2));
  REQUIRE(make_rational(2, -4).get_den() == 2);
  REQUIRE(make_rational(0, 7) == 0);
  REQUIRE_THROWS_AS(make_rational(1, 0), input_error);
}

TEST_CASE("q-Pochhammer and q^n - 1 valuations") {
  REQUIRE(q_pochhammer<Rational>(2, Rational(3)) == Rational(16));
  REQUIRE(q_pochhammer<Rational>(0, Rational(5)) == Rational(1));
  // vp_q_power_minus_1(p, q, n) = v_p(q^n - 1), checked directly
  for (const unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL})
    for (long q = 2; q <= 29; ++q) {
      if (q % static_cast<long>(p) == 0) continue;
      for (unsigned long n = 1; n <= 12; ++n) {
        const Integer direct = pow_int(Integer(q), n) - 1;
        REQUIRE(vp_q_power_minus_1(p, Integer(q),
                                   static_cast<long long>(n)) ==
                vp(direct, p));
      }
    }
}

TEST_CASE("odd harmonic sums") {
  REQUIRE(odd_harmonic(1) == 1);
  REQUIRE(odd_harmonic(2) == make_rational(4, 3));
  REQUIRE(odd_harmonic(3) == make_rational(23, 15));
  REQUIRE_THROWS_AS(odd_harmonic(0), input_error);
}

TEST_CASE("error types carry messages") {
  try {
    require(false, "bad input here");
    FAIL("require did not throw");
  } catch (const input_error& e) {
    REQUIRE(std::string(e.what()).find("bad input here") !=
            std::string::npos);
  }
  try {
    check(false, "broken invariant here");
    FAIL("check did not throw");
  } catch (const internal_error& e) {
    REQUIRE(std::string(e.what()).find("broken invariant here") !=
            std::string::npos);
  }
}
