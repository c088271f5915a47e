#include <catch2/catch_amalgamated.hpp>

#include "glhom/exact.hpp"
#include "glhom/qpoly.hpp"

using namespace glhom;

namespace {
QPolynomial q_power_minus_1(long n) {
  return QPolynomial::monomial(Rational(1), n) - QPolynomial(1);
}
}  // namespace

TEST_CASE("polynomial basics") {
  const QPolynomial zero;
  REQUIRE(zero.is_zero());
  const QPolynomial q = QPolynomial::variable();
  REQUIRE(q.degree() == 1);
  REQUIRE(q.trailing_degree() == 1);
  const QPolynomial f = q * q + QPolynomial(3) * q - QPolynomial(2);
  REQUIRE(f.degree() == 2);
  REQUIRE(f.trailing_degree() == 0);
  REQUIRE(f.coefficient(1) == Rational(3));
  REQUIRE(f.coefficient(5) == 0);
  REQUIRE(f.evaluate(Rational(2)) == Rational(8));
  REQUIRE(f.is_integral());
  REQUIRE((f - f).is_zero());
}

TEST_CASE("Laurent support") {
  const QPolynomial f =
      QPolynomial::monomial(make_rational(1, 2), -3) + QPolynomial(1);
  REQUIRE(f.trailing_degree() == -3);
  REQUIRE(f.degree() == 0);
  REQUIRE_FALSE(f.is_integral());
  const QPolynomial g = f * QPolynomial::monomial(Rational(2), 3);
  REQUIRE(g == QPolynomial(1) + QPolynomial::monomial(Rational(2), 3));
  REQUIRE(g.is_integral());
}

TEST_CASE("exponent scaling substitutes q -> q^k") {
  const QPolynomial q = QPolynomial::variable();
  const QPolynomial f = q * q + q + QPolynomial(1);
  const QPolynomial f3 = f.scale_exponents(3);
  REQUIRE(f3.coefficient(6) == 1);
  REQUIRE(f3.coefficient(3) == 1);
  REQUIRE(f3.coefficient(0) == 1);
  REQUIRE(f3.evaluate(Rational(2)) == f.evaluate(Rational(8)));
}

TEST_CASE("exact division") {
  const QPolynomial q = QPolynomial::variable();
  const QPolynomial prod = (q - QPolynomial(1)) * (q + QPolynomial(2));
  REQUIRE(prod.divide_exact(q - QPolynomial(1)) == q + QPolynomial(2));
  REQUIRE_THROWS_AS((q * q + QPolynomial(1)).divide_exact(q - QPolynomial(1)),
                    internal_error);
  // Pochhammer-style quotient: (q^6 - 1) / (q^2 - 1) = q^4 + q^2 + 1
  const QPolynomial quot = q_power_minus_1(6).divide_exact(q_power_minus_1(2));
  REQUIRE(quot.coefficient(4) == 1);
  REQUIRE(quot.coefficient(2) == 1);
  REQUIRE(quot.coefficient(0) == 1);
  REQUIRE(quot.degree() == 4);
}

TEST_CASE("cyclotomic polynomials") {
  const QPolynomial q = QPolynomial::variable();
  REQUIRE(cyclotomic(1) == q - QPolynomial(1));
  REQUIRE(cyclotomic(2) == q + QPolynomial(1));
  REQUIRE(cyclotomic(4) == q * q + QPolynomial(1));
  REQUIRE(cyclotomic(6) == q * q - q + QPolynomial(1));
  const QPolynomial phi12 = cyclotomic(12);
  REQUIRE(phi12.degree() == 4);  // deg = euler_phi(12)
  REQUIRE(phi12 == QPolynomial::monomial(Rational(1), 4) -
                       QPolynomial::monomial(Rational(1), 2) +
                       QPolynomial(1));
  // product over d | n of Phi_d(q) = q^n - 1
  for (long n = 1; n <= 12; ++n) {
    QPolynomial prod(1);
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    REQUIRE(prod == q_power_minus_1(n));
  }
}

TEST_CASE("string rendering is stable") {
  const QPolynomial q = QPolynomial::variable();
  const QPolynomial f = q * q - QPolynomial(1);
  REQUIRE(f.str() == (q * q - QPolynomial(1)).str());
  REQUIRE_FALSE(f.str().empty());
  REQUIRE(QPolynomial().str() == "0");
}
