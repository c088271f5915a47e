#pragma once
/*
 * qpoly.hpp -- Laurent polynomials in one variable q over the rationals.
 *
 * Sparse exponent -> coefficient map, negative exponents allowed (the
 * generating-function coefficients carry q^{-binom(n,2)} factors).  No zero
 * coefficient is ever stored, so trailing/leading degrees are well defined
 * for nonzero polynomials.
 *
 * Exact division is division in Q[q, q^{-1}] that must leave no remainder:
 * every division this library performs is one the underlying mathematics
 * guarantees to be exact (Gaussian multinomials, cyclotomic factors, the
 * Q_n = R_n (q-1) / (n (q^n-1)) normalization), so a nonzero remainder is
 * reported as internal_error -- it would falsify a theorem.
 */

#include <map>
#include <string>
#include <utility>

#include "exact.hpp"

namespace glhom {

class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(int c) { set(0, Rational(c)); }  // NOLINT: implicit by design
  QPolynomial(const Integer& c) { set(0, Rational(c)); }  // NOLINT
  QPolynomial(const Rational& c) { set(0, c); }           // NOLINT

  static QPolynomial monomial(const Rational& c, long e) {
    QPolynomial x;
    x.set(e, c);
    return x;
  }
  static QPolynomial variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return t_.empty(); }
  long degree() const {
    check(!t_.empty(), "QPolynomial: degree of zero polynomial");
    return t_.rbegin()->first;
  }
  long trailing_degree() const {
    check(!t_.empty(), "QPolynomial: trailing degree of zero polynomial");
    return t_.begin()->first;
  }
  const std::map<long, Rational>& terms() const { return t_; }

  Rational coefficient(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
  }

  /* All coefficients integers, all exponents >= 0 -- the "lies in Z[q]"
   * predicate asserted wherever the paper claims integrality. */
  bool is_integral() const {
    for (const auto& [e, c] : t_)
      if (e < 0 || c.get_den() != 1) return false;
    return true;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    a += b;
    return a;
  }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) {
    a -= b;
    return a;
  }
  QPolynomial operator-() const {
    QPolynomial r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend QPolynomial operator*(const QPolynomial& a, const Rational& s) {
    QPolynomial r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, c * s);
    return r;
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) {
    return !(a == b);
  }

  QPolynomial pow(unsigned long e) const {
    QPolynomial acc(1), b = *this;
    while (e) {
      if (e & 1) acc *= b;
      if (e >>= 1) b *= b;
    }
    return acc;
  }

  /* Substitution q -> q^k (k >= 1): multiplies every exponent by k. */
  QPolynomial scale_exponents(long k) const {
    require(k >= 1, "scale_exponents: k >= 1 required");
    QPolynomial r;
    for (const auto& [e, c] : t_) r.t_.emplace(e * k, c);
    return r;
  }

  /* Exact division in Q[q, q^{-1}]; throws internal_error on a nonzero
   * remainder.  Both operands are shifted to ordinary polynomials first,
   * then schoolbook division runs top-down. */
  QPolynomial divide_exact(const QPolynomial& den) const {
    require(!den.is_zero(), "divide_exact: division by zero polynomial");
    if (is_zero()) return QPolynomial();
    const long shift = trailing_degree() - den.trailing_degree();
    QPolynomial rem = this->shifted(-trailing_degree());
    QPolynomial d = den.shifted(-den.trailing_degree());
    const long dd = d.degree();
    const Rational lead = d.t_.rbegin()->second;
    QPolynomial quot;
    while (!rem.is_zero() && rem.degree() >= dd) {
      const long e = rem.degree() - dd;
      const Rational c = rem.t_.rbegin()->second / lead;
      quot.add_term(e, c);
      rem -= monomial(c, e) * d;
    }
    check(rem.is_zero(), "divide_exact: division left a remainder");
    return quot.shifted(shift);
  }

  /* Evaluate at a rational point; x != 0 required if any exponent < 0. */
  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (const auto& [e, c] : t_) acc += c * pow_rat(x, e);
    return acc;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.get_str();
      if (!out.empty()) {
        out += (cs[0] == '-') ? " - " : " + ";
        if (cs[0] == '-') cs = cs.substr(1);
      }
      if (e == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  std::map<long, Rational> t_;

  void set(long e, const Rational& c) {
    if (c != 0) t_[e] = c;
  }
  void add_term(long e, const Rational& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (c != 0) t_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
  QPolynomial shifted(long k) const {
    QPolynomial r;
    for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
  }
};

/* d-th cyclotomic polynomial: exact division of q^d - 1 by the product of
 * Phi_e over proper divisors e | d.  d stays tiny here (<= a few dozen). */
inline QPolynomial cyclotomic(long d) {
  require(d >= 1, "cyclotomic: d >= 1 required");
  QPolynomial num = QPolynomial::monomial(Rational(1), d) - QPolynomial(1);
  for (long e = 1; e < d; ++e)
    if (d % e == 0) num = num.divide_exact(cyclotomic(e));
  return num;
}

}  // namespace glhom
