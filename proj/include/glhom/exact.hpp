#pragma once
/*
 * exact.hpp -- exact arithmetic kernel.
 *
 * Arbitrary-precision integers/rationals (GMP), p-adic valuations with the
 * +infinity convention at 0, and the small number-theory helpers the rest of
 * the library leans on: Legendre's v_p(n!), Moebius mu, digit sums,
 * multiplicative orders, and the q-Pochhammer product (q;q)_n over any
 * coefficient ring.
 *
 * Conventions:
 *   - v_p(0) = +infinity, so v(xy) = v(x)+v(y) and v(x+y) >= min(v(x),v(y))
 *     hold with no special cases; series coefficient scans need no branching.
 *   - Q_p is never represented.  Every "lies in Z_p" claim downstream is
 *     checked as "v_p(coefficient) >= 0" on exact rationals.
 *   - input_error  = the caller handed us bad data (CLI exit code 2).
 *     internal_error = a mathematical invariant this library vouches for
 *     failed, i.e. a bug or a falsified theorem (never the caller's fault).
 */

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace glhom {

using Integer = mpz_class;
using Rational = mpq_class;

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Caller-facing precondition.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

// Library-facing invariant; failing means a bug or a falsified theorem.
inline void check(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

/* mpq_class(n, d) does not canonicalize; funnel all raw constructions
 * through here so the den > 0, gcd = 1 invariant always holds. */
inline Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, "make_rational: zero denominator");
  Rational x(num, den);
  x.canonicalize();
  return x;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/* An element of Z united with +infinity.  +infinity arises exactly as the
 * valuation of 0; it absorbs under + and compares greater than everything. */
class Valuation {
 public:
  Valuation() : inf_(false), v_(0) {}
  Valuation(long long v) : inf_(false), v_(v) {}  // NOLINT: implicit by design
  static Valuation infinity() {
    Valuation x;
    x.inf_ = true;
    return x;
  }

  bool is_infinite() const { return inf_; }
  long long finite() const {
    check(!inf_, "Valuation: finite() on +infinity");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) {
    return !(a == b);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>=(const Valuation& a, const Valuation& b) {
    return !(a < b);
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) {
    return a < b || a == b;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) {
    return b < a;
  }

  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinity();
    return Valuation(v_ + o.v_);
  }

  std::string str() const { return inf_ ? "+inf" : std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return os << v.str();
  }

 private:
  bool inf_;
  long long v_;
};

inline Valuation vmin(const Valuation& a, const Valuation& b) {
  return a < b ? a : b;
}

/* Deterministic trial division; inputs are small primes throughout. */
inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline unsigned long smallest_prime_factor(unsigned long n) {
  require(n >= 2, "smallest_prime_factor: n >= 2 required");
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

/* q = p^e with p prime, e >= 1?  Returns true and fills (p, e). */
inline bool prime_power_split(unsigned long q, unsigned long& p,
                              unsigned& e) {
  if (q < 2) return false;
  p = smallest_prime_factor(q);
  e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1;
}

inline Valuation vp(const Integer& x, unsigned long p) {
  require(is_prime(p), "vp: p must be prime");
  if (x == 0) return Valuation::infinity();
  Integer junk, pz(static_cast<unsigned long>(p));
  return Valuation(static_cast<long long>(
      mpz_remove(junk.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t())));
}

inline Valuation vp(const Rational& x, unsigned long p) {
  if (x == 0) return Valuation::infinity();
  // Canonical form: exactly one of num/den carries the p-part.
  return Valuation(vp(Integer(x.get_num()), p).finite() -
                   vp(Integer(x.get_den()), p).finite());
}

/* Legendre: v_p(n!) = sum_{i>=1} floor(n/p^i). */
inline long long vp_factorial(long long n, unsigned long p) {
  require(is_prime(p), "vp_factorial: p must be prime");
  require(n >= 0, "vp_factorial: n >= 0 required");
  long long acc = 0;
  while (n > 0) {
    n /= static_cast<long long>(p);
    acc += n;
  }
  return acc;
}

inline long long digit_sum(long long n, unsigned long base) {
  require(base >= 2, "digit_sum: base >= 2 required");
  require(n >= 0, "digit_sum: n >= 0 required");
  long long acc = 0;
  while (n > 0) {
    acc += n % static_cast<long long>(base);
    n /= static_cast<long long>(base);
  }
  return acc;
}

inline int moebius(unsigned long n) {
  require(n >= 1, "moebius: n >= 1 required");
  int parity = 1;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;  // square factor
      parity = -parity;
    }
  }
  if (n > 1) parity = -parity;
  return parity;
}

/* Multiplicative order of q modulo p (p prime, p does not divide q). */
inline unsigned long mult_order(const Integer& q, unsigned long p) {
  require(is_prime(p), "mult_order: p must be prime");
  Integer a = q % static_cast<long>(p);
  if (a < 0) a += static_cast<long>(p);
  require(a != 0, "mult_order: p divides q");
  Integer x = a;
  unsigned long d = 1;
  while (x != 1) {
    x = (x * a) % static_cast<long>(p);
    ++d;
    check(d <= p, "mult_order: order exceeded p (p not prime?)");
  }
  return d;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/* base^e for rational base; negative e allowed when base != 0. */
inline Rational pow_rat(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  require(base != 0 || e > 0, "pow_rat: negative power of zero");
  Rational b = base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) acc = 1 / acc;
  return acc;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/* n(n-1)/2, the exponent binom(n,2) that shows up everywhere. */
inline long long choose2(long long n) {
  require(n >= 0, "choose2: n >= 0 required");
  return n * (n - 1) / 2;
}

/* v_p(q^n - 1) for p prime not dividing q, via Lemma-style case split:
 * 0 when d does not divide n (d = ord of q mod p), else
 * lambda_{v_p(n)} = v_p(q^{d p^{v_p(n)}} - 1).  Never forms q^n itself,
 * so n may be large.  n = 0 gives v_p(0) = +infinity. */
inline Valuation vp_q_power_minus_1(unsigned long p, const Integer& q,
                                    long long n) {
  require(is_prime(p), "vp_q_power_minus_1: p must be prime");
  require(q >= 2, "vp_q_power_minus_1: q >= 2 required");
  require(q % static_cast<long>(p) != 0, "vp_q_power_minus_1: p divides q");
  require(n >= 0, "vp_q_power_minus_1: n >= 0 required");
  if (n == 0) return Valuation::infinity();
  const unsigned long d = mult_order(q, p);
  if (n % static_cast<long long>(d) != 0) return Valuation(0);
  long long j = n / static_cast<long long>(d);
  unsigned long pe = 1;  // p^{v_p(n/d * d)} restricted to the j-part
  while (j % static_cast<long long>(p) == 0) {
    j /= static_cast<long long>(p);
    pe *= p;
  }
  Integer qq = pow_int(q, d * pe);
  return vp(Integer(qq - 1), p);
}

/* (x; x)_n = prod_{i=1..n} (1 - x^i); empty product is 1.
 * Works over any commutative ring type with R(int), *, -. */
template <class R>
R q_pochhammer(long long n, const R& x) {
  require(n >= 0, "q_pochhammer: n >= 0 required");
  R acc(1);
  R pw(1);
  for (long long i = 1; i <= n; ++i) {
    pw = pw * x;
    acc = acc * (R(1) - pw);
  }
  return acc;
}

/* Harmonic-type sum used by Appendix-C checks: sum_{i=1..d} 1/(2i-1). */
inline Rational odd_harmonic(long long d) {
  require(d >= 1, "odd_harmonic: d >= 1 required");
  Rational acc(0);
  for (long long i = 1; i <= d; ++i) acc += make_rational(1, 2 * i - 1);
  return acc;
}

}  // namespace glhom
