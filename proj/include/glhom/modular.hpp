#pragma once
/*
 * modular.hpp -- characteristic p: counting matrices with B^k = 0 and the
 * translation to #Hom(C_{p^u}, GL_n(F_{p^v})).
 *
 * a_{n,k}(q) = #{B in F_q^{n x n} : B^k = 0}, an exact polynomial in q,
 * computed by two independent routes:
 *
 * (1) partition sum over Jordan types lambda |- n with parts <= k, using
 *     the class-size polynomial (a_j = multiplicity of part j)
 *       c(lambda) = (-1)^{n - sum_j a_j} q^{beta(lambda)}
 *                     (q;q)_n / prod_j (q;q)_{a_j}
 *       beta(lambda) = binom(n,2) + sum_j binom(a_j+1, 2)
 *                      - sum_{j=1..n} (a_j + a_{j+1} + ... + a_n)^2
 *     (the Pochhammer ratio is a Gaussian multinomial times a Pochhammer,
 *     so division is exact; trailing degree = beta(lambda));
 *
 * (2) the removal recurrence
 *       a_{n,k} = q^{n^2-n} - sum_{m=k+1..n} sum_{l=1..floor(n/m)}
 *                 (-1)^{l(m-1)} [(q;q)_n / ((q;q)_{n-lm} (q;q)_l)]
 *                 q^{f(l,m,n)} a_{n-lm, m-1}
 *     with f(l,m,n) = l (n - lm) (m - 2) + binom(l(m-1), 2).
 *     The source prints the first summand as l*n*(m-2); that form already
 *     fails at a_{3,2} (= q^4 + q^3 - q by the partition sum), while the
 *     corrected exponent follows from the class-size ratio beta(lambda) -
 *     beta(mu) for the block-removal bijection.  The two routes agreeing
 *     identically is one of the advertised checks.
 *
 * Valuation law: v_q(a_{n,k}) = trailing degree >= (k-1)/(k+1) binom(n,2),
 * with equality whenever n = 0,1 mod (k+1).  Since #Hom(C_{p^u},
 * GL_n(F_{p^v})) = a_{n,p^u}(p^v) (A -> A - I is a bijection because
 * A^{p^u} - I = (A - I)^{p^u} in characteristic p), this gives the p-adic
 * law with an extra factor v.
 *
 * Define GLHOM_DIVCHECK to cross-check every exact polynomial division
 * numerically at q = 2 (debug aid; off by default).
 */

#include <mutex>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "qpoly.hpp"

namespace glhom {

struct Partition {
  long long n = 0;                // weight
  std::vector<long long> mult;    // mult[i-1] = number of parts equal to i

  long long largest_part() const {
    for (size_t i = mult.size(); i-- > 0;)
      if (mult[i] > 0) return static_cast<long long>(i + 1);
    return 0;
  }
  long long part_count() const {
    long long acc = 0;
    for (long long a : mult) acc += a;
    return acc;
  }
  std::vector<long long> parts() const {  // decreasing
    std::vector<long long> out;
    for (size_t i = mult.size(); i-- > 0;)
      for (long long c = 0; c < mult[i]; ++c)
        out.push_back(static_cast<long long>(i + 1));
    return out;
  }
};

/* All partitions of n with parts <= max_part, each exactly once. */
inline std::vector<Partition> partitions(long long n, long long max_part) {
  require(n >= 0, "partitions: n >= 0 required");
  require(max_part >= 0, "partitions: max_part >= 0 required");
  std::vector<Partition> out;
  Partition cur;
  cur.n = n;
  cur.mult.assign(static_cast<size_t>(n), 0);
  // Recursive descent: place parts of size `sz` (largest first).
  auto rec = [&](auto&& self, long long rem, long long sz) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (sz <= 0) return;
    const long long most = rem / sz;
    for (long long c = most; c >= 0; --c) {
      cur.mult[static_cast<size_t>(sz - 1)] = c;
      self(self, rem - c * sz, sz - 1);
    }
    cur.mult[static_cast<size_t>(sz - 1)] = 0;
  };
  rec(rec, n, std::min(n, max_part));
  return out;
}

/* beta(lambda): the trailing q-degree of the class-size polynomial. */
inline long long beta_stat(const Partition& lam) {
  const long long n = lam.n;
  long long acc = choose2(n);
  for (long long a : lam.mult) acc += choose2(a + 1);
  long long suffix = 0;
  for (size_t i = lam.mult.size(); i-- > 0;) {
    suffix += lam.mult[i];
    acc -= suffix * suffix;
  }
  return acc;
}

namespace detail {

/* (q;q)_0 .. (q;q)_n as polynomials, one incremental pass. */
inline std::vector<QPolynomial> poch_family(long long n) {
  std::vector<QPolynomial> out;
  out.reserve(static_cast<size_t>(n) + 1);
  out.emplace_back(1);
  for (long long i = 1; i <= n; ++i)
    out.push_back(out.back() *
                  (QPolynomial(1) - QPolynomial::monomial(Rational(1), i)));
  return out;
}

inline void divcheck(const QPolynomial& quot, const QPolynomial& num,
                     const QPolynomial& den) {
#ifdef GLHOM_DIVCHECK
  check(quot.evaluate(2) * den.evaluate(2) == num.evaluate(2),
        "divcheck: exact division contradicted at q = 2");
#else
  (void)quot;
  (void)num;
  (void)den;
#endif
}

}  // namespace detail

/* Conjugacy-class size of the nilpotent with Jordan type lambda, as an
 * exact polynomial; trailing degree = beta(lambda) is asserted.  The
 * Pochhammer ratio is peeled one (1 - q^i) binomial at a time: dividing by
 * a binomial is linear in the dividend, so the whole ratio costs
 * O(n * deg) instead of the dense-divisor schoolbook price. */
inline QPolynomial class_size(const Partition& lam) {
  const long long n = lam.n;
  QPolynomial acc(1);
  for (long long i = 1; i <= n; ++i)
    acc = acc * (QPolynomial(1) - QPolynomial::monomial(Rational(1), i));
  for (long long a : lam.mult)
    for (long long i = 1; i <= a; ++i) {
      const QPolynomial den =
          QPolynomial(1) - QPolynomial::monomial(Rational(1), i);
      QPolynomial quot = acc.divide_exact(den);
      detail::divcheck(quot, acc, den);
      acc = std::move(quot);
    }
  const long long sign_exp = n - lam.part_count();
  const Rational sign(sign_exp % 2 == 0 ? 1 : -1);
  acc = acc * QPolynomial::monomial(sign, beta_stat(lam));
  check(n == 0 || acc.trailing_degree() == beta_stat(lam),
        "class_size: trailing degree != beta(lambda)");
  return acc;
}

/* Route (1): partition sum. */
inline QPolynomial a_nk_partition(long long n, long long k) {
  require(n >= 0 && k >= 0, "a_nk: n, k >= 0 required");
  QPolynomial acc;
  for (const Partition& lam : partitions(n, k)) acc += class_size(lam);
  return acc;
}

/* Route (2): removal recurrence, memoized over (n, min(k,n)).  The memo is
 * an idempotent cache: concurrent fills may recompute, results agree. */
inline QPolynomial a_nk_recurrence(long long n, long long k) {
  require(n >= 0 && k >= 0, "a_nk: n, k >= 0 required");
  if (n == 0) return QPolynomial(1);
  if (k == 0) return QPolynomial();
  if (k > n) k = n;  // B^n = 0 already forces nilpotency

  static std::mutex memo_mutex;
  static std::map<std::pair<long long, long long>, QPolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }

  const std::vector<QPolynomial> poch = detail::poch_family(n);
  QPolynomial acc = QPolynomial::monomial(Rational(1), n * n - n);
  for (long long m = k + 1; m <= n; ++m) {
    for (long long l = 1; l * m <= n; ++l) {
      // (q;q)_n / ((q;q)_{n-lm} (q;q)_l), peeled binomial by binomial.
      QPolynomial ratio = poch[static_cast<size_t>(n)];
      for (long long part : {n - l * m, l})
        for (long long i = 1; i <= part; ++i) {
          const QPolynomial den =
              QPolynomial(1) - QPolynomial::monomial(Rational(1), i);
          QPolynomial quot = ratio.divide_exact(den);
          detail::divcheck(quot, ratio, den);
          ratio = std::move(quot);
        }
      const long long f = l * (n - l * m) * (m - 2) + choose2(l * (m - 1));
      const Rational sign((l * (m - 1)) % 2 == 0 ? 1 : -1);
      acc -= ratio * QPolynomial::monomial(sign, f) *
             a_nk_recurrence(n - l * m, m - 1);
    }
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::make_pair(n, k), std::move(acc))
      .first->second;
}

struct ModularBound {
  long long trailing = 0;       // v_q(a_{n,k})
  Rational bound;               // (k-1)/(k+1) * binom(n,2)
  bool congruence_point = false;  // n = 0,1 mod (k+1)
  bool bound_holds = false;
  bool equality = false;
};

/* Theorem check at one (n, k): trailing degree vs the quadratic bound. */
inline ModularBound modular_bound(long long n, long long k) {
  require(n >= 0, "modular_bound: n >= 0 required");
  require(k >= 1, "modular_bound: k >= 1 required");
  ModularBound rep;
  const QPolynomial a = a_nk_partition(n, k);
  check(!a.is_zero(), "modular_bound: a_{n,k} vanished");
  rep.trailing = a.trailing_degree();
  rep.bound = make_rational(Integer(static_cast<long>((k - 1) * choose2(n))),
                            Integer(static_cast<long>(k + 1)));
  rep.congruence_point = (n % (k + 1) == 0) || (n % (k + 1) == 1);
  const Rational trailing(static_cast<long>(rep.trailing));
  rep.bound_holds = trailing >= rep.bound;
  rep.equality = trailing == rep.bound;
  check(rep.bound_holds, "modular_bound: quadratic valuation bound violated");
  if (rep.congruence_point)
    check(rep.equality, "modular_bound: no equality at a congruence point");
  return rep;
}

struct ModularHom {
  Integer count;
  long long vp = 0;       // w.r.t. p
  Rational bound;         // v (p^u - 1)/(p^u + 1) binom(n,2)
  bool congruence_point = false;  // n = 0,1 mod (p^u + 1)
  bool equality = false;
};

/* #Hom(C_{p^u}, GL_n(F_{p^v})) = a_{n,p^u}(p^v). */
inline ModularHom modular_hom(unsigned long p, long u, long v, long long n) {
  require(is_prime(p), "modular_hom: p must be prime");
  require(u >= 1 && v >= 1, "modular_hom: u, v >= 1 required");
  require(n >= 0, "modular_hom: n >= 0 required");
  const Integer pu = pow_int(Integer(static_cast<long>(p)),
                             static_cast<unsigned long>(u));
  check(pu.fits_slong_p(), "modular_hom: p^u overflow");
  const long long k = pu.get_si();
  const QPolynomial a = a_nk_partition(n, k);
  const Rational qv(pow_int(Integer(static_cast<long>(p)),
                            static_cast<unsigned long>(v)));

  ModularHom rep;
  const Rational value = a.evaluate(qv);
  check(value.get_den() == 1 && value > 0,
        "modular_hom: count not a positive integer");
  rep.count = Integer(value.get_num());
  rep.vp = vp(rep.count, p).finite();
  rep.bound = make_rational(Integer(v) * (pu - 1) *
                                static_cast<long>(choose2(n)),
                            pu + 1);
  rep.congruence_point = (n % (k + 1) == 0) || (n % (k + 1) == 1);
  const Rational vp_rat(static_cast<long>(rep.vp));
  rep.equality = vp_rat == rep.bound;
  check(vp_rat >= rep.bound,
        "modular_hom: p-adic valuation bound violated");
  if (rep.congruence_point)
    check(rep.equality, "modular_hom: no equality at a congruence point");
  return rep;
}

}  // namespace glhom
