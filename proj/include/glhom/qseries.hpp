#pragma once
/*
 * qseries.hpp -- the named series of the theory and the polynomial families
 * attached to them.
 *
 *   f(q,z) = sum_{n>=0} (-1)^n z^n / (q^{binom(n,2)} (q;q)_n)
 *   h(q,z) = log f(q,z)
 *   g(q,z) = f(q,qz)/f(q,z) = 1 + sum_{n>=1} (-1)^{n-1} q^{-binom(n,2)}
 *                                             C_{n-1}(q) z^n
 * with C_n(q) the Carlitz-Riordan q-Catalan numbers,
 *   C_0 = 1,  C_{n+1} = sum_{m=0..n} q^{(n-m)(m+1)} C_m C_{n-m}.
 *
 * From log g:  P_n(q) = (-1)^{n-1} n q^{binom(n,2)} [z^n] log g, an integer
 * polynomial of degree binom(n,2); then
 *   R_n = sum_{d|n} (-1)^{n-d} mu(n/d) q^{binom(n,2) - (n/d)binom(d,2)}
 *                                             P_d(q^{n/d})
 *   Q_n = R_n (q-1) / (n (q^n-1)) = R_n / (n (1+q+...+q^{n-1}))
 * where the division is exact in Z[q] (that exactness is itself one of the
 * verified claims: a nonzero remainder throws internal_error).
 *
 * P_n is computed over Laurent polynomials in q, never from f with symbolic
 * q (that would need rational-function coefficients); numeric h_series at
 * sample q cross-checks it.
 *
 * dwork_check evaluates the integrality criterion for exp(a): it reports
 * min_n v_p([z^n](p a(z) - a(z^p))) and whether that minimum is >= 1.  The
 * source lemma prints the threshold as >= 0, but a = z already shows >= 0
 * is too weak (p z - z^p has integer coefficients while exp z is not
 * p-integral); the correct Dieudonne-Dwork criterion is membership in
 * p Z_p[[z]].  Both verdicts are reported so the discrepancy stays visible.
 */

#include <vector>

#include "exact.hpp"
#include "qpoly.hpp"
#include "series.hpp"

namespace glhom {

/* Largest n accepted by the polynomial-family builders; the q-Catalan
 * degrees grow like binom(n,2), so this caps runaway CLI requests. */
inline constexpr long kMaxPolyIndex = 32;

inline void require_nondegenerate_q(const Rational& q) {
  require(q != 0 && q != 1 && q != -1,
          "q must avoid {0, 1, -1} (degenerate q-Pochhammer)");
}

/* f(q,z) truncated at N, via the coefficient ratio
 * c_n / c_{n-1} = -1 / (q^{n-1} (1 - q^n)). */
inline TruncatedSeries<Rational> f_series(const Rational& q, long N) {
  require_nondegenerate_q(q);
  TruncatedSeries<Rational> f(N);
  Rational c(1), qpow(1);  // qpow = q^{n-1} entering step n
  f.set(0, c);
  for (long n = 1; n <= N; ++n) {
    c = -c / (qpow * (1 - qpow * q));
    f.set(n, c);
    qpow *= q;
  }
  return f;
}

inline TruncatedSeries<Rational> h_series(const Rational& q, long N) {
  return series_log(f_series(q, N));
}

/* h(q^e, z^e) as a series in z truncated at N: only every e-th coefficient
 * is populated, built directly (no general composition). */
inline TruncatedSeries<Rational> h_spread(const Rational& q, long e, long N) {
  require(e >= 1, "h_spread: e >= 1 required");
  return spread_z(h_series(pow_rat(q, e), N / e), e, N);
}

/* q-Catalan numbers C_0..C_n in one pass. */
inline std::vector<QPolynomial> q_catalan_family(long n) {
  require(n >= 0, "q_catalan: n >= 0 required");
  require(n <= kMaxPolyIndex * 2, "q_catalan: index above configured limit");
  std::vector<QPolynomial> c;
  c.reserve(static_cast<size_t>(n) + 1);
  c.emplace_back(1);
  for (long j = 1; j <= n; ++j) {
    // C_j = sum_{m=0..j-1} q^{(j-1-m)(m+1)} C_m C_{j-1-m}
    QPolynomial acc;
    for (long m = 0; m < j; ++m)
      acc += QPolynomial::monomial(Rational(1), (j - 1 - m) * (m + 1)) *
             c[static_cast<size_t>(m)] * c[static_cast<size_t>(j - 1 - m)];
    c.push_back(acc);
  }
  return c;
}

inline QPolynomial q_catalan(long n) {
  return q_catalan_family(n).back();
}

/* g(q,z) truncated at N over Laurent polynomials in q. */
inline TruncatedSeries<QPolynomial> g_series(long N) {
  require(N >= 0, "g_series: order must be >= 0");
  require(N <= kMaxPolyIndex * 2, "g_series: order above configured limit");
  const std::vector<QPolynomial> cat = q_catalan_family(N > 0 ? N - 1 : 0);
  TruncatedSeries<QPolynomial> g(N);
  g.set(0, QPolynomial(1));
  for (long n = 1; n <= N; ++n) {
    const Rational sign((n - 1) % 2 == 0 ? 1 : -1);
    g.set(n, QPolynomial::monomial(sign, -choose2(n)) *
                 cat[static_cast<size_t>(n - 1)]);
  }
  return g;
}

/* P_1..P_n from a single log g pass; each entry is asserted to be an
 * integer polynomial of degree binom(k,2) (thLogOfGeneratingFunction). */
inline std::vector<QPolynomial> p_poly_family(long n) {
  require(n >= 1, "p_poly: n >= 1 required");
  require(n <= kMaxPolyIndex, "p_poly: index above configured limit");
  const TruncatedSeries<QPolynomial> lg = series_log(g_series(n));
  std::vector<QPolynomial> out;
  out.reserve(static_cast<size_t>(n));
  for (long k = 1; k <= n; ++k) {
    const Rational sign((k - 1) % 2 == 0 ? k : -k);
    QPolynomial pk = QPolynomial::monomial(sign, choose2(k)) * lg[k];
    check(pk.is_integral(), "p_poly: P_n failed the Z[q] predicate");
    check(!pk.is_zero() && pk.degree() == choose2(k),
          "p_poly: deg P_n != binom(n,2)");
    out.push_back(std::move(pk));
  }
  return out;
}

inline QPolynomial p_poly(long n) { return p_poly_family(n).back(); }

/* R_n = sum_{d|n} (-1)^{n-d} mu(n/d) q^{binom(n,2)-(n/d)binom(d,2)}
 *                 P_d(q^{n/d}). */
inline QPolynomial r_poly(long n) {
  require(n >= 1, "r_poly: n >= 1 required");
  require(n <= kMaxPolyIndex, "r_poly: index above configured limit");
  const std::vector<QPolynomial> p = p_poly_family(n);
  QPolynomial acc;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(static_cast<unsigned long>(n / d));
    if (mu == 0) continue;
    const Rational sign(((n - d) % 2 == 0 ? 1 : -1) * mu);
    acc += QPolynomial::monomial(sign, choose2(n) - (n / d) * choose2(d)) *
           p[static_cast<size_t>(d - 1)].scale_exponents(n / d);
  }
  return acc;
}

/* Q_n = R_n / (n (1+q+...+q^{n-1})); exactness is the verified claim. */
inline QPolynomial q_poly(long n) {
  require(n >= 1, "q_poly: n >= 1 required");
  QPolynomial den;
  for (long i = 0; i < n; ++i)
    den += QPolynomial::monomial(Rational(n), i);
  QPolynomial qn = r_poly(n).divide_exact(den);
  check(qn.is_integral(), "q_poly: Q_n failed the Z[q] predicate");
  return qn;
}

struct DworkReport {
  Valuation min_vp = Valuation::infinity();  // over 1 <= n <= N
  long witness = 0;       // smallest n attaining min_vp (0 if b == 0)
  bool pass = true;         // min_vp >= 1: the corrected criterion
  bool printed_pass = true;  // min_vp >= 0: the paper's printed threshold
};

/* b(z) = p a(z) - a(z^p), scanned for its minimal coefficient valuation. */
inline DworkReport dwork_check(const TruncatedSeries<Rational>& a,
                               unsigned long p) {
  require(is_prime(p), "dwork_check: p must be prime");
  require(a[0] == 0, "dwork_check: constant term must be 0");
  DworkReport rep;
  for (long n = 1; n <= a.order(); ++n) {
    Rational bn = Rational(static_cast<long>(p)) * a[n];
    if (n % static_cast<long>(p) == 0) bn -= a[n / static_cast<long>(p)];
    const Valuation v = vp(bn, p);
    if (v < rep.min_vp) {
      rep.min_vp = v;
      rep.witness = n;
    }
  }
  rep.pass = rep.min_vp >= Valuation(1);
  rep.printed_pass = rep.min_vp >= Valuation(0);
  return rep;
}

}  // namespace glhom
