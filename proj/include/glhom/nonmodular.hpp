#pragma once
/*
 * nonmodular.hpp -- the generating function F(G,q;z), exact homomorphism
 * counts for p not dividing q, and the p-adic lower-bound pipeline.
 *
 * Counting route:
 *   log F = sum_e n_e h(q^e, z^e)   (n_e from irred_dim_counts)
 *   #Hom(G, GL_n(F_q)) = (-1)^n q^{binom(n,2)} (q;q)_n [z^n] F
 * with an independent product route prod_e f(q^e,z^e)^{n_e} kept for
 * cross-checks.  Integrality and positivity of every count are hard
 * postconditions.
 *
 * Bound route: with lambda_i = v_p(q^{d p^i}-1) and c_i the group statistic,
 *   b_i = c_{lambda_i} - lambda_i - i
 *   a_i = +infinity if r' <= lambda_i <= r, else b_i
 * The first bound uses l = argmin p^{-i}(b_i - 1/(p-1)) (smallest index);
 * the main bounds use l = min{i : a_i < 0} with the closed-form case tables,
 * which are asserted to agree with the scan.  Scan horizon: iterate until
 * lambda_i > r and b_i <= -1, then two more indices -- past that point
 * b_{i+1} = b_i - 2, and the objective difference p^{-i-1}(-1-(p-1)b_i)
 * is >= 0 once b_i <= -1, so no later index can beat (or newly tie) the
 * scanned minimizer; the +2 margin captures the p = 2 tie at b_l = -1.
 *
 * The main2 case table implemented here is the corrected one (the printed
 * table misses the lambda_1 > r guard on its first case and is off by one
 * in l in the middle band); the scan assertion enforces the correction.
 * The refinement (main3) adds floor(n/2^{l+1}) - floor(n/2^{l+2}) to the
 * main bound -- the printed closed forms assume l >= 1 and disagree with
 * Table 1 at l = 0, so the additive form is used for every l.
 */

#include <string>
#include <vector>

#include "exact.hpp"
#include "groups.hpp"
#include "qseries.hpp"

namespace glhom {

enum class FMethod { kExpSum, kProduct };

/* Truncated F(G,q;z); q a prime power coprime to p. */
inline TruncatedSeries<Rational> F_series(const AbelianPGroup& g,
                                          const Integer& q, long N,
                                          FMethod method = FMethod::kExpSum) {
  const std::vector<DimCount> dims = irred_dim_counts(g, q);
  if (method == FMethod::kExpSum) {
    TruncatedSeries<Rational> acc(N);
    for (const DimCount& dc : dims) {
      if (dc.dim > N || dc.count == 0) continue;
      acc = acc + h_spread(Rational(q), static_cast<long>(dc.dim), N) *
                      Rational(dc.count);
    }
    return series_exp(acc);
  }
  TruncatedSeries<Rational> acc = TruncatedSeries<Rational>::one(N);
  for (const DimCount& dc : dims) {
    if (dc.dim > N || dc.count == 0) continue;
    check(dc.count.fits_ulong_p(), "F_series: multiplicity too large");
    const TruncatedSeries<Rational> fe = spread_z(
        f_series(pow_rat(Rational(q), static_cast<long>(dc.dim)),
                 N / static_cast<long>(dc.dim)),
        static_cast<long>(dc.dim), N);
    acc = acc * series_pow(fe, dc.count.get_ui());
  }
  return acc;
}

/* #Hom(G, GL_n(F_q)) for n = 0..N in one series pass. */
inline std::vector<Integer> hom_counts(const AbelianPGroup& g,
                                       const Integer& q, long N,
                                       FMethod method = FMethod::kExpSum) {
  const TruncatedSeries<Rational> F = F_series(g, q, N, method);
  std::vector<Integer> out;
  out.reserve(static_cast<size_t>(N) + 1);
  Rational poch(1), qpow(1), qbin(1);  // (q;q)_n, q^n, q^{binom(n,2)}
  for (long n = 0; n <= N; ++n) {
    if (n > 0) {
      qbin *= qpow;  // q^{binom(n,2)} = q^{binom(n-1,2)} * q^{n-1}
      qpow *= Rational(q);
      poch *= 1 - qpow;
    }
    Rational value = qbin * poch * F[n];
    if (n % 2 == 1) value = -value;
    check(value.get_den() == 1, "hom_count: non-integer count");
    Integer count(value.get_num());
    check(count > 0, "hom_count: non-positive count");
    out.push_back(count);
  }
  return out;
}

struct HomCount {
  Integer count;
  long long vp;  // w.r.t. the group's p
};

inline HomCount hom_count(const AbelianPGroup& g, const Integer& q, long n,
                          FMethod method = FMethod::kExpSum) {
  require(n >= 0, "hom_count: n >= 0 required");
  const Integer count = hom_counts(g, q, n, method).back();
  return {count, vp(count, g.p()).finite()};
}

/* v_p(|GL_n(F_q)|) = v_p((q;q)_n) = sum_i lambda_i (floor(n/dp^i) -
 * floor(n/dp^{i+1})); the q-power part of the order contributes 0. */
inline long long gln_vp(long long n, const Integer& q, unsigned long p) {
  require(n >= 0, "gln_vp: n >= 0 required");
  require(q >= 2 && q % static_cast<long>(p) != 0,
          "gln_vp: q >= 2 with p not dividing q required");
  if (n == 0) return 0;
  const Integer nn(static_cast<long>(n));
  long m = 0;
  {
    Integer dpi(static_cast<long>(mult_order(q, p)));
    while (dpi * static_cast<long>(p) <= nn) {
      dpi *= static_cast<long>(p);
      ++m;
    }
  }
  const LambdaProfile prof = lambda_profile(p, q, m);
  long long acc = 0;
  Integer dpi(static_cast<long>(prof.d));
  for (long i = 0; i <= m; ++i) {
    const long long lo = (dpi <= nn) ? n / dpi.get_si() : 0;
    Integer next = dpi * static_cast<long>(p);
    const long long hi = (next <= nn) ? n / next.get_si() : 0;
    acc += prof.lam[static_cast<size_t>(i)] * (lo - hi);
    dpi = next;
  }
  return acc;
}

struct BaSequences {
  long long d = 1;
  std::vector<long long> lam;  // lambda_0..lambda_m (scan horizon m)
  std::vector<long long> b;    // b_i = c_{lambda_i} - lambda_i - i
  std::vector<Valuation> a;    // +infinity at masked indices
  long l_b = 0;                // smallest argmin of p^{-i}(b_i - 1/(p-1))
  bool l_b_unique = true;
  long long b_l = 0;
  long l_a = 0;  // min{i : a_i < 0}
  long long a_l = 0;
};

inline BaSequences b_a_sequences(const AbelianPGroup& g, const Integer& q) {
  require(!g.is_trivial(), "b_a_sequences: bounds require nontrivial G");
  require(q >= 2 && q % static_cast<long>(g.p()) != 0,
          "b_a_sequences: q >= 2 with p not dividing q required");
  const unsigned long p = g.p();
  const long r = g.r();
  const long rp = g.r_prime();

  BaSequences seq;
  // Grow the lambda profile until the stop rule fires, then three more
  // (the printed four-term prefixes need them when the rule fires at 0).
  long m = 0, stop = -1;
  LambdaProfile prof;
  while (true) {
    prof = lambda_profile(p, q, m);
    const long long lam = prof.lam[static_cast<size_t>(m)];
    const long long bi = g.c(static_cast<long>(lam)) - lam - m;
    if (stop < 0 && lam > r && bi <= -1) stop = m;
    if (stop >= 0 && m >= stop + 3) break;
    ++m;
    check(m < 64, "b_a_sequences: runaway scan horizon");
  }
  seq.d = prof.d;
  seq.lam = prof.lam;
  for (long i = 0; i <= m; ++i) {
    const long long lam = seq.lam[static_cast<size_t>(i)];
    seq.b.push_back(g.c(static_cast<long>(lam)) - lam - i);
    seq.a.push_back(rp <= lam && lam <= r
                        ? Valuation::infinity()
                        : Valuation(seq.b.back()));
  }

  // Lemma checks on every computed sequence: steps of b are >= -2 except
  // possibly at i = 0 when p = 2, lambda_0 = 1; exactly -2 once lambda > r.
  for (long i = 0; i + 1 <= m; ++i) {
    const long long step = seq.b[static_cast<size_t>(i + 1)] -
                           seq.b[static_cast<size_t>(i)];
    if (!(i == 0 && p == 2 && seq.lam[0] == 1))
      check(step >= -2, "b sequence: step below -2");
    if (seq.lam[static_cast<size_t>(i)] > r)
      check(step == -2, "b sequence: tail step != -2");
  }

  // Smallest argmin of (b_i - 1/(p-1)) / p^i, compared exactly.
  auto objective = [&](long i) {
    const Integer pm1(static_cast<long>(p - 1));
    return make_rational(
        pm1 * static_cast<long>(seq.b[static_cast<size_t>(i)]) - 1,
                         pm1 * pow_int(Integer(static_cast<long>(p)),
                                       static_cast<unsigned long>(i)));
  };
  Rational best = objective(0);
  seq.l_b = 0;
  for (long i = 1; i <= m; ++i) {
    const Rational obj = objective(i);
    if (obj < best) {
      best = obj;
      seq.l_b = i;
      seq.l_b_unique = true;
    } else if (obj == best) {
      seq.l_b_unique = false;
    }
  }
  seq.b_l = seq.b[static_cast<size_t>(seq.l_b)];

  // First negative a_i; the lemma guarantees one inside the horizon.
  long la = -1;
  for (long i = 0; i <= m; ++i) {
    if (!seq.a[static_cast<size_t>(i)].is_infinite() &&
        seq.a[static_cast<size_t>(i)] < Valuation(0)) {
      la = i;
      break;
    }
  }
  check(la >= 0, "a sequence: no negative entry within scan horizon");
  seq.l_a = la;
  seq.a_l = seq.a[static_cast<size_t>(la)].finite();
  check(seq.lam[static_cast<size_t>(la)] > r,
        "a sequence: lambda_l <= r at the first negative index");

  // The first negative index is also the smallest argmin of the masked
  // objective, unique except exactly at p = 2, a_l = -1.
  long amin = -1;
  Rational abest;
  bool aunique = true;
  for (long i = 0; i <= m; ++i) {
    if (seq.a[static_cast<size_t>(i)].is_infinite()) continue;
    const Rational obj = objective(i);
    if (amin < 0 || obj < abest) {
      abest = obj;
      amin = i;
      aunique = true;
    } else if (obj == abest) {
      aunique = false;
    }
  }
  check(amin == seq.l_a, "a sequence: argmin != first negative index");
  check(aunique == !(p == 2 && seq.a_l == -1),
        "a sequence: minimizer uniqueness contradicts the lemma");
  return seq;
}

struct BoundReport {
  std::string theorem;  // "first" | "main1" | "main2" | "main3"
  long long d = 1;
  long l = 0;
  long long coeff = 0;  // b_l for "first", a_l otherwise
  long long bound = 0;  // value at the queried n
  bool tight_claim = false;
  long long tight_modulus = 0;  // d p^l (first/main), 2^{l+2} (main3)
  bool refinement_applicable = false;  // p = 2 and a_l = -1
  int case_id = 0;  // informative: which row of the case table fired
};

namespace detail {

/* floor(n / (d p^i)) without overflow: the divisor saturates past n. */
inline long long floor_dpi(long long n, long long d, unsigned long p,
                           long i) {
  const Integer nn(static_cast<long>(n));
  Integer m(static_cast<long>(d));
  for (long j = 0; j < i; ++j) {
    m *= static_cast<long>(p);
    if (m > nn) return 0;
  }
  return m > nn ? 0 : n / m.get_si();
}

inline long long dpl_modulus(long long d, unsigned long p, long l) {
  Integer m(static_cast<long>(d));
  for (long j = 0; j < l; ++j) m *= static_cast<long>(p);
  check(m.fits_slong_p(), "bound: tightness modulus overflow");
  return m.get_si();
}

}  // namespace detail

/* Theorem "first" bound (thDivHomLowerBound1 shape):
 *   p >= 3 or lambda_0 >= 2:
 *     b_l fl(n/dp^l) + sum_{i=0..l} fl(n/dp^i) + (lambda_0 - 1) fl(n/d)
 *   p = 2, lambda_0 = 1 (then d = 1):
 *     b_l fl(n/2^l) + sum_{i=0..l} fl(n/2^i) + (lambda_1 - 2) fl(n/2)
 * Equality whenever d p^l | n, provided the minimizer is unique. */
inline BoundReport bound_first(const AbelianPGroup& g, const Integer& q,
                               long long n) {
  require(n >= 0, "bound_first: n >= 0 required");
  const BaSequences seq = b_a_sequences(g, q);
  const unsigned long p = g.p();
  BoundReport rep;
  rep.theorem = "first";
  rep.d = seq.d;
  rep.l = seq.l_b;
  rep.coeff = seq.b_l;
  long long acc = seq.b_l * detail::floor_dpi(n, seq.d, p, seq.l_b);
  for (long i = 0; i <= seq.l_b; ++i)
    acc += detail::floor_dpi(n, seq.d, p, i);
  if (p >= 3 || seq.lam[0] >= 2) {
    acc += (seq.lam[0] - 1) * detail::floor_dpi(n, seq.d, p, 0);
  } else {
    check(seq.d == 1, "bound_first: p = 2, lambda_0 = 1 forces d = 1");
    acc += (seq.lam[1] - 2) * detail::floor_dpi(n, 1, p, 1);
  }
  rep.bound = acc;
  rep.tight_modulus = detail::dpl_modulus(seq.d, p, seq.l_b);
  rep.tight_claim = seq.l_b_unique && n % rep.tight_modulus == 0;
  return rep;
}

/* Main-theorem (l, a_l) via the closed case tables; asserted against the
 * scan.  main1 covers p >= 3 or lambda_0 >= 2; main2 covers p = 2,
 * lambda_0 = 1 (q = 3 mod 4) with the corrected guards. */
inline BoundReport bound_main(const AbelianPGroup& g, const Integer& q,
                              long long n) {
  require(n >= 0, "bound_main: n >= 0 required");
  const BaSequences seq = b_a_sequences(g, q);
  const unsigned long p = g.p();
  const long long r = g.r();
  const long long s = g.s();

  BoundReport rep;
  rep.d = seq.d;
  long l;
  long long a;
  if (p >= 3 || seq.lam[0] >= 2) {
    rep.theorem = "main1";
    const long long l0 = seq.lam[0];
    if (l0 > r + s) {
      l = 0;
      a = r + s - l0;
      rep.case_id = 1;
    } else if (l0 >= r - s + 2) {
      const long long t = r + s - l0;
      if (t % 2 == 0) {
        l = static_cast<long>((t + 2) / 2);
        a = -2;
        rep.case_id = 2;
      } else {
        l = static_cast<long>((t + 1) / 2);
        a = -1;
        rep.case_id = 3;
      }
    } else {
      l = static_cast<long>(r - l0 + 1);
      a = -r + s + l0 - 2;
      rep.case_id = 4;
    }
  } else {
    rep.theorem = "main2";
    check(seq.d == 1, "bound_main: p = 2, lambda_0 = 1 forces d = 1");
    const long long l1 = seq.lam[1];
    if (l1 > r && l1 > r + s - 1) {
      l = 1;
      a = r + s - l1 - 1;
      rep.case_id = 1;
    } else if (l1 <= r && l1 <= r - s + 2) {
      l = static_cast<long>(r - l1 + 2);
      a = -r + s + l1 - 3;
      rep.case_id = 2;
    } else {
      const long long t = r + s - l1;
      if (t % 2 == 1) {
        l = static_cast<long>((t + 3) / 2);
        a = -2;
        rep.case_id = 3;
      } else {
        l = static_cast<long>((t + 2) / 2);
        a = -1;
        rep.case_id = 4;
      }
    }
  }
  check(l == seq.l_a && a == seq.a_l,
        "bound_main: case table disagrees with the a-sequence scan");
  rep.l = l;
  rep.coeff = a;

  long long acc;
  if (rep.theorem == "main1") {
    acc = seq.lam[0] * detail::floor_dpi(n, seq.d, p, 0);
    for (long i = 1; i <= l; ++i) acc += detail::floor_dpi(n, seq.d, p, i);
    acc += a * detail::floor_dpi(n, seq.d, p, l);
  } else {
    acc = n + (seq.lam[1] - 1) * detail::floor_dpi(n, 1, p, 1);
    for (long i = 2; i <= l; ++i) acc += detail::floor_dpi(n, 1, p, i);
    acc += a * detail::floor_dpi(n, 1, p, l);
  }
  rep.bound = acc;
  rep.tight_modulus = detail::dpl_modulus(seq.d, p, l);
  rep.refinement_applicable = (p == 2 && a == -1);
  // The main theorems claim equality at dp^l | n except when the p = 2
  // refinement applies (there the refined bound carries the claim).
  rep.tight_claim = !rep.refinement_applicable && n % rep.tight_modulus == 0;
  return rep;
}

/* p = 2, a_l = -1 refinement: main bound + fl(n/2^{l+1}) - fl(n/2^{l+2}),
 * tight whenever 2^{l+2} | n. */
inline BoundReport bound_refined(const AbelianPGroup& g, const Integer& q,
                                 long long n) {
  BoundReport rep = bound_main(g, q, n);
  require(rep.refinement_applicable,
          "bound_refined: requires p = 2 and a_l = -1");
  rep.theorem = "main3";
  rep.bound += detail::floor_dpi(n, 1, 2, rep.l + 1) -
               detail::floor_dpi(n, 1, 2, rep.l + 2);
  rep.tight_modulus = detail::dpl_modulus(1, 2, rep.l + 2);
  rep.tight_claim = n % rep.tight_modulus == 0;
  rep.refinement_applicable = false;
  return rep;
}

/* bound_main, upgraded to the refinement whenever it applies. */
inline BoundReport bound_best(const AbelianPGroup& g, const Integer& q,
                              long long n) {
  BoundReport rep = bound_main(g, q, n);
  return rep.refinement_applicable ? bound_refined(g, q, n) : rep;
}

/* Right side of the log F decomposition:
 *   (h_1 - (1/d) h_d) + (1/d) sum_i p^{c_{lambda_i}-i}
 *                                   (h_{dp^i} - (1/p) h_{dp^{i+1}})
 * truncated at N (indices with dp^i > N contribute nothing). */
inline TruncatedSeries<Rational> log_F_decomposition(const AbelianPGroup& g,
                                                     const Integer& q,
                                                     long N) {
  require(!g.is_trivial(), "log_F_decomposition: nontrivial G required");
  long m = 0;
  const LambdaProfile probe = lambda_profile(g.p(), q, 0);
  {
    Integer dpi(static_cast<long>(probe.d));
    while (dpi * static_cast<long>(g.p()) <= N) {
      dpi *= static_cast<long>(g.p());
      ++m;
    }
  }
  const LambdaProfile prof = lambda_profile(g.p(), q, m + 1);
  const long long d = prof.d;
  const Rational qr(q);
  const Rational inv_d = make_rational(1, d);
  const Rational inv_p = make_rational(1, static_cast<long>(g.p()));

  TruncatedSeries<Rational> acc =
      h_spread(qr, 1, N) - h_spread(qr, static_cast<long>(d), N) * inv_d;
  long long dpi = d;
  for (long i = 0; i <= m; ++i) {
    const long long lam = prof.lam[static_cast<size_t>(i)];
    const Rational w =
        inv_d * pow_rat(Rational(static_cast<long>(g.p())),
                        g.c(static_cast<long>(lam)) - i);
    TruncatedSeries<Rational> term =
        h_spread(qr, static_cast<long>(dpi), N);
    if (dpi * static_cast<long long>(g.p()) <= N)
      term = term -
             h_spread(qr, static_cast<long>(dpi * g.p()), N) * inv_p;
    acc = acc + term * w;
    dpi *= static_cast<long long>(g.p());
  }
  return acc;
}

/* lim_{k->inf} log F(C_{p^k}, q; z): same shape with c_{lambda_i} replaced
 * by lambda_i.  Its exponential is p-integral (the limit lemma). */
inline TruncatedSeries<Rational> limit_log_F(unsigned long p,
                                             const Integer& q, long N) {
  require(is_prime(p), "limit_log_F: p must be prime");
  require(q >= 2 && q % static_cast<long>(p) != 0,
          "limit_log_F: q >= 2 with p not dividing q required");
  long m = 0;
  const LambdaProfile probe = lambda_profile(p, q, 0);
  {
    Integer dpi(static_cast<long>(probe.d));
    while (dpi * static_cast<long>(p) <= N) {
      dpi *= static_cast<long>(p);
      ++m;
    }
  }
  const LambdaProfile prof = lambda_profile(p, q, m + 1);
  const long long d = prof.d;
  const Rational qr(q);
  const Rational inv_d = make_rational(1, d);
  const Rational inv_p = make_rational(1, static_cast<long>(p));

  TruncatedSeries<Rational> acc =
      h_spread(qr, 1, N) - h_spread(qr, static_cast<long>(d), N) * inv_d;
  long long dpi = d;
  for (long i = 0; i <= m; ++i) {
    const long long lam = prof.lam[static_cast<size_t>(i)];
    const Rational w = inv_d * pow_rat(Rational(static_cast<long>(p)),
                                       lam - i);
    TruncatedSeries<Rational> term =
        h_spread(qr, static_cast<long>(dpi), N);
    if (dpi * static_cast<long long>(p) <= N)
      term = term - h_spread(qr, static_cast<long>(dpi * p), N) * inv_p;
    acc = acc + term * w;
    dpi *= static_cast<long long>(p);
  }
  return acc;
}

/* The three pieces of the alternative decomposition:
 *   log F = p^s L_inf - (p^s - 1)(h_1 - (1/d) h_d)
 *           + (1/d) sum_i (p^{c_{li}-i} - p^{li+s-i})(h_{dp^i} - (1/p) h_{dp^{i+1}})
 * exp(term_limit) and exp(term_based) are the two p-integral factors. */
struct AltLogFParts {
  TruncatedSeries<Rational> term_limit;  // p^s L_inf
  TruncatedSeries<Rational> term_based;  // -(p^s - 1)(h_1 - (1/d) h_d)
  TruncatedSeries<Rational> term_star;   // the masked sum
  AltLogFParts(long N)
      : term_limit(N), term_based(N), term_star(N) {}
};

inline AltLogFParts alt_log_F_parts(const AbelianPGroup& g, const Integer& q,
                                    long N) {
  require(!g.is_trivial(), "alt_log_F_parts: nontrivial G required");
  AltLogFParts parts(N);
  const unsigned long p = g.p();
  const Rational ps = pow_rat(Rational(static_cast<long>(p)), g.s());
  parts.term_limit = limit_log_F(p, q, N) * ps;

  long m = 0;
  const LambdaProfile probe = lambda_profile(p, q, 0);
  {
    Integer dpi(static_cast<long>(probe.d));
    while (dpi * static_cast<long>(p) <= N) {
      dpi *= static_cast<long>(p);
      ++m;
    }
  }
  const LambdaProfile prof = lambda_profile(p, q, m + 1);
  const long long d = prof.d;
  const Rational qr(q);
  const Rational inv_d = make_rational(1, d);
  const Rational inv_p = make_rational(1, static_cast<long>(p));

  parts.term_based =
      (h_spread(qr, 1, N) - h_spread(qr, static_cast<long>(d), N) * inv_d) *
      (Rational(1) - ps);

  long long dpi = d;
  for (long i = 0; i <= m; ++i) {
    const long long lam = prof.lam[static_cast<size_t>(i)];
    const Rational w =
        inv_d *
        (pow_rat(Rational(static_cast<long>(p)),
                 g.c(static_cast<long>(lam)) - i) -
         pow_rat(Rational(static_cast<long>(p)), lam + g.s() - i));
    if (w != 0) {
      TruncatedSeries<Rational> term =
          h_spread(qr, static_cast<long>(dpi), N);
      if (dpi * static_cast<long long>(p) <= N)
        term = term -
               h_spread(qr, static_cast<long>(dpi * p), N) * inv_p;
      parts.term_star = parts.term_star + term * w;
    }
    dpi *= static_cast<long long>(p);
  }
  return parts;
}

}  // namespace glhom
