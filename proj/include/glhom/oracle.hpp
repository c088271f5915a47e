#pragma once
/*
 * oracle.hpp -- brute-force ground truth at tiny parameters.
 *
 * Deliberately independent of the series/polynomial machinery: a table-
 * driven finite field F_q (q = p^v <= 16), dense matrix enumeration, and
 * direct filtering.  Nothing here shares a code path with the counting
 * routes it is used to cross-check, beyond the exact-arithmetic kernel.
 *
 * Elements of F_{p^v} are encoded 0..q-1 as base-p digit vectors read as
 * polynomials in x modulo a monic irreducible of degree v.  ff_make picks
 * the least such modulus (ordered by the base-p value of its non-leading
 * coefficients); ff_make_with_modulus accepts any valid one, so field-
 * choice independence of every count is directly testable.
 *
 * Budgets are hard caps with explicit errors: matrix enumeration requires
 * q^{n^2} <= 2^20.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "groups.hpp"

namespace glhom {
namespace oracle {

class FiniteField {
 public:
  /* Least-modulus construction. */
  static FiniteField make(unsigned long p, unsigned v) {
    require(is_prime(p), "ff_make: p must be prime");
    require(v >= 1, "ff_make: v >= 1 required");
    for (unsigned long enc = 0;; ++enc) {
      require(enc < power(p, v), "ff_make: no irreducible found (bug)");
      std::vector<unsigned> mod = digits(enc, p, v);
      if (is_irreducible(mod, p)) return FiniteField(p, v, mod);
    }
  }

  /* Explicit modulus: non-leading coefficients c_0..c_{v-1} of a monic
   * irreducible of degree v. */
  static FiniteField make_with_modulus(unsigned long p,
                                       const std::vector<unsigned>& mod) {
    require(is_prime(p), "ff_make: p must be prime");
    require(!mod.empty(), "ff_make: modulus must have degree >= 1");
    for (unsigned c : mod)
      require(c < p, "ff_make: modulus coefficients must lie in [0, p)");
    require(is_irreducible(mod, p), "ff_make: modulus is not irreducible");
    return FiniteField(p, static_cast<unsigned>(mod.size()), mod);
  }

  unsigned long p() const { return p_; }
  unsigned v() const { return v_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return mod_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const {
    require(a != 0, "FiniteField: inverse of zero");
    return inv_[a];
  }

 private:
  unsigned long p_;
  unsigned v_;
  unsigned q_;
  std::vector<unsigned> mod_;  // non-leading coefficients, degree v
  std::vector<uint8_t> add_, mul_, neg_, inv_;

  static unsigned long power(unsigned long b, unsigned e) {
    unsigned long r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
  }

  static std::vector<unsigned> digits(unsigned long enc, unsigned long p,
                                      unsigned len) {
    std::vector<unsigned> d(len);
    for (unsigned i = 0; i < len; ++i) {
      d[i] = static_cast<unsigned>(enc % p);
      enc /= p;
    }
    return d;
  }

  /* Schoolbook polynomial remainder over F_p; a may have any degree. */
  static std::vector<unsigned> poly_mod(std::vector<unsigned> a,
                                        const std::vector<unsigned>& monic,
                                        unsigned long p) {
    const size_t v = monic.size();  // degree of the monic divisor
    while (a.size() > v) {
      const unsigned lead = a.back();
      a.pop_back();
      if (lead == 0) continue;
      for (size_t i = 0; i < v; ++i) {
        const size_t pos = a.size() - v + i;
        a[pos] = static_cast<unsigned>(
            (a[pos] + (p - monic[i] % p) * lead) % p);
      }
    }
    a.resize(v, 0u);
    return a;
  }

  /* Monic x^v + sum mod[i] x^i irreducible over F_p: no monic divisor of
   * degree 1..v/2 (trial division over all candidate coefficient tuples,
   * reducible candidates included -- harmless). */
  static bool is_irreducible(const std::vector<unsigned>& mod,
                             unsigned long p) {
    const unsigned v = static_cast<unsigned>(mod.size());
    if (v == 1) return true;
    for (unsigned t = 1; 2 * t <= v; ++t) {
      for (unsigned long enc = 0; enc < power(p, t); ++enc) {
        std::vector<unsigned> div = digits(enc, p, t);
        std::vector<unsigned> full = mod;  // degree-v poly incl. leading 1
        full.push_back(1u);
        // Remainder of `full` by the monic degree-t candidate.
        std::vector<unsigned> rem = poly_mod(full, div, p);
        bool zero = true;
        for (unsigned c : rem) zero = zero && c == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  FiniteField(unsigned long p, unsigned v, std::vector<unsigned> mod)
      : p_(p), v_(v), mod_(std::move(mod)) {
    const unsigned long q = power(p, v);
    require(q <= 16, "FiniteField: q <= 16 enumeration budget");
    q_ = static_cast<unsigned>(q);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0u);
    for (unsigned a = 0; a < q_; ++a) {
      const std::vector<unsigned> da = digits(a, p, v);
      {
        std::vector<unsigned> dn(v);
        for (unsigned i = 0; i < v; ++i)
          dn[i] = static_cast<unsigned>((p - da[i]) % p);
        neg_[a] = static_cast<uint8_t>(encode(dn, p));
      }
      for (unsigned b = 0; b < q_; ++b) {
        const std::vector<unsigned> db = digits(b, p, v);
        std::vector<unsigned> sum(v);
        for (unsigned i = 0; i < v; ++i)
          sum[i] = static_cast<unsigned>((da[i] + db[i]) % p);
        add_[a * q_ + b] = static_cast<uint8_t>(encode(sum, p));
        std::vector<unsigned> prod(2 * v - 1, 0u);
        for (unsigned i = 0; i < v; ++i)
          for (unsigned j = 0; j < v; ++j)
            prod[i + j] = static_cast<unsigned>(
                (prod[i + j] + da[i] * db[j]) % p);
        mul_[a * q_ + b] =
            static_cast<uint8_t>(encode(poly_mod(prod, mod_, p), p));
      }
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul(a, b) == 1) {
          inv_[a] = static_cast<uint8_t>(b);
          break;
        }
    for (unsigned a = 1; a < q_; ++a)
      check(inv_[a] != 0 && mul(a, inv_[a]) == 1,
            "FiniteField: missing inverse (modulus not irreducible?)");
  }

  static unsigned long encode(const std::vector<unsigned>& d,
                              unsigned long p) {
    unsigned long enc = 0;
    for (size_t i = d.size(); i-- > 0;) enc = enc * p + d[i];
    return enc;
  }
};

using Mat = std::vector<uint8_t>;  // n x n, row-major, entries 0..q-1

inline Mat mat_identity(long n) {
  Mat m(static_cast<size_t>(n * n), 0u);
  for (long i = 0; i < n; ++i) m[static_cast<size_t>(i * n + i)] = 1u;
  return m;
}

inline Mat mat_mul(const FiniteField& F, long n, const Mat& A, const Mat& B) {
  Mat C(static_cast<size_t>(n * n), 0u);
  for (long i = 0; i < n; ++i)
    for (long k = 0; k < n; ++k) {
      const unsigned a = A[static_cast<size_t>(i * n + k)];
      if (a == 0) continue;
      for (long j = 0; j < n; ++j) {
        const unsigned b = B[static_cast<size_t>(k * n + j)];
        if (b == 0) continue;
        size_t c = static_cast<size_t>(i * n + j);
        C[c] = static_cast<uint8_t>(F.add(C[c], F.mul(a, b)));
      }
    }
  return C;
}

inline Mat mat_pow(const FiniteField& F, long n, Mat A,
                   unsigned long long e) {
  Mat acc = mat_identity(n);
  while (e) {
    if (e & 1ULL) acc = mat_mul(F, n, acc, A);
    if (e >>= 1) A = mat_mul(F, n, A, A);
  }
  return acc;
}

inline bool mat_is_zero(const Mat& A) {
  for (uint8_t x : A)
    if (x != 0) return false;
  return true;
}

inline bool mat_equal(const Mat& A, const Mat& B) { return A == B; }

/* Invertibility by Gaussian elimination with table inverses. */
inline bool mat_invertible(const FiniteField& F, long n, Mat A) {
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long row = col; row < n; ++row)
      if (A[static_cast<size_t>(row * n + col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (long j = 0; j < n; ++j)
        std::swap(A[static_cast<size_t>(pivot * n + j)],
                  A[static_cast<size_t>(col * n + j)]);
    const unsigned pinv = F.inv(A[static_cast<size_t>(col * n + col)]);
    for (long row = col + 1; row < n; ++row) {
      const unsigned factor =
          F.mul(A[static_cast<size_t>(row * n + col)], pinv);
      if (factor == 0) continue;
      for (long j = col; j < n; ++j) {
        const unsigned sub = F.neg(
            F.mul(factor, A[static_cast<size_t>(col * n + j)]));
        A[static_cast<size_t>(row * n + j)] =
            static_cast<uint8_t>(F.add(A[static_cast<size_t>(row * n + j)],
                                       sub));
      }
    }
  }
  return true;
}

inline Integer matrix_space_size(const FiniteField& F, long n) {
  return pow_int(Integer(static_cast<long>(F.q())),
                 static_cast<unsigned long>(n * n));
}

inline void require_enumeration_budget(const FiniteField& F, long n) {
  require(matrix_space_size(F, n) <= Integer(1) << 20,
          "oracle: q^{n^2} exceeds the 2^20 enumeration budget");
}

inline Mat mat_from_index(const FiniteField& F, long n, unsigned long idx) {
  Mat A(static_cast<size_t>(n * n));
  for (size_t i = 0; i < A.size(); ++i) {
    A[i] = static_cast<uint8_t>(idx % F.q());
    idx /= F.q();
  }
  return A;
}

/* #{B : B^k = 0} by full enumeration. */
inline long long nilpotent_count_bruteforce(long n, const FiniteField& F,
                                            long long k) {
  require(n >= 0, "nilpotent brute force: n >= 0 required");
  require(k >= 0, "nilpotent brute force: k >= 0 required");
  if (n == 0) return 1;
  if (k == 0) return 0;
  require_enumeration_budget(F, n);
  const unsigned long long total =
      matrix_space_size(F, n).get_ui();
  const unsigned long long e =
      static_cast<unsigned long long>(std::min<long long>(k, n));
  long long count = 0;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    const Mat B = mat_from_index(F, n, idx);
    if (mat_is_zero(mat_pow(F, n, B, e))) ++count;
  }
  return count;
}

/* #{A in GL_n : A^m = I} by full enumeration (any m >= 1). */
inline long long order_filter_count(const FiniteField& F, long n,
                                    unsigned long long m) {
  require(n >= 0, "order filter: n >= 0 required");
  require(m >= 1, "order filter: m >= 1 required");
  if (n == 0) return 1;
  require_enumeration_budget(F, n);
  const unsigned long long total = matrix_space_size(F, n).get_ui();
  const Mat id = mat_identity(n);
  long long count = 0;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    const Mat A = mat_from_index(F, n, idx);
    if (!mat_invertible(F, n, A)) continue;
    if (mat_equal(mat_pow(F, n, A, m), id)) ++count;
  }
  return count;
}

/* #Hom(G, GL_n(F_q)) by enumerating commuting tuples of invertible
 * matrices with the prescribed orders.  For one cyclic factor this reduces
 * to order_filter_count, which doubles as a cross-check. */
inline long long hom_count_bruteforce(const AbelianPGroup& g,
                                      const FiniteField& F, long n) {
  require(n >= 0, "hom brute force: n >= 0 required");
  require(F.q() % g.p() != 0,
          "hom brute force: p divides q (non-modular oracle only)");
  if (n == 0 || g.is_trivial()) return 1;
  require_enumeration_budget(F, n);

  // Cyclic factor exponents, e.g. C_4^3 -> {2,2,2}.
  std::vector<unsigned> exps;
  for (size_t j = 0; j < g.multiplicities().size(); ++j)
    for (unsigned c = 0; c < g.multiplicities()[j]; ++c)
      exps.push_back(static_cast<unsigned>(j + 1));

  // Candidate lists per distinct exponent.
  const unsigned long long total = matrix_space_size(F, n).get_ui();
  const Mat id = mat_identity(n);
  std::map<unsigned, std::vector<Mat>> lists;
  for (unsigned e : exps) {
    if (lists.count(e)) continue;
    unsigned long long pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= g.p();
    std::vector<Mat> list;
    for (unsigned long long idx = 0; idx < total; ++idx) {
      Mat A = mat_from_index(F, n, idx);
      if (!mat_invertible(F, n, A)) continue;
      if (mat_equal(mat_pow(F, n, A, pe), id)) list.push_back(std::move(A));
    }
    lists.emplace(e, std::move(list));
  }

  if (exps.size() == 1)
    return static_cast<long long>(lists.begin()->second.size());

  Integer tuple_budget(1);
  for (unsigned e : exps) tuple_budget *= static_cast<long>(
      lists[e].size());
  require(tuple_budget <= Integer(1) << 24,
          "hom brute force: tuple enumeration exceeds the 2^24 budget");

  // Depth-first over factors; prune on pairwise commutation.
  std::vector<const Mat*> chosen;
  long long count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == exps.size()) {
      ++count;
      return;
    }
    for (const Mat& A : lists[exps[idx]]) {
      bool ok = true;
      for (const Mat* B : chosen)
        if (mat_mul(F, n, A, *B) != mat_mul(F, n, *B, A)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(&A);
      self(self, idx + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

/* |GL_n(F_q)| = q^{binom(n,2)} prod_{i=1..n} (q^i - 1). */
inline Integer gl_order(long n, const Integer& q) {
  require(n >= 0, "gl_order: n >= 0 required");
  Integer acc = pow_int(q, static_cast<unsigned long>(choose2(n)));
  Integer qi(1);
  for (long i = 1; i <= n; ++i) {
    qi *= q;
    acc *= qi - 1;
  }
  return acc;
}

}  // namespace oracle
}  // namespace glhom
