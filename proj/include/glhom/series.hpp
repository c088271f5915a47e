#pragma once
/*
 * series.hpp -- formal power series in z truncated at order N, over an
 * exact coefficient ring R (Rational or QPolynomial; mixed-ring arithmetic
 * is rejected at compile time by the type system, matching-order at runtime).
 *
 * exp/log run the standard recurrences from (exp a)' = a' exp a:
 *     b_0 = 1,  n b_n = sum_{k=1..n} k a_k b_{n-k}           (exp)
 *     a_n = b_n - (1/n) sum_{k=1..n-1} k a_k b_{n-k}          (log)
 * everything exact.  Substitutions z -> z^k ("spread") and z -> s z
 * (diagonal rescale) are the only compositions supported; general series
 * composition is deliberately absent.
 */

#include <vector>

#include "exact.hpp"

namespace glhom {

template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long order) : c_(check_order(order) + 1, R(0)) {}

  static TruncatedSeries one(long order) {
    TruncatedSeries s(order);
    s.c_[0] = R(1);
    return s;
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }

  const R& operator[](long i) const {
    require(i >= 0 && i <= order(), "series: coefficient index out of range");
    return c_[static_cast<size_t>(i)];
  }
  void set(long i, const R& v) {
    require(i >= 0 && i <= order(), "series: coefficient index out of range");
    c_[static_cast<size_t>(i)] = v;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.match(b);
    TruncatedSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.match(b);
    TruncatedSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.match(b);
    TruncatedSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) {
      if (a.c_[i] == R(0)) continue;
      for (long j = 0; i + j <= a.order(); ++j) {
        if (b.c_[j] == R(0)) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const R& s) {
    TruncatedSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] * s;
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  std::vector<R> c_;

  static long check_order(long order) {
    require(order >= 0, "series: order must be >= 0");
    return order;
  }
  void match(const TruncatedSeries& o) const {
    require(order() == o.order(), "series: mismatched truncation orders");
  }
};

template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& a) {
  require(a[0] == R(0), "series_exp: constant term must be 0");
  const long n = a.order();
  TruncatedSeries<R> b(n);
  b.set(0, R(1));
  for (long m = 1; m <= n; ++m) {
    R acc(0);
    for (long k = 1; k <= m; ++k) {
      if (a[k] == R(0)) continue;
      acc = acc + a[k] * R(Rational(k)) * b[m - k];
    }
    b.set(m, acc * R(make_rational(1, m)));
  }
  return b;
}

template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& b) {
  require(b[0] == R(1), "series_log: constant term must be 1");
  const long n = b.order();
  TruncatedSeries<R> a(n);
  for (long m = 1; m <= n; ++m) {
    R acc(0);
    for (long k = 1; k < m; ++k) {
      if (a[k] == R(0)) continue;
      acc = acc + a[k] * R(Rational(k)) * b[m - k];
    }
    a.set(m, b[m] - acc * R(make_rational(1, m)));
  }
  return a;
}

/* z -> z^k: coefficient j moves to z^{jk}; result re-truncated at `order`. */
template <class R>
TruncatedSeries<R> spread_z(const TruncatedSeries<R>& a, long k, long order) {
  require(k >= 1, "spread_z: k >= 1 required");
  TruncatedSeries<R> r(order);
  for (long j = 0; j <= a.order() && j * k <= order; ++j)
    r.set(j * k, a[j]);
  return r;
}

/* z -> s z: coefficient n picks up s^n. */
template <class R>
TruncatedSeries<R> scale_z(const TruncatedSeries<R>& a, const R& s) {
  TruncatedSeries<R> r(a.order());
  R pw(1);
  for (long i = 0; i <= a.order(); ++i) {
    r.set(i, a[i] * pw);
    pw = pw * s;
  }
  return r;
}

template <class R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, unsigned long e) {
  TruncatedSeries<R> acc = TruncatedSeries<R>::one(a.order());
  TruncatedSeries<R> b = a;
  while (e) {
    if (e & 1) acc = acc * b;
    if (e >>= 1) b = b * b;
  }
  return acc;
}

}  // namespace glhom
