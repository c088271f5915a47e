#pragma once
/*
 * groups.hpp -- finite Abelian p-group descriptors and the statistics the
 * bound machinery consumes.
 *
 * G = prod_{j=1..r} C_{p^j}^{k_j} is stored as (p, multiplicities k_1..k_r)
 * with k_r > 0.  Derived data:
 *   c_i  = sum_j min(i,j) k_j  = log_p #{x in G : x^{p^i} = 1}
 *   r    = exponent index (exp G = p^r);  log_p|G| = sum j k_j;  s = log|G|-r
 *   r'   = r if k_r >= 2, else the largest j < r with k_j > 0, else 0
 *          (split G = C_{p^r} x G_0 with exp G_0 = p^{r'}, |G_0| = p^s).
 *
 * The lambda profile for (p, q): d = multiplicative order of q mod p and
 * lambda_i = v_p(q^{d p^i} - 1), computed exactly and checked against the
 * structure lemma (lambda_i = lambda_0 + i when p >= 3 or lambda_0 >= 2;
 * lambda_i = lambda_1 + i - 1 for i >= 1 when p = 2, lambda_0 = 1).
 *
 * irred_dim_counts returns the dimensions of the irreducible
 * F_q-representations of G with multiplicities -- Frobenius-orbit sizes of
 * x -> qx on the character group -- via the closed forms
 *   d > 1:  n_1 = 1, n_d = (p^{c_{l0}} - 1)/d,
 *           n_{dp^i} = (p^{c_{li}} - p^{c_{l(i-1)}})/(d p^i)
 *   d = 1:  n_1 = p^{c_{l0}},  n_{p^i} = (p^{c_{li}} - p^{c_{l(i-1)}})/p^i
 * with every division checked exact and sum e n_e = |G| checked at the end.
 */

#include <utility>
#include <vector>

#include "exact.hpp"

namespace glhom {

class AbelianPGroup {
 public:
  /* multiplicities: k[j-1] = number of C_{p^j} factors; trailing zeros are
   * trimmed; an empty list is the trivial group (accepted, flagged). */
  AbelianPGroup(unsigned long p, std::vector<unsigned> multiplicities)
      : p_(p), k_(std::move(multiplicities)) {
    require(is_prime(p_), "AbelianPGroup: p must be prime");
    while (!k_.empty() && k_.back() == 0) k_.pop_back();
    log_order_ = 0;
    for (size_t j = 0; j < k_.size(); ++j)
      log_order_ += static_cast<long long>(j + 1) * k_[j];
  }

  /* From a list of cyclic factor exponents (C_4^3 = {2,2,2}). */
  static AbelianPGroup from_factors(unsigned long p,
                                    const std::vector<unsigned>& exponents) {
    unsigned rmax = 0;
    for (unsigned e : exponents) {
      require(e >= 1, "group factors: exponents must be >= 1");
      rmax = std::max(rmax, e);
    }
    std::vector<unsigned> k(rmax, 0u);
    for (unsigned e : exponents) ++k[e - 1];
    return AbelianPGroup(p, k);
  }

  unsigned long p() const { return p_; }
  const std::vector<unsigned>& multiplicities() const { return k_; }
  bool is_trivial() const { return k_.empty(); }

  long r() const { return static_cast<long>(k_.size()); }
  long long log_order() const { return log_order_; }
  long long s() const { return log_order_ - r(); }
  Integer order() const {
    return pow_int(Integer(static_cast<long>(p_)),
                   static_cast<unsigned long>(log_order_));
  }

  long r_prime() const {
    if (k_.empty()) return 0;
    if (k_.back() >= 2) return r();
    for (long j = r() - 1; j >= 1; --j)
      if (k_[static_cast<size_t>(j - 1)] > 0) return j;
    return 0;
  }

  /* c_i = sum_j min(i,j) k_j; c_0 = 0, concave nondecreasing,
   * c_i = r + s for i >= r. */
  long long c(long i) const {
    require(i >= 0, "c_i: i >= 0 required");
    long long acc = 0;
    for (size_t j = 0; j < k_.size(); ++j)
      acc += std::min<long long>(i, static_cast<long long>(j + 1)) * k_[j];
    return acc;
  }

  std::string str() const {
    if (k_.empty()) return "1";
    std::string out;
    for (size_t j = 0; j < k_.size(); ++j) {
      if (k_[j] == 0) continue;
      if (!out.empty()) out += " x ";
      out += "C_" + Integer(pow_int(Integer(static_cast<long>(p_)),
                                    static_cast<unsigned long>(j + 1)))
                        .get_str();
      if (k_[j] > 1) out += "^" + std::to_string(k_[j]);
    }
    return out;
  }

 private:
  unsigned long p_;
  std::vector<unsigned> k_;
  long long log_order_;
};

struct LambdaProfile {
  long long d = 1;                // multiplicative order of q mod p
  std::vector<long long> lam;     // lambda_0 .. lambda_m
};

/* lambda_i = v_p(q^{d p^i} - 1) for 0 <= i <= m, with the structure lemma
 * asserted on the computed values (it is a theorem; failure means a bug). */
inline LambdaProfile lambda_profile(unsigned long p, const Integer& q,
                                    long m) {
  require(m >= 0, "lambda_profile: m >= 0 required");
  LambdaProfile prof;
  prof.d = static_cast<long long>(mult_order(q, p));
  Integer qd = pow_int(q, static_cast<unsigned long>(prof.d));
  for (long i = 0; i <= m; ++i) {
    prof.lam.push_back(vp(Integer(qd - 1), p).finite());
    if (i < m) qd = pow_int(qd, p);
  }
  for (long i = 1; i <= m; ++i) {
    const long long expect =
        (p >= 3 || prof.lam[0] >= 2)
            ? prof.lam[0] + i
            : (i == 1 ? prof.lam[1] : prof.lam[1] + i - 1);
    check(prof.lam[static_cast<size_t>(i)] == expect,
          "lambda_profile: structure lemma violated");
  }
  return prof;
}

/* Default scan horizon: smallest i with lambda_i > r, plus 4.  lambda grows
 * by 1 per step past the start, so the loop terminates quickly. */
inline long default_lambda_horizon(unsigned long p, const Integer& q,
                                   long r) {
  long m = 0;
  for (;;) {
    LambdaProfile prof = lambda_profile(p, q, m);
    if (prof.lam.back() > r) return m + 4;
    ++m;
    check(m < 256, "default_lambda_horizon: runaway scan");
  }
}

struct DimCount {
  long long dim;
  Integer count;
};

/* Irreducible F_q-representation dimensions with multiplicities.
 * Requires q a prime power coprime to p.  Trivial G gives {(1,1)}. */
inline std::vector<DimCount> irred_dim_counts(const AbelianPGroup& g,
                                              const Integer& q) {
  unsigned long qp = 0;
  unsigned qe = 0;
  require(q.fits_ulong_p() &&
              prime_power_split(q.get_ui(), qp, qe),
          "irred_dim_counts: q must be a prime power");
  require(q % static_cast<long>(g.p()) != 0,
          "irred_dim_counts: p divides q (non-modular case only)");
  std::vector<DimCount> out;
  if (g.is_trivial()) {
    out.push_back({1, Integer(1)});
    return out;
  }
  const Integer p(static_cast<long>(g.p()));
  const long m = default_lambda_horizon(g.p(), q, g.r());
  const LambdaProfile prof = lambda_profile(g.p(), q, m);
  const long long d = prof.d;

  auto p_to_c_of_lambda = [&](long i) {
    return pow_int(p, static_cast<unsigned long>(
                          g.c(static_cast<long>(prof.lam[
                              static_cast<size_t>(i)]))));
  };

  if (d > 1) {
    out.push_back({1, Integer(1)});
    Integer nd = p_to_c_of_lambda(0) - 1;
    const long dl = static_cast<long>(d);
    check(nd % dl == 0, "irred_dim_counts: d does not divide p^{c_l0} - 1");
    out.push_back({d, Integer(nd / dl)});
  } else {
    out.push_back({1, p_to_c_of_lambda(0)});
  }
  Integer dim(static_cast<long>(d));
  for (long i = 1; i <= m; ++i) {
    dim *= static_cast<long>(g.p());
    Integer diff = p_to_c_of_lambda(i) - p_to_c_of_lambda(i - 1);
    if (diff == 0) break;  // c stabilized; concavity keeps it flat forever
    check(diff % dim == 0, "irred_dim_counts: dp^i does not divide the step");
    check(dim.fits_slong_p(), "irred_dim_counts: dimension overflow");
    out.push_back({dim.get_si(), Integer(diff / dim)});
  }

  Integer total(0);
  for (const DimCount& dc : out) total += dc.count * static_cast<long>(dc.dim);
  check(total == g.order(), "irred_dim_counts: sum e*n_e != |G|");
  return out;
}

}  // namespace glhom
