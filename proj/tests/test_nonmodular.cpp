#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "glhom/exact.hpp"
#include "glhom/groups.hpp"
#include "glhom/nonmodular.hpp"
#include "glhom/oracle.hpp"
#include "glhom/qseries.hpp"
#include "glhom/series.hpp"

using namespace glhom;

namespace {

struct GridPoint {
  unsigned long p;
  std::vector<unsigned> factors;
};

/* The soundness grid from the bound theorems' test plan: every group from
 * the worked examples, every q value appearing in them plus {7, 13}. */
const std::vector<GridPoint>& groups_grid() {
  static const std::vector<GridPoint> grid = {
      {2, {1}}, {2, {2}}, {2, {3}}, {2, {1, 1}}, {2, {2, 2, 2}},
      {3, {2}}, {3, {3}}, {3, {1, 2}},
  };
  return grid;
}

const std::vector<long>& q_values() {
  static const std::vector<long> qs = {3, 5, 7, 13, 17, 31, 47, 163};
  return qs;
}

}  // namespace

TEST_CASE("F series anchors") {
  const AbelianPGroup c2 = AbelianPGroup::from_factors(2, {1});
  const TruncatedSeries<Rational> F = F_series(c2, Integer(3), 6);
  REQUIRE(F[0] == 1);
  REQUIRE(F[1] == 1);
  REQUIRE(F[2] == make_rational(7, 24));
  // trivial group: F = f(q, z)
  const AbelianPGroup triv = AbelianPGroup::from_factors(2, {});
  REQUIRE(F_series(triv, Integer(3), 6) == f_series(Rational(3), 6));
  REQUIRE_THROWS_AS(F_series(c2, Integer(4), 4), input_error);
}

TEST_CASE("exp-sum and product methods agree") {
  struct Pt {
    unsigned long p;
    std::vector<unsigned> factors;
    long q;
  };
  for (const Pt& pt : {Pt{2, {1}, 3}, Pt{2, {2}, 5}, Pt{2, {1, 1}, 3},
                       Pt{3, {2}, 17}, Pt{3, {3}, 7}, Pt{3, {1, 2}, 7},
                       Pt{2, {2, 2, 2}, 31}}) {
    const AbelianPGroup g = AbelianPGroup::from_factors(pt.p, pt.factors);
    REQUIRE(F_series(g, Integer(pt.q), 16, FMethod::kExpSum) ==
            F_series(g, Integer(pt.q), 16, FMethod::kProduct));
    REQUIRE(hom_counts(g, Integer(pt.q), 10, FMethod::kExpSum) ==
            hom_counts(g, Integer(pt.q), 10, FMethod::kProduct));
  }
}

TEST_CASE("hom counts: frozen anchors") {
  const AbelianPGroup c2 = AbelianPGroup::from_factors(2, {1});
  REQUIRE(hom_count(c2, Integer(3), 0).count == 1);
  REQUIRE(hom_count(c2, Integer(3), 1).count == 2);
  REQUIRE(hom_count(c2, Integer(3), 2).count == 14);
  REQUIRE(hom_count(c2, Integer(3), 2).vp == 1);
  REQUIRE(hom_count(c2, Integer(3), 3).count == 236);
  REQUIRE(hom_count(c2, Integer(3), 3).vp == 2);

  const AbelianPGroup c9 = AbelianPGroup::from_factors(3, {2});
  REQUIRE(hom_count(c9, Integer(17), 2).count == 1089);  // 3^2 * 11^2
  REQUIRE(hom_count(c9, Integer(17), 2).vp == 2);

  // trivial group: exactly one homomorphism at every n
  const AbelianPGroup triv = AbelianPGroup::from_factors(3, {});
  for (long n = 0; n <= 6; ++n)
    REQUIRE(hom_count(triv, Integer(7), n).count == 1);

  // prefix consistency
  const std::vector<Integer> all = hom_counts(c2, Integer(3), 8);
  for (long n = 0; n <= 8; ++n)
    REQUIRE(all[static_cast<size_t>(n)] == hom_count(c2, Integer(3), n).count);
}

TEST_CASE("gln_vp is v_p of the group order") {
  REQUIRE(gln_vp(2, Integer(3), 2) == 4);   // |GL_2(F_3)| = 48
  REQUIRE(gln_vp(1, Integer(5), 2) == 2);   // |GL_1(F_5)| = 4
  REQUIRE(gln_vp(0, Integer(3), 2) == 0);
  for (const unsigned long p : {2UL, 3UL, 5UL, 7UL})
    for (const long q : {2L, 3L, 5L, 7L, 9L, 17L}) {
      if (q % static_cast<long>(p) == 0) continue;
      for (long n = 0; n <= 8; ++n)
        REQUIRE(Valuation(gln_vp(n, Integer(q), p)) ==
                vp(oracle::gl_order(n, Integer(q)), p));
    }
}

TEST_CASE("b/a sequence structure") {
  // Row "C_2, q = 3": b starts 0, -3, -5, -7; unique minimizer at l = 1.
  const AbelianPGroup c2 = AbelianPGroup::from_factors(2, {1});
  const BaSequences row1 = b_a_sequences(c2, Integer(3));
  REQUIRE(row1.d == 1);
  REQUIRE(row1.b.size() >= 4);
  REQUIRE(row1.b[0] == 0);
  REQUIRE(row1.b[1] == -3);
  REQUIRE(row1.b[2] == -5);
  REQUIRE(row1.b[3] == -7);
  REQUIRE(row1.l_b == 1);
  REQUIRE(row1.l_b_unique);
  REQUIRE(row1.b_l == -3);

  // Row "C_2, q = 5": tied minimizers at i = 0, 1 (b = -1, -3 with p = 2).
  const BaSequences row5 = b_a_sequences(c2, Integer(5));
  REQUIRE(row5.b[0] == -1);
  REQUIRE(row5.b[1] == -3);
  REQUIRE(row5.l_b == 0);
  REQUIRE_FALSE(row5.l_b_unique);

  // independent argmin over the scanned prefix, exact rational objective
  for (const GridPoint& gp : groups_grid()) {
    for (const long q : q_values()) {
      if (q % static_cast<long>(gp.p) == 0) continue;
      const AbelianPGroup g = AbelianPGroup::from_factors(gp.p, gp.factors);
      const BaSequences seq = b_a_sequences(g, Integer(q));
      const long pm1 = static_cast<long>(gp.p) - 1;
      Rational best(0);
      long best_i = -1;
      long ties = 0;
      for (size_t i = 0; i < seq.b.size(); ++i) {
        const Rational obj =
            make_rational(Integer(pm1 * static_cast<long>(seq.b[i]) - 1),
                          Integer(pm1) *
                              pow_int(Integer(static_cast<long>(gp.p)),
                                      static_cast<unsigned long>(i)));
        if (best_i < 0 || obj < best) {
          best = obj;
          best_i = static_cast<long>(i);
          ties = 1;
        } else if (obj == best) {
          ++ties;
        }
      }
      REQUIRE(best_i == seq.l_b);
      REQUIRE(seq.l_b_unique == (ties == 1));
      REQUIRE(seq.b_l == seq.b[static_cast<size_t>(seq.l_b)]);

      // a_i is infinite exactly in the r' <= lambda_i <= r window
      for (size_t i = 0; i < seq.a.size(); ++i) {
        const bool window = seq.lam[i] >= g.r_prime() && seq.lam[i] <= g.r();
        REQUIRE(seq.a[i].is_infinite() == window);
        if (!seq.a[i].is_infinite())
          REQUIRE(seq.a[i] == Valuation(seq.b[i]));
      }
      REQUIRE(seq.lam[static_cast<size_t>(seq.l_a)] > g.r());
      REQUIRE(seq.a_l == seq.b[static_cast<size_t>(seq.l_a)]);
    }
  }

  REQUIRE_THROWS_AS(
      b_a_sequences(AbelianPGroup::from_factors(2, {}), Integer(3)),
      input_error);
  REQUIRE_THROWS_AS(b_a_sequences(c2, Integer(4)), input_error);
}

TEST_CASE("the a-window example: C_3 x C_9 at q = 7") {
  const AbelianPGroup g = AbelianPGroup::from_factors(3, {1, 2});
  const BaSequences seq = b_a_sequences(g, Integer(7));
  // lambda_0 = v_3(6) = 1 lies in [r', r] = [1, 2], so a_0 = +infinity
  REQUIRE(seq.lam[0] == 1);
  REQUIRE(seq.a[0].is_infinite());
  const BoundReport rep = bound_main(g, Integer(7), 9);
  REQUIRE(rep.l == seq.l_a);
  REQUIRE(rep.coeff == seq.a_l);
  REQUIRE(rep.bound == 9 + 3 + 1 - 2);  // l = 2, a_l = -2 at n = 9
}

TEST_CASE("bounds are sound and tight on the full grid") {
  for (const GridPoint& gp : groups_grid()) {
    for (const long q : q_values()) {
      if (q % static_cast<long>(gp.p) == 0) continue;
      const AbelianPGroup g = AbelianPGroup::from_factors(gp.p, gp.factors);
      const std::vector<Integer> counts = hom_counts(g, Integer(q), 24);
      for (long long n = 0; n <= 24; ++n) {
        const long long v =
            vp(counts[static_cast<size_t>(n)], gp.p).finite();
        const BoundReport fst = bound_first(g, Integer(q), n);
        const BoundReport best = bound_best(g, Integer(q), n);
        REQUIRE(v >= fst.bound);
        REQUIRE(v >= best.bound);
        REQUIRE(best.bound >= bound_main(g, Integer(q), n).bound);
        if (fst.tight_claim) REQUIRE(v == fst.bound);
        if (best.tight_claim) REQUIRE(v == best.bound);
      }
    }
  }
}

TEST_CASE("refinement applies exactly at p = 2, a_l = -1") {
  const AbelianPGroup c2 = AbelianPGroup::from_factors(2, {1});
  const BoundReport main5 = bound_main(c2, Integer(5), 8);
  REQUIRE(main5.refinement_applicable);
  const BoundReport ref5 = bound_refined(c2, Integer(5), 8);
  // l = 0: refined = main + floor(n/2) - floor(n/4)
  REQUIRE(ref5.bound == main5.bound + 8 / 2 - 8 / 4);
  REQUIRE(ref5.theorem == "main3");
  REQUIRE(ref5.tight_claim);  // 2^{l+2} = 4 divides 8

  const BoundReport main3 = bound_main(c2, Integer(3), 8);
  REQUIRE_FALSE(main3.refinement_applicable);
  REQUIRE_THROWS_AS(bound_refined(c2, Integer(3), 8), input_error);
}

TEST_CASE("Yoshida divisibility: gcd(|G|, |GL_n|) divides the count") {
  for (const GridPoint& gp : groups_grid()) {
    for (const long q : {3L, 5L, 7L}) {
      if (q % static_cast<long>(gp.p) == 0) continue;
      const AbelianPGroup g = AbelianPGroup::from_factors(gp.p, gp.factors);
      const std::vector<Integer> counts = hom_counts(g, Integer(q), 12);
      for (long n = 1; n <= 12; ++n) {
        Integer gc;
        const Integer order = g.order();
        const Integer glo = oracle::gl_order(n, Integer(q));
        mpz_gcd(gc.get_mpz_t(), order.get_mpz_t(), glo.get_mpz_t());
        REQUIRE(counts[static_cast<size_t>(n)] % gc == 0);
      }
    }
  }
}

TEST_CASE("log F decompositions reassemble the series") {
  struct Pt {
    unsigned long p;
    std::vector<unsigned> factors;
    long q;
  };
  const long N = 20;
  for (const Pt& pt : {Pt{2, {2}, 3}, Pt{2, {2}, 5}, Pt{2, {1}, 7},
                       Pt{2, {2, 2, 2}, 31}, Pt{3, {2}, 7}, Pt{3, {2}, 17},
                       Pt{3, {1, 2}, 7}, Pt{3, {3}, 163}, Pt{5, {2}, 11},
                       Pt{5, {1}, 2}}) {
    const AbelianPGroup g = AbelianPGroup::from_factors(pt.p, pt.factors);
    const TruncatedSeries<Rational> logF =
        series_log(F_series(g, Integer(pt.q), N));
    REQUIRE(log_F_decomposition(g, Integer(pt.q), N) == logF);

    const AltLogFParts parts = alt_log_F_parts(g, Integer(pt.q), N);
    REQUIRE(parts.term_limit + parts.term_based + parts.term_star == logF);

    // the two bracketed factors are p-integral
    for (const TruncatedSeries<Rational>& piece :
         {series_exp(parts.term_limit), series_exp(parts.term_based)}) {
      for (long n = 0; n <= N; ++n)
        REQUIRE(vp(piece[n], pt.p) >= Valuation(0));
    }
  }
}

TEST_CASE("limit series is p-integral after exp") {
  for (const unsigned long p : {2UL, 3UL, 5UL}) {
    for (const long q : {2L, 3L, 7L, 17L}) {
      if (q % static_cast<long>(p) == 0) continue;
      const TruncatedSeries<Rational> e =
          series_exp(limit_log_F(p, Integer(q), 24));
      for (long n = 0; n <= 24; ++n)
        REQUIRE(vp(e[n], p) >= Valuation(0));
    }
  }
  REQUIRE_THROWS_AS(limit_log_F(4, Integer(3), 8), input_error);
  REQUIRE_THROWS_AS(limit_log_F(2, Integer(6), 8), input_error);
}

TEST_CASE("bound operations reject invalid inputs") {
  const AbelianPGroup triv = AbelianPGroup::from_factors(2, {});
  const AbelianPGroup c2 = AbelianPGroup::from_factors(2, {1});
  REQUIRE_THROWS_AS(bound_first(triv, Integer(3), 4), input_error);
  REQUIRE_THROWS_AS(bound_main(triv, Integer(3), 4), input_error);
  REQUIRE_THROWS_AS(bound_first(c2, Integer(6), 4), input_error);
  REQUIRE_THROWS_AS(bound_first(c2, Integer(3), -1), input_error);
}
