/*
 * glhom -- command line front end.
 *
 * Subcommands: count, bound, series, poly, modular (poly/count/bound),
 * verify.  Global flags: --format json|text, --trunc, --seed.  Output is
 * byte-deterministic for fixed inputs; big integers are rendered as decimal
 * strings in JSON.  Exit codes: 0 success, 1 verification/consistency
 * failure, 2 usage error.
 */

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "glhom/exact.hpp"
#include "glhom/groups.hpp"
#include "glhom/json_io.hpp"
#include "glhom/modular.hpp"
#include "glhom/nonmodular.hpp"
#include "glhom/oracle.hpp"
#include "glhom/qseries.hpp"
#include "glhom/suites.hpp"

namespace {

using namespace glhom;

struct GlobalOpts {
  std::string format = "text";
  long trunc = 40;
  std::uint64_t seed = 0;
};

bool json_mode(const GlobalOpts& g) { return g.format == "json"; }

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

void emit(const GlobalOpts& g, const Json& j,
          const std::vector<std::string>& text_lines) {
  if (json_mode(g)) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& line : text_lines) std::cout << line << "\n";
  }
}

AbelianPGroup group_from_flags(unsigned long p,
                               const std::vector<unsigned>& factors) {
  return AbelianPGroup::from_factors(p, factors);
}

/* ---- count ---------------------------------------------------------- */

int run_count(const GlobalOpts& g, unsigned long p,
              const std::vector<unsigned>& factors, long long q, long n,
              const std::string& method) {
  const AbelianPGroup grp = group_from_flags(p, factors);
  Integer count;
  if (method == "series") {
    count = hom_count(grp, Integer(static_cast<long>(q)), n).count;
  } else if (method == "brute") {
    require(q >= 2, "count: q >= 2 required");
    unsigned long fp = 0;
    unsigned fe = 0;
    require(prime_power_split(static_cast<unsigned long>(q), fp, fe),
            "count: q must be a prime power");
    const oracle::FiniteField F = oracle::FiniteField::make(fp, fe);
    count = Integer(static_cast<long>(oracle::hom_count_bruteforce(grp, F, n)));
  } else {
    throw input_error("count: unknown method " + method);
  }
  const long long v = vp(count, p).finite();
  Json j;
  j["count"] = count.get_str();
  j["vp"] = v;
  emit(g, j,
       {"count " + count.get_str(), "vp " + std::to_string(v)});
  return 0;
}

/* ---- bound ---------------------------------------------------------- */

int run_bound(const GlobalOpts& g, unsigned long p,
              const std::vector<unsigned>& factors, long long q, long nmax,
              bool compare) {
  const AbelianPGroup grp = group_from_flags(p, factors);
  const Integer qi(static_cast<long>(q));
  std::vector<Integer> counts;
  if (compare) counts = hom_counts(grp, qi, nmax);

  Json rows = Json::array();
  std::vector<std::string> lines;
  lines.push_back(compare
                      ? "n first bound theorem tight actual_vp"
                      : "n first bound theorem tight");
  bool sound = true;
  for (long n = 0; n <= nmax; ++n) {
    const BoundReport first = bound_first(grp, qi, n);
    const BoundReport best = bound_best(grp, qi, n);
    Json row;
    row["n"] = n;
    row["bound_first"] = first.bound;
    row["bound"] = best.bound;
    row["theorem"] = best.theorem;
    row["tight"] = best.tight_claim;
    std::string line = std::to_string(n) + " " + std::to_string(first.bound) +
                       " " + std::to_string(best.bound) + " " + best.theorem +
                       " " + (best.tight_claim ? "yes" : "no");
    if (compare) {
      const long long v = vp(counts[static_cast<size_t>(n)], p).finite();
      row["actual_vp"] = v;
      line += " " + std::to_string(v);
      sound = sound && v >= best.bound && v >= first.bound &&
              (!best.tight_claim || v == best.bound) &&
              (!first.tight_claim || v == first.bound);
    }
    rows.push_back(std::move(row));
    lines.push_back(std::move(line));
  }
  Json j;
  j["p"] = p;
  j["group"] = grp.str();
  j["q"] = std::to_string(q);
  j["rows"] = std::move(rows);
  if (compare) {
    j["sound"] = sound;
    lines.push_back(std::string("sound ") + (sound ? "yes" : "no"));
  }
  emit(g, j, lines);
  return compare && !sound ? 1 : 0;
}

/* ---- series ---------------------------------------------------------- */

int run_series(const GlobalOpts& g, const std::string& kind, long long q,
               unsigned long p, const std::vector<unsigned>& factors) {
  const long N = g.trunc;
  Json j;
  std::vector<std::string> lines;
  if (kind == "f" || kind == "h") {
    const Rational qr(static_cast<long>(q));
    const TruncatedSeries<Rational> s =
        kind == "f" ? f_series(qr, N) : h_series(qr, N);
    j = to_json(s);
    j["kind"] = kind;
    for (long n = 0; n <= N; ++n)
      lines.push_back(std::to_string(n) + " " + rational_str(s[n]));
  } else if (kind == "g") {
    const TruncatedSeries<QPolynomial> s = g_series(N);
    j = to_json(s);
    j["kind"] = kind;
    for (long n = 0; n <= N; ++n)
      lines.push_back(std::to_string(n) + " " + s[n].str());
  } else if (kind == "F" || kind == "logF") {
    const AbelianPGroup grp = group_from_flags(p, factors);
    const TruncatedSeries<Rational> F =
        F_series(grp, Integer(static_cast<long>(q)), N);
    const TruncatedSeries<Rational> s = kind == "F" ? F : series_log(F);
    j = to_json(s);
    j["kind"] = kind;
    j["group"] = grp.str();
    for (long n = 0; n <= N; ++n)
      lines.push_back(std::to_string(n) + " " + rational_str(s[n]));
  } else {
    throw input_error("series: unknown kind " + kind);
  }
  emit(g, j, lines);
  return 0;
}

/* ---- poly ------------------------------------------------------------ */

int run_poly(const GlobalOpts& g, const std::string& family, long n) {
  QPolynomial f;
  if (family == "catalan") {
    f = q_catalan(n);
  } else if (family == "p") {
    f = p_poly(n);
  } else if (family == "r") {
    f = r_poly(n);
  } else if (family == "q") {
    f = q_poly(n);
  } else if (family == "cyclotomic") {
    f = cyclotomic(n);
  } else {
    throw input_error("poly: unknown family " + family);
  }
  Json j = to_json(f);
  j["family"] = family;
  j["n"] = n;
  emit(g, j, {f.str()});
  return 0;
}

/* ---- modular ----------------------------------------------------------- */

int run_modular_poly(const GlobalOpts& g, long long n, long long k,
                     const std::string& method) {
  QPolynomial f;
  if (method == "partition") {
    f = a_nk_partition(n, k);
  } else if (method == "recurrence") {
    f = a_nk_recurrence(n, k);
  } else {
    throw input_error("modular poly: unknown method " + method);
  }
  Json j = to_json(f);
  j["n"] = n;
  j["k"] = k;
  emit(g, j, {f.str()});
  return 0;
}

int run_modular_count(const GlobalOpts& g, unsigned long p, long u, long v,
                      long long n, const std::string& method) {
  Integer count;
  long long vq = 0;
  if (method == "partition" || method == "recurrence") {
    const Integer pu = pow_int(Integer(static_cast<long>(p)),
                               static_cast<unsigned long>(u));
    require(pu.fits_slong_p(), "modular count: p^u too large");
    const long long k = pu.get_si();
    const QPolynomial a = method == "partition" ? a_nk_partition(n, k)
                                                : a_nk_recurrence(n, k);
    const Integer q = pow_int(Integer(static_cast<long>(p)),
                              static_cast<unsigned long>(v));
    const Rational val = a.evaluate(Rational(q));
    check(val.get_den() == 1, "modular count: non-integer evaluation");
    count = Integer(val.get_num());
    vq = count == 0 ? 0 : vp(count, p).finite();
  } else if (method == "brute") {
    const oracle::FiniteField F =
        oracle::FiniteField::make(p, static_cast<unsigned>(v));
    const Integer pu = pow_int(Integer(static_cast<long>(p)),
                               static_cast<unsigned long>(u));
    require(pu.fits_slong_p(), "modular count: p^u too large");
    count = Integer(static_cast<long>(
        oracle::nilpotent_count_bruteforce(static_cast<long>(n), F,
                                           pu.get_si())));
    vq = count == 0 ? 0 : vp(count, p).finite();
  } else {
    throw input_error("modular count: unknown method " + method);
  }
  // v_q-style report: valuation of the count in base q = p^v means
  // v_p(count)/v; report v_p directly to stay integral.
  Json j;
  j["count"] = count.get_str();
  j["vp"] = vq;
  emit(g, j, {"count " + count.get_str(), "vp " + std::to_string(vq)});
  return 0;
}

int run_modular_bound(const GlobalOpts& g, long long nmax, long long k) {
  Json rows = Json::array();
  std::vector<std::string> lines;
  lines.push_back("n trailing bound congruence equality");
  bool all_ok = true;
  for (long long n = 0; n <= nmax; ++n) {
    const ModularBound rep = modular_bound(n, k);
    Json row;
    row["n"] = n;
    row["trailing"] = rep.trailing;
    row["bound"] = to_json(rep.bound);
    row["congruence_point"] = rep.congruence_point;
    row["equality"] = rep.equality;
    rows.push_back(std::move(row));
    lines.push_back(std::to_string(n) + " " + std::to_string(rep.trailing) +
                    " " + rational_str(rep.bound) + " " +
                    (rep.congruence_point ? "yes" : "no") + " " +
                    (rep.equality ? "yes" : "no"));
    all_ok = all_ok && rep.bound_holds &&
             (!rep.congruence_point || rep.equality);
  }
  Json j;
  j["k"] = k;
  j["rows"] = std::move(rows);
  j["bound_holds"] = all_ok;
  lines.push_back(std::string("bound_holds ") + (all_ok ? "yes" : "no"));
  emit(g, j, lines);
  return all_ok ? 0 : 1;
}

/* ---- verify ------------------------------------------------------------ */

int run_verify(const GlobalOpts& g, const std::string& suite, int jobs,
               long cases) {
  SuiteParams params;
  params.trunc = g.trunc;
  params.seed = g.seed;
  params.cases = cases;
  params.jobs = jobs;

  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }

  Json jsuites = Json::array();
  std::vector<std::string> lines;
  bool all_pass = true;
  for (const std::string& name : names) {
    const SuiteReport rep = run_suite(name, params);
    all_pass = all_pass && rep.pass;

    Json jcases = Json::array();
    long passed = 0;
    std::vector<std::string> failures;
    for (const SuiteCase& c : rep.cases) {
      Json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["detail"] = c.detail;
      jcases.push_back(std::move(jc));
      if (c.pass) {
        ++passed;
      } else {
        failures.push_back("  FAIL " + c.name + ": " + c.detail);
      }
    }
    Json js;
    js["suite"] = rep.suite;
    js["pass"] = rep.pass;
    js["trunc"] = rep.trunc;
    js["seed"] = rep.seed;
    js["cases"] = std::move(jcases);
    js["errata"] = rep.errata;
    jsuites.push_back(std::move(js));

    lines.push_back("suite " + rep.suite + ": " +
                    (rep.pass ? "PASS" : "FAIL") + " (" +
                    std::to_string(passed) + "/" +
                    std::to_string(rep.cases.size()) + " cases)");
    for (std::string& f : failures) lines.push_back(std::move(f));
    for (const std::string& e : rep.errata) lines.push_back("  note: " + e);
  }
  Json j;
  j["suites"] = std::move(jsuites);
  j["pass"] = all_pass;
  lines.push_back(std::string("overall ") + (all_pass ? "PASS" : "FAIL"));
  emit(g, j, lines);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic valuations of #Hom(G, GL_n(F_q)) for Abelian p-groups"};
  app.require_subcommand(1);

  GlobalOpts gopts;
  app.add_option("--format", gopts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--trunc", gopts.trunc, "series truncation order")
      ->check(CLI::Range(1L, 4096L))
      ->capture_default_str();
  app.add_option("--seed", gopts.seed, "seed for randomized suites")
      ->capture_default_str();

  // count
  auto* count = app.add_subcommand("count", "#Hom(G, GL_n(F_q))");
  unsigned long count_p = 2;
  std::vector<unsigned> count_factors;
  long long count_q = 3;
  long count_n = 0;
  std::string count_method = "series";
  count->add_option("--p", count_p, "prime p")->required();
  count->add_option("--factors", count_factors,
                    "cyclic factor exponents e (G = prod C_{p^e})")
      ->delimiter(',');
  count->add_option("--q", count_q, "field size q")->required();
  count->add_option("--n", count_n, "matrix size n")->required();
  count->add_option("--method", count_method, "series|brute")
      ->check(CLI::IsMember({"series", "brute"}))
      ->capture_default_str();

  // bound
  auto* bound = app.add_subcommand("bound", "valuation lower bounds");
  unsigned long bound_p = 2;
  std::vector<unsigned> bound_factors;
  long long bound_q = 3;
  long bound_nmax = 24;
  bool bound_compare = false;
  bound->add_option("--p", bound_p, "prime p")->required();
  bound->add_option("--factors", bound_factors,
                    "cyclic factor exponents e (G = prod C_{p^e})")
      ->delimiter(',');
  bound->add_option("--q", bound_q, "field size q")->required();
  bound->add_option("--n-max", bound_nmax, "largest n")->required();
  bound->add_flag("--compare", bound_compare,
                  "also compute v_p(#Hom) and check soundness");

  // series
  auto* series = app.add_subcommand("series", "series coefficients");
  std::string series_kind = "f";
  long long series_q = 3;
  unsigned long series_p = 2;
  std::vector<unsigned> series_factors;
  series->add_option("--kind", series_kind, "f|h|g|logF|F")
      ->check(CLI::IsMember({"f", "h", "g", "logF", "F"}))
      ->capture_default_str();
  series->add_option("--q", series_q, "numeric q (unused for g)");
  series->add_option("--p", series_p, "prime p (F/logF only)");
  series->add_option("--factors", series_factors,
                     "cyclic factor exponents (F/logF only)")
      ->delimiter(',');

  // poly
  auto* poly = app.add_subcommand("poly", "named polynomial families");
  std::string poly_family = "p";
  long poly_n = 1;
  poly->add_option("--family", poly_family, "catalan|p|r|q|cyclotomic")
      ->check(CLI::IsMember({"catalan", "p", "r", "q", "cyclotomic"}))
      ->capture_default_str();
  poly->add_option("--n", poly_n, "index n")->required();

  // modular
  auto* modular = app.add_subcommand("modular", "B^k = 0 matrix counts");
  modular->require_subcommand(1);
  auto* mpoly = modular->add_subcommand("poly", "a_{n,k}(q) polynomial");
  long long mpoly_n = 0, mpoly_k = 0;
  std::string mpoly_method = "partition";
  mpoly->add_option("--n", mpoly_n, "matrix size n")->required();
  mpoly->add_option("--k", mpoly_k, "nilpotency bound k")->required();
  mpoly->add_option("--method", mpoly_method, "partition|recurrence")
      ->check(CLI::IsMember({"partition", "recurrence"}))
      ->capture_default_str();
  auto* mcount = modular->add_subcommand(
      "count", "#Hom(C_{p^u}, GL_n(F_{p^v})) in the modular case");
  unsigned long mcount_p = 2;
  long mcount_u = 1, mcount_v = 1;
  long long mcount_n = 0;
  std::string mcount_method = "partition";
  mcount->add_option("--p", mcount_p, "prime p")->required();
  mcount->add_option("--u", mcount_u, "source group C_{p^u}")->required();
  mcount->add_option("--v", mcount_v, "field F_{p^v}")->required();
  mcount->add_option("--n", mcount_n, "matrix size n")->required();
  mcount->add_option("--method", mcount_method,
                     "partition|recurrence|brute")
      ->check(CLI::IsMember({"partition", "recurrence", "brute"}))
      ->capture_default_str();
  auto* mbound = modular->add_subcommand("bound", "trailing degree bound");
  long long mbound_nmax = 12, mbound_k = 2;
  mbound->add_option("--n-max", mbound_nmax, "largest n")->required();
  mbound->add_option("--k", mbound_k, "nilpotency bound k")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "named verification suites");
  std::string verify_suite = "all";
  int verify_jobs = static_cast<int>(std::thread::hardware_concurrency());
  long verify_cases = 0;
  verify->add_option("--suite", verify_suite, "suite name or 'all'")
      ->capture_default_str();
  verify->add_option("--jobs", verify_jobs, "max concurrent cases")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  verify->add_option("--cases", verify_cases,
                     "randomized case count / grid cap (0 = default)")
      ->check(CLI::Range(0L, 100000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count)
      return run_count(gopts, count_p, count_factors, count_q, count_n,
                       count_method);
    if (*bound)
      return run_bound(gopts, bound_p, bound_factors, bound_q, bound_nmax,
                       bound_compare);
    if (*series)
      return run_series(gopts, series_kind, series_q, series_p,
                        series_factors);
    if (*poly) return run_poly(gopts, poly_family, poly_n);
    if (*modular) {
      if (*mpoly) return run_modular_poly(gopts, mpoly_n, mpoly_k,
                                          mpoly_method);
      if (*mcount)
        return run_modular_count(gopts, mcount_p, mcount_u, mcount_v,
                                 mcount_n, mcount_method);
      if (*mbound) return run_modular_bound(gopts, mbound_nmax, mbound_k);
    }
    if (*verify) return run_verify(gopts, verify_suite, verify_jobs,
                                   verify_cases);
    throw input_error("no subcommand selected");
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
