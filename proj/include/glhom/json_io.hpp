#pragma once
/*
 * json_io.hpp -- JSON encoding for CLI output.
 *
 * All integers that can exceed 64 bits travel as decimal strings, so the
 * output is loadable by any JSON parser without precision loss.  Rationals
 * are {"num": "...", "den": "..."} with den > 0 and gcd(num, den) = 1, the
 * canonical form the arithmetic kernel maintains.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "exact.hpp"
#include "qpoly.hpp"
#include "series.hpp"

namespace glhom {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& n) { return Json(n.get_str()); }

inline Json to_json(const Rational& r) {
  Json j;
  j["num"] = r.get_num().get_str();
  j["den"] = r.get_den().get_str();
  return j;
}

inline Json to_json(const Valuation& v) {
  if (v.is_infinite()) return Json("inf");
  return Json(v.finite());
}

inline Json to_json(const QPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [exp, coeff] : f.terms()) {
    Json t;
    t["exp"] = exp;
    t["num"] = coeff.get_num().get_str();
    t["den"] = coeff.get_den().get_str();
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

inline Json to_json(const TruncatedSeries<Rational>& a) {
  Json coeffs = Json::array();
  for (long n = 0; n <= a.order(); ++n) coeffs.push_back(to_json(a[n]));
  Json j;
  j["order"] = a.order();
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline Json to_json(const TruncatedSeries<QPolynomial>& a) {
  Json coeffs = Json::array();
  for (long n = 0; n <= a.order(); ++n) coeffs.push_back(to_json(a[n]));
  Json j;
  j["order"] = a.order();
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline Integer integer_from_json(const Json& j) {
  return Integer(j.get<std::string>());
}

inline Rational rational_from_json(const Json& j) {
  return make_rational(Integer(j.at("num").get<std::string>()),
                       Integer(j.at("den").get<std::string>()));
}

inline QPolynomial qpolynomial_from_json(const Json& j) {
  QPolynomial f;
  for (const auto& t : j.at("terms"))
    f += QPolynomial::monomial(rational_from_json(t), t.at("exp").get<long>());
  return f;
}

inline TruncatedSeries<Rational> rational_series_from_json(const Json& j) {
  TruncatedSeries<Rational> a(j.at("order").get<long>());
  const auto& coeffs = j.at("coeffs");
  for (long n = 0; n <= a.order(); ++n)
    a.set(n, rational_from_json(coeffs.at(static_cast<size_t>(n))));
  return a;
}

}  // namespace glhom
