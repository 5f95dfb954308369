#pragma once
// JSON encodings of exact values and results. Rationals travel as "p/q" strings.

#include <json.hpp>

#include "sympack/core/quadratic.hpp"
#include "sympack/exceptional.hpp"
#include "sympack/packing.hpp"

namespace sympack::io {

using Json = nlohmann::json;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("non_rational", "expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline Json quadratic_json(const QuadraticValue& v) {
  switch (v.kind()) {
    case QuadraticValue::Kind::rational: return {{"kind", "rational"}, {"value", to_string(v.rational())}};
    case QuadraticValue::Kind::square_root: return {{"kind", "sqrt"}, {"sqrt", to_string(v.radicand())}};
    default:
      return {{"kind", "quadratic"},
              {"rational", to_string(v.rational_part())},
              {"coeff", to_string(v.coefficient())},
              {"sqrt", to_string(v.radicand())}};
  }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("not_an_object", "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing_field", std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace detail

inline QuadraticValue quadratic_from_json(const Json& j) {
  const std::string kind = detail::field(j, "kind").get<std::string>();
  if (kind == "rational") return QuadraticValue(rational_from_json(detail::field(j, "value")));
  if (kind == "sqrt") return QuadraticValue::sqrt(rational_from_json(detail::field(j, "sqrt")));
  if (kind == "quadratic")
    return QuadraticValue::linear(rational_from_json(detail::field(j, "rational")),
                                  rational_from_json(detail::field(j, "coeff")),
                                  rational_from_json(detail::field(j, "sqrt")));
  throw InputError("unknown_type", "unknown value kind \"" + kind + "\"");
}

inline Json tuple_json(const ObstructionTuple& t) { return {{"d", t.degree()}, {"m", t.multiplicities()}}; }

inline ObstructionTuple tuple_from_json(const Json& j) {
  return ObstructionTuple(detail::field(j, "d").get<std::int64_t>(),
                          detail::field(j, "m").get<std::vector<std::int64_t>>());
}

inline Json capacity_json(const CapacityResult& r) {
  Json j;
  j["capacity"] = r.exact() ? quadratic_json(r.upper) : Json(nullptr);
  j["lower"] = quadratic_json(r.lower);
  j["upper"] = quadratic_json(r.upper);
  j["exact"] = r.exact();
  j["attained"] = to_string(r.attained);
  j["witness"] = r.witness ? tuple_json(*r.witness) : Json(nullptr);
  j["degree_searched"] = r.degree_searched;
  j["engine"] = to_string(r.engine);
  j["tail_bound"] = r.tail_bound ? quadratic_json(*r.tail_bound) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

inline Attainment parse_attainment(std::string_view s) {
  if (s == "yes") return Attainment::yes;
  if (s == "no") return Attainment::no;
  if (s == "unknown") return Attainment::unknown;
  throw InputError("unknown_value", "unknown attainment \"" + std::string(s) + "\"");
}

inline CapacityResult capacity_from_json(const Json& j) {
  CapacityResult r;
  r.lower = quadratic_from_json(detail::field(j, "lower"));
  r.upper = quadratic_from_json(detail::field(j, "upper"));
  r.attained = parse_attainment(detail::field(j, "attained").get<std::string>());
  if (const auto& w = detail::field(j, "witness"); !w.is_null()) r.witness = tuple_from_json(w);
  r.degree_searched = detail::field(j, "degree_searched").get<std::int64_t>();
  r.engine = parse_engine(detail::field(j, "engine").get<std::string>());
  if (const auto& t = detail::field(j, "tail_bound"); !t.is_null()) r.tail_bound = quadratic_from_json(t);
  r.notes = detail::field(j, "notes").get<std::vector<std::string>>();
  return r;
}

inline Json rational_list_json(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

inline std::vector<Rational> rational_list_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("not_an_array", "expected a JSON array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace sympack::io
