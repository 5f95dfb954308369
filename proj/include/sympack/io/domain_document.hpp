#pragma once
// Domain files:
//   {"type":"ellipsoid","a":"1","b":"2"}       triangle, usable as concave or convex
//   {"type":"ball","a":"2"}                    same with a = b
//   {"type":"polydisk","a":"1","b":"1"}        convex
//   {"type":"concave_pl","vertices":[["0","3"],["1","1"],["2","0"]]}
//   {"type":"convex_pl","vertices":[...]}

#include <set>
#include <string>
#include <variant>

#include "sympack/io/json.hpp"
#include "sympack/toric.hpp"

namespace sympack::io {

struct DomainDocument {
  std::string type;
  std::variant<ConcaveDomain, ConvexDomain> domain;
  bool triangle = false;  // ellipsoid or ball: valid in both roles
};

namespace detail {

inline void check_fields(const Json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw InputError("unknown_field", "unknown field \"" + key + "\"");
}

inline std::vector<Point> vertex_list(const Json& j) {
  if (!j.is_array()) throw InputError("not_an_array", "\"vertices\" must be an array of [x, y] pairs");
  std::vector<Point> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw InputError("bad_vertex", "each vertex must be a pair [x, y]");
    out.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return out;
}

}  // namespace detail

inline DomainDocument parse_domain_json(const Json& j) {
  if (!j.is_object()) throw InputError("not_an_object", "a domain document must be a JSON object");
  const Json& t = detail::field(j, "type");
  if (!t.is_string()) throw InputError("unknown_type", "\"type\" must be a string");
  const std::string type = t.get<std::string>();
  auto build = [&]() -> DomainDocument {
    using detail::field;
    if (type == "ellipsoid") {
      detail::check_fields(j, {"type", "a", "b"});
      return {type, ConcaveDomain::ellipsoid(rational_from_json(field(j, "a")), rational_from_json(field(j, "b"))),
              true};
    }
    if (type == "ball") {
      detail::check_fields(j, {"type", "a"});
      Rational a = rational_from_json(field(j, "a"));
      return {type, ConcaveDomain::ellipsoid(a, a), true};
    }
    if (type == "polydisk") {
      detail::check_fields(j, {"type", "a", "b"});
      return {type, ConvexDomain::polydisk(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")))};
    }
    if (type == "concave_pl") {
      detail::check_fields(j, {"type", "vertices"});
      return {type, ConcaveDomain(detail::vertex_list(field(j, "vertices")))};
    }
    if (type == "convex_pl") {
      detail::check_fields(j, {"type", "vertices"});
      return {type, ConvexDomain(detail::vertex_list(field(j, "vertices")))};
    }
    throw InputError("unknown_type", "unknown domain type \"" + type + "\"");
  };
  DomainDocument doc = build();
  return doc;
}

inline DomainDocument parse_domain_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed_json", std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_domain_json(j);
  } catch (const Json::exception& e) {
    throw InputError("malformed_document", std::string("bad domain document: ") + e.what());
  }
}

inline ConcaveDomain as_concave(const DomainDocument& doc) {
  if (auto* c = std::get_if<ConcaveDomain>(&doc.domain)) return *c;
  throw InputError("wrong_domain_kind", "a concave domain is required, got \"" + doc.type + "\"");
}

inline ConvexDomain as_convex(const DomainDocument& doc) {
  if (auto* v = std::get_if<ConvexDomain>(&doc.domain)) return *v;
  if (doc.triangle) return ConvexDomain(std::get<ConcaveDomain>(doc.domain).vertices());
  throw InputError("wrong_domain_kind", "a convex domain is required, got \"" + doc.type + "\"");
}

inline Json domain_json(const ConcaveDomain& d) {
  Json v = Json::array();
  for (const auto& p : d.vertices()) v.push_back({to_string(p.x), to_string(p.y)});
  return {{"type", "concave_pl"}, {"vertices", v}};
}

inline Json domain_json(const ConvexDomain& d) {
  Json v = Json::array();
  for (const auto& p : d.vertices()) v.push_back({to_string(p.x), to_string(p.y)});
  return {{"type", "convex_pl"}, {"vertices", v}};
}

}  // namespace sympack::io
