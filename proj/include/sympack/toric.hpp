#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympack/core/quadratic.hpp"
#include "sympack/core/rational.hpp"
#include "sympack/errors.hpp"
#include "sympack/packing.hpp"

namespace sympack {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

namespace detail {

inline Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

// Drops repeated points and interior points of straight runs.
inline std::vector<Point> simplify_chain(const std::vector<Point>& in) {
  std::vector<Point> out;
  for (const auto& p : in) {
    if (!out.empty() && out.back() == p) continue;
    while (out.size() >= 2 && cross(out[out.size() - 2], out.back(), p) == 0) out.pop_back();
    out.push_back(p);
  }
  return out;
}

inline Rational polygon_area_with_origin(const std::vector<Point>& v) {
  // origin, last vertex (a,0), ..., first vertex (0,b)
  Rational twice = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) twice += v[i].x * v[i + 1].y - v[i + 1].x * v[i].y;
  return abs(twice) / 2;
}

// A chain listed from the x-axis back to the y-axis.
inline void check_orientation(const std::vector<Point>& v) {
  if (v.size() < 2) throw InputError("too_few_vertices", "a domain boundary needs at least two vertices");
  if (v.front().y == 0 && v.front().x > 0 && v.back().x == 0 && v.back().y > 0)
    throw InputError("wrong_orientation", "vertices must run from the y-axis to the x-axis");
}

inline void check_endpoints(const std::vector<Point>& v) {
  if (v.size() < 2) throw InputError("too_few_vertices", "a domain boundary needs at least two vertices");
  const Point& first = v.front();
  const Point& last = v.back();
  if (first.x != 0 || first.y <= 0)
    throw InputError("not_on_axes", "first vertex must be (0, b) with b > 0");
  if (last.y != 0 || last.x <= 0)
    throw InputError("not_on_axes", "last vertex must be (a, 0) with a > 0");
}

}  // namespace detail

// Region under the graph of a convex, decreasing, piecewise-linear function from (0,b) to (a,0).
class ConcaveDomain {
 public:
  explicit ConcaveDomain(const std::vector<Point>& vertices) {
    detail::check_orientation(vertices);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      const Point &p = vertices[i], &q = vertices[i + 1];
      if (q.y - p.y >= 0) throw InputError("not_monotone", "y not decreasing along the boundary");
      if (q.x - p.x <= 0) throw InputError("not_monotone", "x not increasing along the boundary");
    }
    vertices_ = detail::simplify_chain(vertices);
    detail::check_endpoints(vertices_);
    for (std::size_t i = 0; i + 2 < vertices_.size(); ++i)
      if (detail::cross(vertices_[i], vertices_[i + 1], vertices_[i + 2]) < 0)
        throw InputError("non_convex_boundary", "slopes must be nondecreasing (graph of a convex function)");
  }

  static ConcaveDomain ellipsoid(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw InputError("nonpositive_size", "ellipsoid parameters must be positive");
    return ConcaveDomain({{0, b}, {a, 0}});
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  const Rational& width() const { return vertices_.back().x; }
  const Rational& height() const { return vertices_.front().y; }
  Rational area() const { return detail::polygon_area_with_origin(vertices_); }

  ConcaveDomain scaled(const Rational& lambda) const {
    std::vector<Point> v = vertices_;
    for (auto& p : v) p = {p.x * lambda, p.y * lambda};
    return ConcaveDomain(v);
  }

  friend bool operator==(const ConcaveDomain&, const ConcaveDomain&) = default;

 private:
  std::vector<Point> vertices_;
};

// Convex region bounded by the axes and a concave, nonincreasing graph from (0,b) to (a,0).
class ConvexDomain {
 public:
  explicit ConvexDomain(const std::vector<Point>& vertices) {
    detail::check_orientation(vertices);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      const Point &p = vertices[i], &q = vertices[i + 1];
      if (p == q) continue;
      if (q.y - p.y > 0) throw InputError("not_monotone", "y increasing along the boundary");
      if (q.x - p.x < 0) throw InputError("not_monotone", "x decreasing along the boundary");
    }
    vertices_ = detail::simplify_chain(vertices);
    detail::check_endpoints(vertices_);
    for (std::size_t i = 0; i + 2 < vertices_.size(); ++i)
      if (detail::cross(vertices_[i], vertices_[i + 1], vertices_[i + 2]) > 0)
        throw InputError("non_convex_boundary", "region must be convex (slopes nonincreasing)");
  }

  static ConvexDomain ball(const Rational& a) { return ellipsoid(a, a); }
  static ConvexDomain ellipsoid(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw InputError("nonpositive_size", "ellipsoid parameters must be positive");
    return ConvexDomain({{0, b}, {a, 0}});
  }
  static ConvexDomain polydisk(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw InputError("nonpositive_size", "polydisk parameters must be positive");
    return ConvexDomain({{0, b}, {a, b}, {a, 0}});
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  const Rational& width() const { return vertices_.back().x; }
  const Rational& height() const { return vertices_.front().y; }
  Rational area() const { return detail::polygon_area_with_origin(vertices_); }

  // least t with the region inside {x + y <= t}
  Rational head() const {
    Rational t = 0;
    for (const auto& p : vertices_) t = std::max<Rational>(t, p.x + p.y);
    return t;
  }

  ConvexDomain scaled(const Rational& lambda) const {
    std::vector<Point> v = vertices_;
    for (auto& p : v) p = {p.x * lambda, p.y * lambda};
    return ConvexDomain(v);
  }

  friend bool operator==(const ConvexDomain&, const ConvexDomain&) = default;

 private:
  std::vector<Point> vertices_;
};

struct WeightData {
  std::optional<Rational> head;
  std::vector<Rational> weights;  // nonincreasing

  Rational sum_of_squares() const {
    Rational s = 0;
    for (const auto& w : weights) s += w * w;
    return s;
  }
};

// One peeled triangle together with the legs of the region it came from.
struct WeightStage {
  Rational weight;
  Rational width;
  Rational height;
};

struct WeightLimits {
  std::size_t max_weights = 2'000'000;
};

namespace detail {

inline void check_weight_budget(std::size_t count, const WeightLimits& limits) {
  if (count > limits.max_weights) throw ResourceError("max_weights", "weight expansion exceeded its size budget");
}

// Triangle peeling on concave regions given by vertex chains.
inline void peel_concave(std::vector<Point> start, std::vector<WeightStage>& stages, const WeightLimits& limits) {
  std::vector<std::vector<Point>> stack;
  stack.push_back(std::move(start));
  while (!stack.empty()) {
    std::vector<Point> v = std::move(stack.back());
    stack.pop_back();
    Rational w = v.front().x + v.front().y;
    for (const auto& p : v) w = std::min<Rational>(w, p.x + p.y);
    stages.push_back({w, v.back().x, v.front().y});
    check_weight_budget(stages.size(), limits);
    std::size_t left = 0, right = v.size() - 1;
    while (v[left].x + v[left].y != w) ++left;
    while (v[right].x + v[right].y != w) --right;
    if (left > 0) {
      std::vector<Point> piece;
      for (std::size_t i = 0; i <= left; ++i) piece.push_back({v[i].x, v[i].x + v[i].y - w});
      stack.push_back(simplify_chain(piece));
    }
    if (right + 1 < v.size()) {
      std::vector<Point> piece;
      for (std::size_t i = right; i < v.size(); ++i) piece.push_back({v[i].x + v[i].y - w, v[i].y});
      stack.push_back(simplify_chain(piece));
    }
  }
}

inline std::vector<Rational> sorted_weights(const std::vector<WeightStage>& stages) {
  std::vector<Rational> out;
  out.reserve(stages.size());
  for (const auto& s : stages) out.push_back(s.weight);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace detail

inline std::vector<WeightStage> weight_expansion_stages(const ConcaveDomain& omega, const WeightLimits& limits = {}) {
  std::vector<WeightStage> stages;
  detail::peel_concave(omega.vertices(), stages, limits);
  return stages;
}

inline WeightData weight_sequence(const ConcaveDomain& omega, const WeightLimits& limits = {}) {
  return {std::nullopt, detail::sorted_weights(weight_expansion_stages(omega, limits))};
}

// The (at most two) corners of T(head) outside omega, each moved to standard concave position.
inline std::vector<ConcaveDomain> complement_corners(const ConvexDomain& omega) {
  const auto& v = omega.vertices();
  const Rational b = omega.head();
  std::size_t left = 0, right = v.size() - 1;
  while (v[left].x + v[left].y != b) ++left;
  while (v[right].x + v[right].y != b) --right;
  std::vector<ConcaveDomain> out;
  if (left > 0) {
    std::vector<Point> piece;
    for (std::size_t i = 0; i <= left; ++i) piece.push_back({v[i].x, b - v[i].x - v[i].y});
    out.emplace_back(piece);
  }
  if (right + 1 < v.size()) {
    std::vector<Point> piece;
    for (std::size_t i = right; i < v.size(); ++i) piece.push_back({b - v[i].x - v[i].y, v[i].y});
    out.emplace_back(piece);
  }
  return out;
}

inline WeightData negative_weight_sequence(const ConvexDomain& omega, const WeightLimits& limits = {}) {
  std::vector<WeightStage> stages;
  for (const auto& corner : complement_corners(omega)) detail::peel_concave(corner.vertices(), stages, limits);
  return {omega.head(), detail::sorted_weights(stages)};
}

// Euclid's algorithm on (a, b): floor(a/b) squares of side b at each step.
inline WeightData ellipsoid_weights(Rational a, Rational b, const WeightLimits& limits = {}) {
  if (a <= 0 || b <= 0) throw InputError("nonpositive_size", "ellipsoid parameters must be positive");
  std::vector<Rational> out;
  while (a > 0 && b > 0) {
    if (a < b) std::swap(a, b);
    Integer q = floor_of(a / b);
    if (Integer(out.size()) + q > Integer(limits.max_weights))
      throw ResourceError("max_weights", "weight expansion exceeded its size budget");
    out.insert(out.end(), q.convert_to<std::size_t>(), b);
    a -= Rational(q) * b;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return {std::nullopt, std::move(out)};
}

struct ToricDecision {
  Decision decision = Decision::undecided;
  BallConfig config;  // weights of the source together with negative weights of the target
  Rational target;    // head of the target
  CapacityResult capacity;
};

namespace detail {

// A tight class at scale 1 still pairs with some source ball, so every larger scale fails.
inline bool tight_class_grows(const CapacityResult& cap, const BallConfig& config, const std::vector<Rational>& source,
                              const Rational& head) {
  if (source.empty()) return false;
  if (!cap.witness) return true;  // the volume bound is tight
  const auto& t = *cap.witness;
  if (QuadraticValue(t.pairing(config.sizes()) / t.degree()) != QuadraticValue(head)) return true;
  std::size_t len = 0;
  while (len < t.length() && t.multiplicity(len) > 0) ++len;
  if (len == 0) return false;
  return source.front() >= config[len - 1];
}

}  // namespace detail

// Source balls are compact and must move strictly inside; the complement balls of the target
// are fixed. open_target: yes iff some slightly enlarged source still fits. closed_target
// accepts the boundary case.
inline ToricDecision decide_concave_into_convex_detailed(const ConcaveDomain& source, const ConvexDomain& target,
                                                         Convention convention = Convention::open_target,
                                                         const DecisionOptions& options = {}) {
  ToricDecision out;
  auto neg = negative_weight_sequence(target);
  auto src = weight_sequence(source).weights;
  out.config = BallConfig(src).merged(neg.weights);
  out.target = *neg.head;
  auto d = decide_packing_detailed(out.config, out.target, Convention::closed_target, options);
  out.capacity = d.capacity;
  out.decision = d.decision;
  if (d.decision != Decision::yes || convention == Convention::closed_target) return out;
  if (d.capacity.upper < QuadraticValue(out.target)) return out;
  // capacity equals the head exactly
  if (detail::tight_class_grows(d.capacity, out.config, src, out.target)) {
    out.decision = Decision::no;
    return out;
  }
  for (int j = 4; j <= 32; j *= 2) {
    Rational lambda = 1 + Rational(1, Integer(1) << j);
    auto scaled = src;
    for (auto& w : scaled) w *= lambda;
    auto grown = decide_packing_detailed(BallConfig(scaled).merged(neg.weights), out.target, Convention::closed_target,
                                         options);
    if (grown.decision == Decision::yes) return out;
  }
  out.decision = Decision::undecided;
  return out;
}

inline Decision decide_concave_into_convex(const ConcaveDomain& source, const ConvexDomain& target,
                                           Convention convention = Convention::open_target,
                                           const DecisionOptions& options = {}) {
  return decide_concave_into_convex_detailed(source, target, convention, options).decision;
}

// ---------------------------------------------------------------------------------------------
// Domains with quadratic-irrational parameters, approached by rational domains from inside and
// outside.

// Successive continued-fraction convergents bracketing v: lo <= v <= hi, with the bracket
// shrinking as level grows. Exact (lo == hi == v) once a rational v's expansion ends.
inline std::pair<Rational, Rational> convergent_bracket(const QuadraticValue& v, int level) {
  auto floor_q = [](const QuadraticValue& x) {
    for (unsigned bits = 32;; bits *= 2) {
      Integer lo = floor_of(x.lower_bound(bits)), hi = floor_of(x.upper_bound(bits));
      if (lo == hi) return lo;
      if (x.is_rational()) return floor_of(x.rational());
    }
  };
  Integer p0 = 1, q0 = 0, p1, q1 = 1;
  QuadraticValue x = v;
  Integer a = floor_q(x);
  p1 = a;
  std::pair<Rational, Rational> best{Rational(p1), Rational(p1) + 1};
  for (int i = 0; i < level; ++i) {
    QuadraticValue frac = x - Rational(a);
    if (frac.sign() == 0) return {Rational(p1, q1), Rational(p1, q1)};
    x = frac.reciprocal();
    a = floor_q(x);
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    Rational c1(p1, q1), c2(p2, q2);
    best = c1 < c2 ? std::pair{c1, c2} : std::pair{c2, c1};
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
  }
  if (QuadraticValue(best.second) < v || QuadraticValue(best.first) > v) best = {best.first, best.second + 1};
  return best;
}

struct ConcaveApproximation {
  std::function<ConcaveDomain(int)> inner, outer;
};
struct ConvexApproximation {
  std::function<ConvexDomain(int)> inner, outer;
};

namespace detail {
inline std::pair<Rational, Rational> positive_bracket(const QuadraticValue& v, int level) {
  if (v.sign() <= 0) throw InputError("nonpositive_size", "domain parameters must be positive");
  auto br = convergent_bracket(v, level);
  for (int extra = 1; br.first <= 0; ++extra) br.first = convergent_bracket(v, level + extra).first;
  return br;
}

template <class Domain>
std::function<Domain(int)> bracketed(QuadraticValue a, QuadraticValue b, bool inner,
                                     Domain (*make)(const Rational&, const Rational&)) {
  return [=](int level) {
    auto ba = positive_bracket(a, level), bb = positive_bracket(b, level);
    return inner ? make(ba.first, bb.first) : make(ba.second, bb.second);
  };
}
}  // namespace detail

inline ConcaveApproximation approximate_concave_ellipsoid(QuadraticValue a, QuadraticValue b) {
  return {detail::bracketed<ConcaveDomain>(a, b, true, &ConcaveDomain::ellipsoid),
          detail::bracketed<ConcaveDomain>(a, b, false, &ConcaveDomain::ellipsoid)};
}

inline ConvexApproximation approximate_convex_ellipsoid(QuadraticValue a, QuadraticValue b) {
  return {detail::bracketed<ConvexDomain>(a, b, true, &ConvexDomain::ellipsoid),
          detail::bracketed<ConvexDomain>(a, b, false, &ConvexDomain::ellipsoid)};
}

inline ConvexApproximation approximate_polydisk(QuadraticValue a, QuadraticValue b) {
  return {detail::bracketed<ConvexDomain>(a, b, true, &ConvexDomain::polydisk),
          detail::bracketed<ConvexDomain>(a, b, false, &ConvexDomain::polydisk)};
}

inline ConvexApproximation approximate_ball(QuadraticValue a) { return approximate_convex_ellipsoid(a, a); }

// yes once an outer source fits an inner target; no once an inner source fails an outer target.
inline Decision decide_by_approximation(const ConcaveApproximation& source, const ConvexApproximation& target,
                                        Convention convention = Convention::open_target, int max_level = 8,
                                        const DecisionOptions& options = {}) {
  for (int level = 1; level <= max_level; ++level) {
    if (decide_concave_into_convex(source.outer(level), target.inner(level), convention, options) == Decision::yes)
      return Decision::yes;
    if (decide_concave_into_convex(source.inner(level), target.outer(level), convention, options) == Decision::no)
      return Decision::no;
  }
  return Decision::undecided;
}

}  // namespace sympack
