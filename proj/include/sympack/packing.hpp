#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "sympack/core/quadratic.hpp"
#include "sympack/core/rational.hpp"
#include "sympack/errors.hpp"
#include "sympack/exceptional.hpp"
#include "sympack/parallel.hpp"

namespace sympack {

// Ball areas R_1 >= ... >= R_k > 0.
class BallConfig {
 public:
  BallConfig() = default;
  explicit BallConfig(std::vector<Rational> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InputError("empty_config", "a ball configuration needs at least one ball");
    for (const auto& r : sizes_)
      if (r <= 0) throw InputError("nonpositive_size", "ball sizes must be positive, got " + r.str());
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
  }
  static BallConfig equal(std::size_t k, const Rational& size = 1) {
    return BallConfig(std::vector<Rational>(k, size));
  }

  const std::vector<Rational>& sizes() const { return sizes_; }
  std::size_t count() const { return sizes_.size(); }
  const Rational& operator[](std::size_t i) const { return sizes_[i]; }

  Rational volume() const {
    Rational v = 0;
    for (const auto& r : sizes_) v += r * r;
    return v;
  }
  Rational total() const {
    Rational s = 0;
    for (const auto& r : sizes_) s += r;
    return s;
  }

  BallConfig scaled(const Rational& lambda) const {
    std::vector<Rational> s = sizes_;
    for (auto& r : s) r *= lambda;
    return BallConfig(std::move(s));
  }
  BallConfig with(const Rational& extra) const {
    std::vector<Rational> s = sizes_;
    s.push_back(extra);
    return BallConfig(std::move(s));
  }
  BallConfig merged(const std::vector<Rational>& more) const {
    std::vector<Rational> s = sizes_;
    s.insert(s.end(), more.begin(), more.end());
    return BallConfig(std::move(s));
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) out += (i ? "," : "") + sizes_[i].str();
    return out;
  }

  friend bool operator==(const BallConfig&, const BallConfig&) = default;

 private:
  std::vector<Rational> sizes_;
};

inline BallConfig parse_ball_list(std::string_view text) {
  std::vector<Rational> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    sizes.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BallConfig(std::move(sizes));
}

enum class Engine { full_tuples, exceptional_only, combined };
enum class Convention { open_target, closed_target };
enum class Attainment { yes, no, unknown };
enum class Decision { yes, no, undecided };

inline std::string to_string(Engine e) {
  switch (e) {
    case Engine::full_tuples: return "full";
    case Engine::exceptional_only: return "exceptional";
    default: return "combined";
  }
}
inline std::string to_string(Convention c) { return c == Convention::open_target ? "open" : "closed"; }
inline std::string to_string(Attainment a) {
  return a == Attainment::yes ? "yes" : (a == Attainment::no ? "no" : "unknown");
}
inline std::string to_string(Decision d) {
  return d == Decision::yes ? "yes" : (d == Decision::no ? "no" : "undecided");
}

inline Engine parse_engine(std::string_view s) {
  if (s == "full" || s == "full-tuples") return Engine::full_tuples;
  if (s == "exceptional" || s == "exceptional-only") return Engine::exceptional_only;
  if (s == "combined") return Engine::combined;
  throw InputError("unknown_engine", "engine must be full, exceptional or combined");
}
inline Convention parse_convention(std::string_view s) {
  if (s == "open" || s == "open-target") return Convention::open_target;
  if (s == "closed" || s == "closed-target") return Convention::closed_target;
  throw InputError("unknown_convention", "convention must be open or closed");
}

struct CapacityResult {
  QuadraticValue lower;
  QuadraticValue upper;
  Attainment attained = Attainment::unknown;
  std::optional<ObstructionTuple> witness;
  std::int64_t degree_searched = 0;
  Engine engine = Engine::combined;
  // Upper bound on every ratio of an unsearched degree; empty when no unsearched class can matter.
  std::optional<QuadraticValue> tail_bound;
  std::vector<std::string> notes;

  bool exact() const { return lower == upper; }
};

struct DegreeOptimum {
  Rational value;
  ObstructionTuple witness;
};

namespace detail {

inline Integer common_denominator(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm_of(l, denominator(x));
  return l;
}

// Largest sum m_i w_i subject to sum(m_i^2 + m_i) <= budget, with w nonincreasing.
// The returned positional vector is the lexicographically smallest optimum.
template <class Int>
std::pair<Int, std::vector<std::int64_t>> max_weighted_multiplicities(const std::vector<Int>& w,
                                                                      std::int64_t budget) {
  const std::size_t k = w.size();
  const std::size_t width = static_cast<std::size_t>(budget) + 1;
  std::vector<Int> best((k + 1) * width, Int(0));
  auto at = [&](std::size_t i, std::size_t b) -> Int& { return best[i * width + b]; };
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t b = 0; b < width; ++b) {
      Int v = at(i + 1, b);
      for (std::int64_t m = 1; static_cast<std::size_t>(m * m + m) <= b; ++m) {
        Int c = Int(m) * w[i] + at(i + 1, b - static_cast<std::size_t>(m * m + m));
        if (c > v) v = c;
      }
      at(i, b) = v;
    }
  }
  std::vector<std::int64_t> m(k, 0);
  Int target = at(0, width - 1);
  std::size_t b = width - 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::int64_t x = 0;; ++x) {
      std::size_t cost = static_cast<std::size_t>(x * x + x);
      if (cost > b) throw std::logic_error("per-degree reconstruction failed");
      if (Int(x) * w[i] + at(i + 1, b - cost) == target) {
        m[i] = x;
        target -= Int(x) * w[i];
        b -= cost;
        break;
      }
    }
  }
  return {at(0, width - 1), std::move(m)};
}

template <class Int>
DegreeOptimum per_degree_max_as(std::int64_t d, const BallConfig& c) {
  Integer scale = common_denominator(c.sizes());
  std::vector<Int> w;
  for (const auto& r : c.sizes()) {
    Integer scaled = numerator(r) * (scale / denominator(r));
    if constexpr (std::is_same_v<Int, Integer>) w.push_back(scaled);
    else w.push_back(scaled.template convert_to<Int>());
  }
  auto [value, m] = max_weighted_multiplicities<Int>(w, d * d + 3 * d);
  return {Rational(Integer(value), scale), ObstructionTuple(d, std::move(m))};
}

inline bool fits_int64(std::int64_t d, const BallConfig& c) {
  Integer scale = common_denominator(c.sizes());
  Integer biggest = numerator(c[0]) * (scale / denominator(c[0]));
  Integer bound = biggest * Integer(d * d + 3 * d + 2);
  return bound < (Integer(1) << 61);
}

// sup over d > searched of (sqrt(V((d - 3t)^2 + c)) + tS) / d, the Cauchy-Schwarz bound for
// classes with sum (m_i - t)^2 <= (d - 3t)^2 + c. Empty when the bound is not available.
inline std::optional<QuadraticValue> shifted_tail(const Rational& V, const Rational& S, const Rational& t,
                                                  const Rational& c, std::int64_t searched) {
  const Rational next = searched + 1;
  const Rational shifted = next - 3 * t;
  const QuadraticValue root_v = QuadraticValue::sqrt(V);
  if (c > 0) {
    // convex in 1/d: the larger of the endpoint values
    auto at_next = QuadraticValue::linear(t * S / next, Rational(1) / next, V * (shifted * shifted + c));
    return max(at_next, root_v);
  }
  // concave in 1/d, but only where the radicand stays nonnegative
  if (shifted <= 0 || shifted * shifted + c < 0) return std::nullopt;
  auto slope = QuadraticValue::linear(t * S, -3 * t, V);
  if (slope.sign() <= 0) return root_v;
  return QuadraticValue::linear(t * S / next, 1 - 3 * t / next, V);
}

inline QuadraticValue full_tuple_tail(const BallConfig& c, std::int64_t searched) {
  Rational V = c.volume(), S = c.total();
  Rational k = static_cast<std::int64_t>(c.count());
  // plain bound: sum m_i R_i <= sqrt((d^2 + 3d) V)
  QuadraticValue plain = QuadraticValue::sqrt(V * (1 + Rational(3) / (searched + 1)));
  // shifted: sum (m_i + 1/2)^2 <= (d + 3/2)^2 + (k - 9)/4
  auto shifted = shifted_tail(V, S, Rational(-1, 2), (k - 9) / 4, searched);
  return shifted ? min(plain, *shifted) : plain;
}

// No exceptional class with at most k entries has degree d when (3d-1)^2 > k(d^2+1).
inline bool exceptional_tail_empty(std::size_t k, std::int64_t searched) {
  if (k >= 9) return false;
  std::int64_t a = 9 - static_cast<std::int64_t>(k);
  std::int64_t d = searched + 1;
  // (9-k)d^2 - 6d + 1 - k is increasing from d >= 3/(9-k) on
  return a * d >= 3 && a * d * d - 6 * d + 1 - static_cast<std::int64_t>(k) > 0;
}

// Exceptional classes satisfy sum (m_i - t)^2 = (d - 3t)^2 + 1 + 2t + (k-9)t^2 exactly.
inline std::optional<QuadraticValue> exceptional_tail(const BallConfig& c, std::int64_t searched) {
  if (exceptional_tail_empty(c.count(), searched)) return std::nullopt;
  Rational V = c.volume(), S = c.total();
  Rational k = static_cast<std::int64_t>(c.count());
  std::vector<Rational> shifts;
  for (int j = -8; j <= 24; ++j) shifts.emplace_back(j, 4);
  for (int j : {1, 2, 4, 5, 7, 8}) shifts.emplace_back(j, 3);
  std::optional<QuadraticValue> best;
  for (const auto& t : shifts) {
    auto b = shifted_tail(V, S, t, 1 + 2 * t + (k - 9) * t * t, searched);
    if (b && (!best || *b < *best)) best = b;
  }
  return best;
}

struct EngineOutcome {
  std::optional<Rational> best;
  std::optional<ObstructionTuple> witness;
  std::optional<QuadraticValue> tail;
};

inline DegreeOptimum per_degree_max_any(std::int64_t d, const BallConfig& c) {
  return fits_int64(d, c) ? per_degree_max_as<std::int64_t>(d, c) : per_degree_max_as<Integer>(d, c);
}

inline EngineOutcome run_full_engine(const BallConfig& c, std::int64_t budget) {
  auto per = parallel_map(static_cast<std::size_t>(budget), [&](std::size_t i) {
    return per_degree_max_any(static_cast<std::int64_t>(i) + 1, c);
  });
  EngineOutcome out;
  for (std::size_t i = 0; i < per.size(); ++i) {
    Rational ratio = per[i].value / static_cast<std::int64_t>(i + 1);
    if (!out.best || ratio > *out.best) {
      out.best = ratio;
      out.witness = per[i].witness;
    }
  }
  out.tail = full_tuple_tail(c, budget);
  return out;
}

inline EngineOutcome run_exceptional_engine(const BallConfig& c, std::int64_t budget,
                                            ExceptionalCatalog* catalog) {
  std::optional<ExceptionalCatalog> local;
  if (!catalog || catalog->k_max() != c.count()) catalog = &local.emplace(c.count());
  EngineOutcome out;
  for (std::int64_t d = 1; d <= budget; ++d) {
    for (const auto& t : catalog->degree(d)) {
      Rational ratio = t.pairing(c.sizes()) / d;
      if (!out.best || ratio > *out.best) {
        out.best = ratio;
        out.witness = t;
      }
    }
  }
  out.tail = exceptional_tail(c, budget);
  return out;
}

}  // namespace detail

// max of sum m_i R_i over nonnegative m with sum(m_i^2 + m_i) <= d^2 + 3d.
inline DegreeOptimum per_degree_max(std::int64_t d, const BallConfig& c) {
  if (d < 1) throw InputError("invalid_degree", "degree must be at least 1");
  return detail::per_degree_max_any(d, c);
}

struct PackingOptions {
  ExceptionalCatalog* catalog = nullptr;  // reused across calls with the same ball count
};

// Capacity inf{R : the balls pack into the open ball B(R)} as an exact value or certified interval.
inline CapacityResult packing_capacity(const BallConfig& c, std::int64_t d_budget,
                                       Engine engine = Engine::combined, const PackingOptions& options = {}) {
  if (d_budget < 1) throw InputError("invalid_budget", "d_budget must be at least 1");
  const QuadraticValue root_v = QuadraticValue::sqrt(c.volume());
  CapacityResult result;
  result.engine = engine;
  result.degree_searched = d_budget;

  std::vector<detail::EngineOutcome> outcomes;
  if (engine != Engine::exceptional_only) outcomes.push_back(detail::run_full_engine(c, d_budget));
  if (engine != Engine::full_tuples) {
    try {
      outcomes.push_back(detail::run_exceptional_engine(c, d_budget, options.catalog));
    } catch (const ResourceError& e) {
      if (engine == Engine::exceptional_only) throw;
      result.notes.push_back(std::string("exceptional enumeration skipped: ") + e.what());
    }
  }

  result.lower = root_v;
  std::optional<QuadraticValue> upper;
  std::optional<Rational> best;
  for (const auto& o : outcomes) {
    QuadraticValue u = root_v;
    if (o.best) {
      if (*o.best > u) u = *o.best;
      if (!best || *o.best > *best || (*o.best == *best && o.witness->degree() < result.witness->degree())) {
        best = o.best;
        result.witness = o.witness;
      }
    }
    if (o.tail) u = max(u, *o.tail);
    if (!upper || u < *upper) {
      upper = u;
      result.tail_bound = o.tail;
    }
  }
  if (best && *best > result.lower) result.lower = *best;
  result.upper = *upper;
  result.attained = best && result.exact() && QuadraticValue(*best) == result.upper ? Attainment::yes
                                                                                 : Attainment::unknown;
  return result;
}

inline Decision decide_from_capacity(const CapacityResult& cap, const Rational& R, Convention convention) {
  const QuadraticValue r(R);
  if (convention == Convention::closed_target) {
    if (r >= cap.upper) return Decision::yes;
    if (r < cap.lower) return Decision::no;
    return Decision::undecided;
  }
  if (r > cap.upper) return Decision::yes;
  if (r < cap.lower) return Decision::no;
  if (cap.exact()) {
    if (cap.attained == Attainment::yes) return Decision::no;
    if (cap.attained == Attainment::no) return Decision::yes;
  }
  return Decision::undecided;
}

struct DecisionOptions {
  std::int64_t d_budget = 20;
  std::int64_t max_degree = 80;  // budgets double up to here while undecided
  Engine engine = Engine::combined;
  ExceptionalCatalog* catalog = nullptr;
};

struct PackingDecision {
  Decision decision = Decision::undecided;
  CapacityResult capacity;
};

inline PackingDecision decide_packing_detailed(const BallConfig& c, const Rational& R, Convention convention,
                                               const DecisionOptions& options = {}) {
  if (R <= 0) throw InputError("nonpositive_target", "target size must be positive");
  std::int64_t budget = std::max<std::int64_t>(1, options.d_budget);
  for (;;) {
    PackingDecision out;
    out.capacity = packing_capacity(c, budget, options.engine, {options.catalog});
    out.decision = decide_from_capacity(out.capacity, R, convention);
    if (out.decision != Decision::undecided || budget >= options.max_degree) return out;
    budget = std::min(options.max_degree, 2 * budget);
  }
}

inline Decision decide_packing(const BallConfig& c, const Rational& R, Convention convention = Convention::open_target,
                               const DecisionOptions& options = {}) {
  return decide_packing_detailed(c, R, convention, options).decision;
}

// Bounds on v(B^4, k) = k / c^2 for k unit balls.
struct FractionBounds {
  QuadraticValue lower;
  QuadraticValue upper;
  CapacityResult capacity;
  bool exact() const { return lower == upper; }
};

inline FractionBounds equal_ball_fraction(std::int64_t k, std::int64_t d_budget, Engine engine = Engine::combined) {
  if (k < 1) throw InputError("invalid_count", "k must be at least 1");
  FractionBounds out;
  out.capacity = packing_capacity(BallConfig::equal(static_cast<std::size_t>(k)), d_budget, engine);
  out.lower = out.capacity.upper.squared().reciprocal() * Rational(k);
  out.upper = out.capacity.lower.squared().reciprocal() * Rational(k);
  return out;
}

}  // namespace sympack
