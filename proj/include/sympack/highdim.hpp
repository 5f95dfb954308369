#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sympack/exceptional.hpp"
#include "sympack/packing.hpp"
#include "sympack/parallel.hpp"

namespace sympack {

// Balls B^{2n}(R_i) into B^{2n}(R).
struct HigherDimProblem {
  std::int64_t n = 3;
  BallConfig sizes;
  Rational target;

  HigherDimProblem(std::int64_t half_dim, BallConfig balls, Rational R)
      : n(half_dim), sizes(std::move(balls)), target(std::move(R)) {
    if (n < 2) throw InputError("invalid_dimension", "half-dimension n must be at least 2");
    if (target <= 0) throw InputError("nonpositive_target", "target size must be positive");
  }
};

// real index of a genus-g curve in class dA - sum m_i E_i of the n-fold blowup
inline std::int64_t fredholm_index(std::int64_t n, std::int64_t g, const ObstructionTuple& t) {
  if (n < 2) throw InputError("invalid_dimension", "half-dimension n must be at least 2");
  if (g < 0) throw InputError("invalid_genus", "genus must be nonnegative");
  return (n - 3) * (2 - 2 * g) + 2 * (n + 1) * t.degree() - 2 * (n - 1) * t.sum();
}

inline Rational curve_energy(const HigherDimProblem& p, const ObstructionTuple& t) {
  if (t.length() > p.sizes.count()) throw InputError("tuple_too_long", "tuple has more entries than balls");
  return t.degree() * p.target - t.pairing(p.sizes.sizes());
}

namespace detail {

inline void check_pairwise(const HigherDimProblem& p) {
  // sizes are sorted, so the two largest decide
  if (p.sizes.count() >= 2 && p.sizes[0] + p.sizes[1] > p.target)
    throw HypothesisError("pairwise hypothesis fails for balls 1 and 2: " + to_string(p.sizes[0]) + " + " +
                          to_string(p.sizes[1]) + " > " + to_string(p.target));
}

// Number of m in [0, cap]^k with sum exactly s, for s = 0..smax.
inline std::vector<Integer> bounded_composition_counts(std::size_t k, std::int64_t cap, std::int64_t smax) {
  std::vector<Integer> c(static_cast<std::size_t>(smax) + 1, 0), next(c.size());
  c[0] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Integer window = 0;
    for (std::int64_t s = 0; s <= smax; ++s) {
      window += c[s];
      if (s - cap - 1 >= 0) window -= c[s - cap - 1];
      next[s] = window;
    }
    std::swap(c, next);
  }
  return c;
}

// Largest sum m_i R_i with m_i <= cap and sum m_i = s: fill the biggest balls first.
inline Rational greedy_pairing(const BallConfig& sizes, std::int64_t cap, std::int64_t s) {
  Rational total = 0;
  for (std::size_t i = 0; i < sizes.count() && s > 0; ++i) {
    std::int64_t take = std::min(cap, s);
    total += take * sizes[i];
    s -= take;
  }
  return total;
}

}  // namespace detail

struct EnergyViolation {
  ObstructionTuple tuple;
  Rational energy;
  std::int64_t index = 0;
};

struct VerificationReport {
  std::int64_t n = 0;
  std::int64_t d_max = 0;
  Integer tuples_scanned = 0;  // tuples meeting the index and one-ball conditions
  std::int64_t classes_checked = 0;
  std::vector<EnergyViolation> violations;
  bool exhaustive = false;
};

struct VerifyOptions {
  bool exhaustive = false;            // list every tuple instead of bounding each (d, sum) class
  std::size_t max_listed = 100'000;   // violations reported in full, per degree
};

namespace detail {

// Walk every m in [0, d]^k with sum s; record the ones with negative energy.
inline void list_class(const HigherDimProblem& p, std::int64_t d, std::int64_t s, std::size_t max_listed,
                       std::vector<EnergyViolation>& out, Integer* counted) {
  const std::size_t k = p.sizes.count();
  std::vector<std::int64_t> m(k, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == k) {
      if (counted) *counted += 1;
      Rational e = d * p.target;
      for (std::size_t j = 0; j < k; ++j) e -= m[j] * p.sizes[j];
      if (e < 0 && out.size() < max_listed) {
        ObstructionTuple t(d, m);
        out.push_back({t, e, fredholm_index(p.n, 0, t)});
      }
      return;
    }
    std::int64_t room = static_cast<std::int64_t>(k - i - 1) * d;
    for (std::int64_t x = std::max<std::int64_t>(0, left - room); x <= std::min(d, left); ++x) {
      m[i] = x;
      rec(i + 1, left - x);
    }
    m[i] = 0;
  };
  rec(0, s);
}

}  // namespace detail

// Every tuple with d <= d_max, m_i <= d and nonnegative genus-zero index has nonnegative energy,
// provided R_i + R_j <= R for every pair.
inline VerificationReport verify_no_new_obstruction(const HigherDimProblem& p, std::int64_t d_max,
                                                    const VerifyOptions& options = {}) {
  if (p.n < 3) throw InputError("invalid_dimension", "verification needs n >= 3");
  if (d_max < 1) throw InputError("invalid_budget", "d_max must be at least 1");
  detail::check_pairwise(p);
  struct PerDegree {
    Integer scanned = 0;
    std::int64_t classes = 0;
    std::vector<EnergyViolation> violations;
  };
  const std::int64_t k = static_cast<std::int64_t>(p.sizes.count());
  auto per = parallel_map(static_cast<std::size_t>(d_max), [&](std::size_t idx) {
    const std::int64_t d = static_cast<std::int64_t>(idx) + 1;
    // index >= 0  <=>  sum m <= ((n-3) + (n+1)d) / (n-1)
    std::int64_t smax = std::min(k * d, ((p.n - 3) + (p.n + 1) * d) / (p.n - 1));
    PerDegree out;
    if (options.exhaustive) {
      for (std::int64_t s = 0; s <= smax; ++s) {
        ++out.classes;
        detail::list_class(p, d, s, options.max_listed, out.violations, &out.scanned);
      }
      return out;
    }
    auto counts = detail::bounded_composition_counts(p.sizes.count(), d, smax);
    for (std::int64_t s = 0; s <= smax; ++s) {
      ++out.classes;
      out.scanned += counts[s];
      if (d * p.target - detail::greedy_pairing(p.sizes, d, s) < 0)
        detail::list_class(p, d, s, options.max_listed, out.violations, nullptr);
    }
    return out;
  });
  VerificationReport report;
  report.n = p.n;
  report.d_max = d_max;
  report.exhaustive = options.exhaustive;
  for (auto& x : per) {
    report.tuples_scanned += x.scanned;
    report.classes_checked += x.classes;
    for (auto& v : x.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

struct ConjectureAResult {
  Decision decision = Decision::no;
  std::string status;  // "conjectural" for yes, "proved necessary" for no
  std::string reason;
};

// Volume and pairwise two-ball conditions, both strict.
inline ConjectureAResult conjectureA_feasible(const HigherDimProblem& p) {
  if (p.n < 3) throw InputError("invalid_dimension", "the higher-dimensional conjecture needs n >= 3");
  auto power = [&](const Rational& x) {
    Rational r = 1;
    for (std::int64_t i = 0; i < p.n; ++i) r *= x;
    return r;
  };
  Rational vol = 0;
  for (const auto& r : p.sizes.sizes()) vol += power(r);
  if (vol >= power(p.target)) return {Decision::no, "proved necessary", "volume: sum R_i^n >= R^n"};
  if (p.sizes.count() >= 2 && p.sizes[0] + p.sizes[1] >= p.target)
    return {Decision::no, "proved necessary", "two-ball: R_1 + R_2 >= R"};
  return {Decision::yes, "conjectural", "volume and two-ball conditions hold strictly"};
}

struct EqualPackingValue {
  QuadraticValue lower;
  QuadraticValue upper;
  std::string status;  // "known" or "conjectural"
  std::vector<std::string> notes;
  bool exact() const { return lower == upper; }
};

// ceil((17/6)^n)
inline Integer equal_packing_threshold(std::int64_t n) {
  Rational r = 1;
  for (std::int64_t i = 0; i < n; ++i) r *= Rational(17, 6);
  return ceil_of(r);
}

inline bool is_perfect_power(std::int64_t k, std::int64_t n) {
  for (std::int64_t b = 1;; ++b) {
    Integer p = 1;
    for (std::int64_t i = 0; i < n; ++i) p *= b;
    if (p == k) return true;
    if (p > k) return false;
  }
}

// Supremal fraction of the volume of CP^n filled by k equal balls.
inline EqualPackingValue equal_packing_value(std::int64_t n, std::int64_t k, std::int64_t d_budget = 30) {
  if (n < 2) throw InputError("invalid_dimension", "half-dimension n must be at least 2");
  if (k < 1) throw InputError("invalid_count", "k must be at least 1");
  EqualPackingValue out;
  if (n == 2) {
    auto f = equal_ball_fraction(k, d_budget);
    out.lower = f.lower;
    out.upper = f.upper;
    out.status = f.exact() ? "known" : "bounds";
    return out;
  }
  Integer two_n = Integer(1) << static_cast<unsigned>(n);
  auto set = [&](Rational v, std::string status) {
    out.lower = out.upper = QuadraticValue(v);
    out.status = std::move(status);
  };
  if (k == 1 || is_perfect_power(k, n)) {
    set(1, "known");
  } else if (k <= two_n) {
    set(Rational(k) / Rational(two_n), "known");
    if (2 * k > two_n) out.notes.push_back("k/2^n extended to 2^(n-1) < k < 2^n");
  } else if (k >= equal_packing_threshold(n)) {
    set(1, "known");
  } else {
    set(1, "conjectural");
  }
  return out;
}

}  // namespace sympack
