#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "sympack/core/rational.hpp"
#include "sympack/errors.hpp"
#include "sympack/toric.hpp"

namespace sympack {

// c_0, c_1, ... computed on demand; prefixes are cached and only ever extended.
class CapacitySequence {
 public:
  // prefix(n) must return exactly c_0..c_n
  using Generator = std::function<std::vector<Rational>(std::size_t n)>;

  explicit CapacitySequence(Generator gen) : state_(std::make_shared<State>()) { state_->gen = std::move(gen); }

  Rational at(std::size_t k) const { return prefix(k)[k]; }

  std::vector<Rational> prefix(std::size_t n) const {
    {
      std::shared_lock lock(state_->mutex);
      if (state_->cache.size() > n) return {state_->cache.begin(), state_->cache.begin() + n + 1};
    }
    std::unique_lock lock(state_->mutex);
    if (state_->cache.size() <= n) {
      std::size_t want = std::max(n, 2 * state_->cache.size());
      state_->cache = state_->gen(want);
    }
    return {state_->cache.begin(), state_->cache.begin() + n + 1};
  }

 private:
  struct State {
    Generator gen;
    std::shared_mutex mutex;
    std::vector<Rational> cache;
  };
  std::shared_ptr<State> state_;  // copies share the cache
};

namespace detail {

// d with d(d+1)/2 <= n < (d+1)(d+2)/2
inline std::int64_t ball_index(std::int64_t n) {
  return static_cast<std::int64_t>((isqrt(Integer(8 * n + 1)) - 1) / 2);
}

inline std::int64_t triangular(std::int64_t d) { return d * (d + 1) / 2; }

inline Integer common_scale(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm_of(l, denominator(x));
  return l;
}

// Capacities 0..J of the disjoint union of balls with the given integer weights.
template <class T>
std::vector<T> ball_union_prefix(const std::vector<T>& weights, std::size_t J) {
  std::vector<T> u(J + 1, T(0)), next(J + 1);
  for (const auto& w : weights) {
    for (std::size_t j = 0; j <= J; ++j) {
      T best = u[j];
      for (std::int64_t d = 1; triangular(d) <= static_cast<std::int64_t>(j); ++d) {
        T cand = u[j - triangular(d)] + w * d;
        if (cand > best) best = cand;
      }
      next[j] = std::move(best);
    }
    std::swap(u, next);
  }
  return u;
}

}  // namespace detail

inline Rational ech_ball(const Rational& a, std::int64_t k) {
  if (a <= 0) throw InputError("nonpositive_size", "ball size must be positive");
  if (k < 0) throw InputError("negative_index", "index must be nonnegative");
  return a * detail::ball_index(k);
}

namespace detail {

inline std::int64_t lattice_count(const Integer& t, const Integer& A, const Integer& B) {
  std::int64_t n = 0;
  for (Integer m = 0; m * A <= t; ++m) n += static_cast<std::int64_t>((t - m * A) / B) + 1;
  return n;
}

// smallest integer t with at least k+1 points ma + nb <= t, both sides scaled to integers
inline Integer ellipsoid_scaled(const Integer& A, const Integer& B, std::int64_t k) {
  Integer lo = 0, hi = std::min(A, B) * (k + 1);
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (lattice_count(mid, A, B) >= k + 1) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace detail

inline Rational ech_ellipsoid(const Rational& a, const Rational& b, std::int64_t k) {
  if (a <= 0 || b <= 0) throw InputError("nonpositive_size", "ellipsoid parameters must be positive");
  if (k < 0) throw InputError("negative_index", "index must be nonnegative");
  Integer L = detail::common_scale({a, b});
  return Rational(detail::ellipsoid_scaled(numerator(a * L), numerator(b * L), k)) / L;
}

inline CapacitySequence ball_sequence(const Rational& a) {
  if (a <= 0) throw InputError("nonpositive_size", "ball size must be positive");
  return CapacitySequence([a](std::size_t n) {
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= n; ++k) out.push_back(ech_ball(a, static_cast<std::int64_t>(k)));
    return out;
  });
}

inline CapacitySequence ellipsoid_sequence(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) throw InputError("nonpositive_size", "ellipsoid parameters must be positive");
  return CapacitySequence([a, b](std::size_t n) {
    Integer L = detail::common_scale({a, b});
    Integer A = numerator(a * L), B = numerator(b * L);
    Integer top = detail::ellipsoid_scaled(A, B, static_cast<std::int64_t>(n));
    std::vector<Integer> vals;
    for (Integer m = 0; m * A <= top; ++m)
      for (Integer j = 0; m * A + j * B <= top; ++j) vals.push_back(m * A + j * B);
    std::sort(vals.begin(), vals.end());
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= n; ++k) out.push_back(Rational(vals[k]) / L);
    return out;
  });
}

inline CapacitySequence zero_sequence() {
  return CapacitySequence([](std::size_t n) { return std::vector<Rational>(n + 1, Rational(0)); });
}

// max over i + j = k of A_i + B_j
inline Rational ech_union(const CapacitySequence& A, const CapacitySequence& B, std::int64_t k) {
  if (k < 0) throw InputError("negative_index", "index must be nonnegative");
  auto a = A.prefix(static_cast<std::size_t>(k)), b = B.prefix(static_cast<std::size_t>(k));
  Rational best = a[k] + b[0];
  for (std::int64_t i = 0; i < k; ++i) best = std::max<Rational>(best, a[i] + b[k - i]);
  return best;
}

inline CapacitySequence union_sequence(const CapacitySequence& A, const CapacitySequence& B) {
  return CapacitySequence([A, B](std::size_t n) {
    auto a = A.prefix(n), b = B.prefix(n);
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      out[k] = a[k] + b[0];
      for (std::size_t i = 0; i < k; ++i) out[k] = std::max<Rational>(out[k], a[i] + b[k - i]);
    }
    return out;
  });
}

// Disjoint union of balls B(w_1), B(w_2), ...
inline CapacitySequence balls_sequence(std::vector<Rational> weights) {
  for (const auto& w : weights)
    if (w <= 0) throw InputError("nonpositive_size", "ball size must be positive");
  return CapacitySequence([weights = std::move(weights)](std::size_t n) {
    Integer L = detail::common_scale(weights);
    std::vector<Integer> scaled;
    for (const auto& w : weights) scaled.push_back(numerator(w * L));
    auto u = detail::ball_union_prefix(scaled, n);
    std::vector<Rational> out;
    for (const auto& x : u) out.push_back(Rational(x) / L);
    return out;
  });
}

inline CapacitySequence concave_sequence(const ConcaveDomain& omega, const WeightLimits& limits = {}) {
  return balls_sequence(weight_sequence(omega, limits).weights);
}

inline Rational ech_concave(const ConcaveDomain& omega, std::int64_t k) {
  if (k < 0) throw InputError("negative_index", "index must be nonnegative");
  return concave_sequence(omega).at(static_cast<std::size_t>(k));
}

struct ConvexEchOptions {
  std::size_t j_budget = 100'000;  // largest shift we are willing to scan
};

namespace detail {

// best[k] = min over 0 <= j <= J of b D(k+j) - U_j
template <class T>
std::vector<Integer> shift_minimize(const Integer& b_, const std::vector<Integer>& w_, std::size_t n, std::size_t J) {
  T b = static_cast<T>(b_);
  std::vector<T> w;
  for (const auto& x : w_) w.push_back(static_cast<T>(x));
  auto u = ball_union_prefix(w, J);
  std::vector<T> head_seq(n + J + 1);
  for (std::size_t i = 0; i < head_seq.size(); ++i) head_seq[i] = b * ball_index(static_cast<std::int64_t>(i));
  std::vector<Integer> best(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    T m = head_seq[k] - u[0];
    for (std::size_t j = 1; j <= J; ++j) {
      T t = head_seq[k + j] - u[j];
      if (t < m) m = t;
    }
    best[k] = Integer(m);
  }
  return best;
}

// c_k = min over j of [b D(k+j) - U_j], with U the union of the negative-weight balls. For j past
// the cutoff every term is >= the running minimum:
//   D(n) >= sqrt(2n) - 3/2 and U_j <= sqrt(W) sqrt(2j), W = sum w^2 < b^2,
// so the term is at least (b - sqrt W) sqrt(2j) - 3b/2.
inline std::vector<Rational> convex_prefix(const Rational& head, const std::vector<Rational>& negs, std::size_t n,
                                           const ConvexEchOptions& options) {
  std::vector<Rational> all = negs;
  all.push_back(head);
  Integer L = common_scale(all);
  Integer b = numerator(head * L);
  std::vector<Integer> w;
  Rational W = 0;
  for (const auto& x : negs) {
    w.push_back(numerator(x * L));
    W += x * x;
  }
  W *= L * L;
  Rational r_hi;
  for (unsigned bits = 16;; bits *= 2) {
    r_hi = sqrt_upper(W, bits);
    if (r_hi < Rational(b)) break;
    if (bits > 4096) throw std::logic_error("convex domain with head^2 <= sum of negative weights squared");
  }
  auto cutoff = [&](const Integer& m) {
    Rational x = (Rational(m) + Rational(3 * b, 2)) / (Rational(b) - r_hi);
    return ceil_of(x * x / 2);
  };

  // every value below is at most b (sqrt(2(n+J)) + 2) in size; machine words when that fits
  auto fits = [&](std::size_t J) {
    return b * (isqrt(Integer(2 * (n + J))) + 3) < (Integer(1) << 60);
  };

  std::size_t J = n + 64;
  for (;;) {
    std::vector<Integer> best(n + 1);
    if (fits(J)) best = shift_minimize<std::int64_t>(b, w, n, J);
    else best = shift_minimize<Integer>(b, w, n, J);
    Integer need = 0;
    for (const auto& m : best) need = std::max(need, cutoff(m));
    if (need <= J + 1) {
      std::vector<Rational> out;
      for (const auto& x : best) out.push_back(Rational(x) / L);
      return out;
    }
    if (J >= options.j_budget)
      throw UndecidedError(to_string(Rational(best[n]) / L),
                           "shift budget too small to certify the convex capacity at index " + std::to_string(n));
    J = std::min(options.j_budget, static_cast<std::size_t>(std::min<Integer>(need, Integer(options.j_budget))));
  }
}

}  // namespace detail

inline CapacitySequence convex_sequence(const ConvexDomain& omega, const ConvexEchOptions& options = {},
                                        const WeightLimits& limits = {}) {
  auto neg = negative_weight_sequence(omega, limits);
  if (neg.weights.empty()) return ball_sequence(*neg.head);
  return CapacitySequence([head = *neg.head, negs = neg.weights, options](std::size_t n) {
    return detail::convex_prefix(head, negs, n, options);
  });
}

inline Rational ech_convex(const ConvexDomain& omega, std::int64_t k, const ConvexEchOptions& options = {}) {
  if (k < 0) throw InputError("negative_index", "index must be nonnegative");
  return convex_sequence(omega, options).at(static_cast<std::size_t>(k));
}

struct EchComparison {
  bool dominates = true;
  std::int64_t k_max = 0;
  std::optional<std::int64_t> first_failure;
  std::vector<Rational> concave, convex;
};

// c_k(omega1) <= c_k(omega2) for k = 0..k_max. Evidence, not proof.
inline EchComparison ech_compare(const ConcaveDomain& omega1, const ConvexDomain& omega2, std::int64_t k_max,
                                 const ConvexEchOptions& options = {}) {
  if (k_max < 1) throw InputError("invalid_budget", "k_max must be at least 1");
  EchComparison out;
  out.k_max = k_max;
  out.concave = concave_sequence(omega1).prefix(static_cast<std::size_t>(k_max));
  out.convex = convex_sequence(omega2, options).prefix(static_cast<std::size_t>(k_max));
  for (std::int64_t k = 0; k <= k_max; ++k) {
    if (out.concave[k] > out.convex[k]) {
      out.dominates = false;
      out.first_failure = k;
      break;
    }
  }
  return out;
}

inline bool ech_dominates(const ConcaveDomain& omega1, const ConvexDomain& omega2, std::int64_t k_max,
                          const ConvexEchOptions& options = {}) {
  return ech_compare(omega1, omega2, k_max, options).dominates;
}

}  // namespace sympack
