#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sympack/core/rational.hpp"
#include "sympack/errors.hpp"
#include "sympack/parallel.hpp"

namespace sympack {

// (d; m_1 >= m_2 >= ...), the class dA - sum m_i E_i. Stored sorted, trailing zeros dropped.
// Negative entries are allowed so that reductions can pass through them.
class ObstructionTuple {
 public:
  ObstructionTuple() = default;
  ObstructionTuple(std::int64_t degree, std::vector<std::int64_t> multiplicities)
      : d_(degree), m_(std::move(multiplicities)) {
    std::sort(m_.begin(), m_.end(), std::greater<>());
    while (!m_.empty() && m_.back() == 0) m_.pop_back();
  }

  std::int64_t degree() const { return d_; }
  const std::vector<std::int64_t>& multiplicities() const { return m_; }
  std::size_t length() const { return m_.size(); }
  std::int64_t multiplicity(std::size_t i) const { return i < m_.size() ? m_[i] : 0; }

  std::int64_t sum() const { return std::accumulate(m_.begin(), m_.end(), std::int64_t{0}); }
  std::int64_t sum_of_squares() const {
    std::int64_t s = 0;
    for (auto x : m_) s += x * x;
    return s;
  }
  // F.F and -K.F for F = dA - sum m_i E_i
  std::int64_t self_intersection() const { return d_ * d_ - sum_of_squares(); }
  std::int64_t anticanonical_degree() const { return 3 * d_ - sum(); }

  bool is_zero() const { return d_ == 0 && m_.empty(); }

  // sum m_i R_i, pairing the i-th largest multiplicity with sizes[i]; missing sizes count as 0.
  Rational pairing(std::span<const Rational> sizes) const {
    Rational total = 0;
    for (std::size_t i = 0; i < m_.size() && i < sizes.size(); ++i) total += m_[i] * sizes[i];
    return total;
  }

  std::string str() const {
    std::string out = "(" + std::to_string(d_) + ";";
    for (std::size_t i = 0; i < m_.size(); ++i) out += (i ? "," : "") + std::to_string(m_[i]);
    return out + ")";
  }

  friend auto operator<=>(const ObstructionTuple&, const ObstructionTuple&) = default;
  friend bool operator==(const ObstructionTuple&, const ObstructionTuple&) = default;

 private:
  std::int64_t d_ = 0;
  std::vector<std::int64_t> m_;
};

inline std::ostream& operator<<(std::ostream& os, const ObstructionTuple& t) { return os << t.str(); }

inline bool satisfies_packing_constraint(const ObstructionTuple& t) {
  std::int64_t lhs = 0;
  for (auto x : t.multiplicities()) lhs += x * x + x;
  return lhs <= t.degree() * t.degree() + 3 * t.degree();
}

inline ObstructionTuple cremona_transform(const ObstructionTuple& t) {
  std::int64_t d = t.degree();
  std::int64_t m1 = t.multiplicity(0), m2 = t.multiplicity(1), m3 = t.multiplicity(2);
  std::vector<std::int64_t> m = {d - m2 - m3, d - m1 - m3, d - m1 - m2};
  for (std::size_t i = 3; i < t.length(); ++i) m.push_back(t.multiplicity(i));
  return ObstructionTuple(2 * d - m1 - m2 - m3, std::move(m));
}

// Diophantine identities, then Cremona reduction down to (0; -1).
inline bool is_exceptional_vector(const ObstructionTuple& t) {
  if (t.self_intersection() != -1 || t.anticanonical_degree() != 1) return false;
  ObstructionTuple cur = t;
  const std::size_t guard = t.length() + 3;
  std::size_t stalled = 0;
  while (cur.degree() > 0 &&
         cur.multiplicity(0) + cur.multiplicity(1) + cur.multiplicity(2) > cur.degree()) {
    ObstructionTuple next = cremona_transform(cur);
    stalled = next.degree() < cur.degree() ? 0 : stalled + 1;
    if (stalled >= guard) return false;
    cur = std::move(next);
  }
  if (cur.degree() != 0) return false;
  std::size_t minus_ones = 0;
  for (auto x : cur.multiplicities()) {
    if (x == -1) ++minus_ones;
    else if (x != 0) return false;
  }
  return minus_ones == 1;
}

struct EnumerationLimits {
  std::uint64_t max_nodes_per_degree = 50'000'000;
};

namespace detail {

// All nonincreasing positive sequences of length <= slots, entries <= cap, with the given
// sum and sum of squares.
inline void solve_sum_and_squares(std::int64_t sum, std::int64_t squares, std::size_t slots,
                                  std::int64_t cap, std::vector<std::int64_t>& prefix,
                                  std::vector<std::vector<std::int64_t>>& out,
                                  std::uint64_t& nodes, std::uint64_t max_nodes) {
  if (++nodes > max_nodes) throw ResourceError("d_max", "exceptional enumeration exceeded its node budget");
  if (sum == 0) {
    if (squares == 0) out.push_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (std::int64_t x = std::min(cap, sum); x >= 1; --x) {
    std::int64_t rs = sum - x, rq = squares - x * x;
    if (rq < 0) continue;
    std::int64_t rslots = static_cast<std::int64_t>(slots) - 1;
    if (rs > rslots * x) break;         // smaller x only makes this worse
    if (rq > rs * x) continue;          // squares too large for the remaining cap
    if (rq < rs) continue;              // each entry >= 1 has x^2 >= x
    if (rslots > 0 ? rq * rslots < rs * rs : rs != 0) continue;  // Cauchy-Schwarz
    prefix.push_back(x);
    solve_sum_and_squares(rs, rq, slots - 1, x, prefix, out, nodes, max_nodes);
    prefix.pop_back();
  }
}

inline std::vector<ObstructionTuple> exceptional_of_degree(std::int64_t d, std::size_t k_max,
                                                           const EnumerationLimits& limits) {
  std::vector<std::vector<std::int64_t>> raw;
  std::vector<std::int64_t> prefix;
  std::uint64_t nodes = 0;
  solve_sum_and_squares(3 * d - 1, d * d + 1, k_max, d, prefix, raw, nodes, limits.max_nodes_per_degree);
  std::vector<ObstructionTuple> out;
  for (auto& m : raw) {
    ObstructionTuple t(d, std::move(m));
    if (is_exceptional_vector(t)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Exceptional vectors with 1 <= d <= d_max and at most k_max nonzero entries, sorted by (d, m).
inline std::vector<ObstructionTuple> enumerate_exceptional(std::int64_t d_max, std::size_t k_max,
                                                           const EnumerationLimits& limits = {}) {
  if (d_max < 1) throw InputError("invalid_budget", "d_max must be at least 1");
  if (k_max < 1) throw InputError("invalid_budget", "k_max must be at least 1");
  auto per_degree = parallel_map(static_cast<std::size_t>(d_max), [&](std::size_t i) {
    return detail::exceptional_of_degree(static_cast<std::int64_t>(i) + 1, k_max, limits);
  });
  std::vector<ObstructionTuple> out;
  for (auto& v : per_degree) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Lazily filled per-degree table for one k_max; safe to share between threads.
class ExceptionalCatalog {
 public:
  explicit ExceptionalCatalog(std::size_t k_max, EnumerationLimits limits = {})
      : k_max_(k_max), limits_(limits) {}

  std::size_t k_max() const { return k_max_; }

  const std::vector<ObstructionTuple>& degree(std::int64_t d) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(d);
    if (it == table_.end()) it = table_.emplace(d, detail::exceptional_of_degree(d, k_max_, limits_)).first;
    return it->second;
  }

 private:
  std::size_t k_max_;
  EnumerationLimits limits_;
  std::mutex mutex_;
  std::map<std::int64_t, std::vector<ObstructionTuple>> table_;
};

}  // namespace sympack
