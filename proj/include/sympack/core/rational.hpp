#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "sympack/errors.hpp"

namespace sympack {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer floor_of(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer f = floor_of(r);
  return f == r ? f : f + 1;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Integer& n, Integer* root = nullptr) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// sqrt(r) when r is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  Integer a, b;
  if (!is_square(numerator(r), &a) || !is_square(denominator(r), &b)) return std::nullopt;
  return Rational(a, b);
}

// Rational brackets lo <= sqrt(s) <= hi with hi - lo <= 2^-bits.
inline Rational sqrt_lower(const Rational& s, unsigned bits) {
  if (s < 0) throw std::domain_error("sqrt of negative rational");
  Integer d = denominator(s);
  Integer scale = Integer(1) << bits;
  Integer r = isqrt(numerator(s) * d * scale * scale);
  return Rational(r, d * scale);
}

inline Rational sqrt_upper(const Rational& s, unsigned bits) {
  if (s < 0) throw std::domain_error("sqrt of negative rational");
  Integer d = denominator(s);
  Integer scale = Integer(1) << bits;
  Integer target = numerator(s) * d * scale * scale;
  Integer r = isqrt(target);
  if (r * r != target) ++r;
  return Rational(r, d * scale);
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("int64", "integer does not fit in 64 bits: " + n.str());
  return n.convert_to<std::int64_t>();
}

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

// Accepts "p", "-p", "p/q", "-p/q" (optional leading '+', surrounding blanks).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return InputError("non_rational", "expected a rational of the form p or p/q, got '" +
                                          std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
  Integer p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw InputError("non_rational", "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace sympack
