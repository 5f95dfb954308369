#pragma once

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sympack/core/rational.hpp"

namespace sympack {

namespace detail {

inline int sign_of(const Rational& r) { return r.sign(); }

// sign of p + q*sqrt(s), s >= 0
inline int sign_with_root(const Rational& p, const Rational& q, const Rational& s) {
  int sp = sign_of(p);
  int sq = s == 0 ? 0 : sign_of(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 with q^2 s
  int c = sign_of(p * p - q * q * s);
  return c == 0 ? 0 : (c > 0 ? sp : sq);
}

// sign of p + q*sqrt(x) + r*sqrt(y), x, y >= 0
inline int sign_with_two_roots(const Rational& p, const Rational& q, const Rational& x,
                               const Rational& r, const Rational& y) {
  if (x == y) return sign_with_root(p, q + r, x);
  // sign of A = q sqrt(x) + r sqrt(y)
  int s1 = x == 0 ? 0 : sign_of(q);
  int s2 = y == 0 ? 0 : sign_of(r);
  int sa;
  if (s1 == 0) sa = s2;
  else if (s2 == 0 || s1 == s2) sa = s1;
  else {
    int c = sign_of(q * q * x - r * r * y);
    sa = c == 0 ? 0 : (c > 0 ? s1 : s2);
  }
  int sp = sign_of(p);
  if (sa == 0) return sp;
  if (sp == 0 || sp == sa) return sa;
  // p and A have opposite signs: compare p^2 with A^2 = q^2 x + r^2 y + 2qr sqrt(xy)
  int c = sign_with_root(p * p - q * q * x - r * r * y, Rational(-2) * q * r, x * y);
  return c == 0 ? 0 : (c > 0 ? sp : sa);
}

}  // namespace detail

// Exact number a + b*sqrt(s) with rational a, b and radicand s >= 0.
// Canonical: b = s = 0 when the value is rational; b = 1 when a = 0 and the value is positive.
class QuadraticValue {
 public:
  enum class Kind { rational, square_root, mixed };

  QuadraticValue() = default;
  QuadraticValue(const Rational& q) : a_(q) {}  // NOLINT: implicit on purpose
  QuadraticValue(long long q) : a_(q) {}        // NOLINT

  static QuadraticValue sqrt(const Rational& s) { return linear(0, 1, s); }

  // a + b*sqrt(s)
  static QuadraticValue linear(const Rational& a, const Rational& b, const Rational& s) {
    if (s < 0) throw std::domain_error("negative radicand " + s.str());
    QuadraticValue v;
    v.a_ = a;
    v.b_ = b;
    v.s_ = s;
    v.normalize();
    return v;
  }

  Kind kind() const {
    if (b_ == 0) return Kind::rational;
    return a_ == 0 && b_ == 1 ? Kind::square_root : Kind::mixed;
  }
  bool is_rational() const { return b_ == 0; }
  const Rational& rational_part() const { return a_; }
  const Rational& coefficient() const { return b_; }
  const Rational& radicand() const { return s_; }

  // Only meaningful when is_rational().
  const Rational& rational() const {
    if (!is_rational()) throw std::logic_error("value is irrational");
    return a_;
  }

  int sign() const { return detail::sign_with_root(a_, b_, s_); }

  // Rational brackets at resolution about 2^-bits.
  Rational lower_bound(unsigned bits = 64) const {
    if (b_ == 0) return a_;
    return b_ > 0 ? a_ + b_ * sqrt_lower(s_, bits) : a_ + b_ * sqrt_upper(s_, bits);
  }
  Rational upper_bound(unsigned bits = 64) const {
    if (b_ == 0) return a_;
    return b_ > 0 ? a_ + b_ * sqrt_upper(s_, bits) : a_ + b_ * sqrt_lower(s_, bits);
  }

  // Advisory only; never used in decisions.
  double to_double() const {
    return sympack::to_double(a_) + sympack::to_double(b_) * std::sqrt(sympack::to_double(s_));
  }

  std::string str() const {
    switch (kind()) {
      case Kind::rational: return a_.str();
      case Kind::square_root: return "sqrt(" + s_.str() + ")";
      default: {
        std::string out = a_ == 0 ? "" : a_.str() + (b_ > 0 ? " + " : " - ");
        Rational mag = a_ == 0 ? b_ : abs(b_);
        if (mag != 1) out += mag.str() + "*";
        return out + "sqrt(" + s_.str() + ")";
      }
    }
  }

  QuadraticValue operator-() const { return linear(-a_, -b_, s_); }
  friend QuadraticValue operator*(const QuadraticValue& v, const Rational& q) {
    return linear(v.a_ * q, v.b_ * q, v.s_);
  }
  friend QuadraticValue operator*(const Rational& q, const QuadraticValue& v) { return v * q; }
  friend QuadraticValue operator/(const QuadraticValue& v, const Rational& q) {
    if (q == 0) throw std::domain_error("division by zero");
    return linear(v.a_ / q, v.b_ / q, v.s_);
  }
  // Sums need a shared radicand.
  friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.b_ == 0) return linear(y.a_ + x.a_, y.b_, y.s_);
    if (y.b_ == 0) return linear(x.a_ + y.a_, x.b_, x.s_);
    if (x.s_ != y.s_) throw std::logic_error("sum of values with different radicands");
    return linear(x.a_ + y.a_, x.b_ + y.b_, x.s_);
  }
  friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) { return x + (-y); }

  QuadraticValue squared() const {
    return linear(a_ * a_ + b_ * b_ * s_, 2 * a_ * b_, s_);
  }

  // 1 / (a + b sqrt s) = (a - b sqrt s) / (a^2 - b^2 s)
  QuadraticValue reciprocal() const {
    Rational n = a_ * a_ - b_ * b_ * s_;
    if (n == 0) throw std::domain_error("division by zero");
    return linear(a_ / n, -b_ / n, s_);
  }

  friend std::strong_ordering compare(const QuadraticValue& x, const QuadraticValue& y) {
    int c = detail::sign_with_two_roots(x.a_ - y.a_, x.b_, x.s_, -y.b_, y.s_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::strong_ordering operator<=>(const QuadraticValue& x, const QuadraticValue& y) {
    return compare(x, y);
  }
  friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
    return compare(x, y) == 0;
  }

 private:
  void normalize() {
    if (b_ == 0 || s_ == 0) {
      b_ = 0;
      s_ = 0;
      return;
    }
    if (auto root = exact_sqrt(s_)) {
      a_ += b_ * *root;
      b_ = 0;
      s_ = 0;
      return;
    }
    if (a_ == 0 && b_ != 1 && b_ > 0) {
      s_ *= b_ * b_;
      b_ = 1;
    }
  }

  Rational a_{0}, b_{0}, s_{0};
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticValue& v) { return os << v.str(); }

inline const QuadraticValue& max(const QuadraticValue& x, const QuadraticValue& y) { return x < y ? y : x; }
inline const QuadraticValue& min(const QuadraticValue& x, const QuadraticValue& y) { return y < x ? y : x; }

}  // namespace sympack
