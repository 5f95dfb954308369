#include <gtest/gtest.h>

#include <random>

#include "sympack/core/quadratic.hpp"
#include "sympack/core/rational.hpp"

using namespace sympack;

namespace {

Rational R(const char* s) { return parse_rational(s); }

Rational random_rational(std::mt19937_64& rng, int span = 50, int den = 12) {
  std::uniform_int_distribution<int> n(-span, span), d(1, den);
  return Rational(n(rng), d(rng));
}

}  // namespace

TEST(Rational, ParsesIntegerAndFractionForms) {
  EXPECT_EQ(R("2"), Rational(2));
  EXPECT_EQ(R("5/2"), Rational(5, 2));
  EXPECT_EQ(R("-6/4"), Rational(-3, 2));
  EXPECT_EQ(R(" 7 "), Rational(7));
  EXPECT_EQ(to_string(R("10/4")), "5/2");
  EXPECT_EQ(to_string(R("8/4")), "2");
}

TEST(Rational, RejectsOtherForms) {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/2/3", "--1", "1e3", "/2", "2/"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(Rational, FloorCeilAndExactRoots) {
  EXPECT_EQ(floor_of(R("-1/2")), -1);
  EXPECT_EQ(ceil_of(R("-1/2")), 0);
  EXPECT_EQ(floor_of(R("7/2")), 3);
  EXPECT_EQ(ceil_of(R("3")), 3);
  EXPECT_EQ(*exact_sqrt(R("9/4")), R("3/2"));
  EXPECT_FALSE(exact_sqrt(R("2")).has_value());
}

TEST(Rational, SqrtBracketsAreTight) {
  for (const char* s : {"2", "3/7", "1000001", "1/3"}) {
    Rational x = R(s);
    Rational lo = sqrt_lower(x, 40), hi = sqrt_upper(x, 40);
    EXPECT_LE(lo * lo, x);
    EXPECT_GE(hi * hi, x);
    EXPECT_LE(hi - lo, Rational(1, Integer(1) << 39));
  }
}

TEST(Rational, FieldIdentitiesOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (b != 0) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(gcd(numerator(a), denominator(a)), 1);
    EXPECT_GT(denominator(a), 0);
  }
}

TEST(Quadratic, SpecExamples) {
  EXPECT_EQ(compare(QuadraticValue(2), QuadraticValue::sqrt(4)), std::strong_ordering::equal);
  EXPECT_EQ(compare(QuadraticValue(R("3/2")), QuadraticValue::sqrt(2)), std::strong_ordering::greater);
  EXPECT_EQ(compare(QuadraticValue::sqrt(2), QuadraticValue::sqrt(3)), std::strong_ordering::less);
}

TEST(Quadratic, PerfectSquaresNormalizeToRational) {
  auto v = QuadraticValue::sqrt(R("25/4"));
  EXPECT_EQ(v.kind(), QuadraticValue::Kind::rational);
  EXPECT_EQ(v.rational(), R("5/2"));
  auto w = QuadraticValue::linear(0, 3, 2);
  EXPECT_EQ(w.kind(), QuadraticValue::Kind::square_root);
  EXPECT_EQ(w.radicand(), 18);
}

TEST(Quadratic, RationalVersusRootAgreesWithSquaring) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Rational p = random_rational(rng, 20, 7);
    Rational s = abs(random_rational(rng, 200, 9));
    auto c = compare(QuadraticValue(p), QuadraticValue::sqrt(s));
    std::strong_ordering expect = p < 0 ? std::strong_ordering::less
                                        : (p * p < s ? std::strong_ordering::less
                                                     : (p * p == s ? std::strong_ordering::equal
                                                                   : std::strong_ordering::greater));
    EXPECT_EQ(c, expect) << p << " vs sqrt " << s;
  }
}

TEST(Quadratic, MixedComparisonsMatchHighPrecisionBrackets) {
  std::mt19937_64 rng(13);
  int decided = 0;
  for (int i = 0; i < 3000; ++i) {
    auto x = QuadraticValue::linear(random_rational(rng, 9, 5), random_rational(rng, 9, 5), abs(random_rational(rng, 30, 4)));
    auto y = QuadraticValue::linear(random_rational(rng, 9, 5), random_rational(rng, 9, 5), abs(random_rational(rng, 30, 4)));
    auto c = compare(x, y);
    if (x.upper_bound(80) < y.lower_bound(80)) {
      EXPECT_EQ(c, std::strong_ordering::less);
      ++decided;
    } else if (x.lower_bound(80) > y.upper_bound(80)) {
      EXPECT_EQ(c, std::strong_ordering::greater);
      ++decided;
    }
    EXPECT_EQ(compare(y, x), 0 <=> (c <=> 0));
  }
  EXPECT_GT(decided, 2500);
}

TEST(Quadratic, ExactTiesBetweenDifferentForms) {
  // 1 + sqrt(2) squared is 3 + 2 sqrt(2) = 3 + sqrt(8)
  auto x = QuadraticValue::linear(1, 1, 2).squared();
  EXPECT_EQ(x, QuadraticValue::linear(3, 1, 8));
  EXPECT_EQ(QuadraticValue::sqrt(8), QuadraticValue::linear(0, 2, 2));
  auto a = QuadraticValue::sqrt(2).squared();
  EXPECT_EQ(a, QuadraticValue(2));
  EXPECT_EQ(QuadraticValue::linear(1, 1, 2).reciprocal().reciprocal(), QuadraticValue::linear(1, 1, 2));
  // 1/(1 + sqrt 2) = sqrt 2 - 1
  EXPECT_EQ(QuadraticValue::linear(1, 1, 2).reciprocal(), QuadraticValue::linear(-1, 1, 2));
}

TEST(Quadratic, ReciprocalAndBrackets) {
  auto x = QuadraticValue::linear(R("3/2"), R("-1/3"), 5);
  auto inv = x.reciprocal();
  EXPECT_LT(inv.lower_bound(60), 1 / x.lower_bound(60) + Rational(1, 1000000));
  EXPECT_LE(x.lower_bound(30), x.upper_bound(30));
  EXPECT_NEAR(x.to_double() * inv.to_double(), 1.0, 1e-12);
}
