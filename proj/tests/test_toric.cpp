#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random_domains.hpp"
#include "sympack/toric.hpp"

using namespace sympack;

namespace {

Rational R(const char* s) { return parse_rational(s); }
std::vector<Rational> W(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(R(x));
  return out;
}

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Domains, ValidationCodes) {
  EXPECT_EQ(error_code([] { ConcaveDomain({{0, 1}, {1, 2}}); }), "not_monotone");
  EXPECT_EQ(error_code([] { ConcaveDomain({{0, 3}, {1, 2}, {2, 0}}); }), "non_convex_boundary");
  EXPECT_EQ(error_code([] { ConcaveDomain({{1, 0}, {0, 1}}); }), "wrong_orientation");
  EXPECT_EQ(error_code([] { ConcaveDomain({{0, 1}}); }), "too_few_vertices");
  EXPECT_EQ(error_code([] { ConcaveDomain({{1, 3}, {2, 0}}); }), "not_on_axes");
  EXPECT_EQ(error_code([] { ConvexDomain({{0, 3}, {1, 1}, {2, 0}}); }), "non_convex_boundary");
  EXPECT_EQ(error_code([] { ConvexDomain({{0, 1}, {1, 2}, {2, 0}}); }), "not_monotone");
  EXPECT_NO_THROW(ConcaveDomain({{0, 3}, {1, 1}, {2, 0}}));
  EXPECT_NO_THROW(ConvexDomain({{0, 1}, {1, 1}, {1, 0}}));
}

TEST(Domains, CollinearVerticesMerge) {
  ConcaveDomain d({{0, 2}, {R("1/2"), 1}, {1, 0}});
  EXPECT_EQ(d.vertices().size(), 2u);
  EXPECT_EQ(d.area(), 1);
  EXPECT_EQ(ConvexDomain::polydisk(2, 3).area(), 6);
  EXPECT_EQ(ConvexDomain::polydisk(2, 3).head(), 5);
}

TEST(Weights, ConcaveExamples) {
  EXPECT_EQ(weight_sequence(ConcaveDomain::ellipsoid(1, 2)).weights, W({"1", "1"}));
  EXPECT_EQ(weight_sequence(ConcaveDomain::ellipsoid(1, R("5/2"))).weights, W({"1", "1", "1/2", "1/2"}));
  EXPECT_EQ(weight_sequence(ConcaveDomain::ellipsoid(1, 1)).weights, W({"1"}));
  // (0,3),(1,1),(2,0): peel T(2), leaving a (1,1) triangle on the left
  EXPECT_EQ(weight_sequence(ConcaveDomain({{0, 3}, {1, 1}, {2, 0}})).weights, W({"2", "1"}));
}

TEST(Weights, ConvexExamples) {
  auto square = negative_weight_sequence(ConvexDomain::polydisk(1, 1));
  EXPECT_EQ(*square.head, 2);
  EXPECT_EQ(square.weights, W({"1", "1"}));
  // the complement of the (1,2) triangle in T(2) is a (1,2) triangle, not a unit one
  auto tri = negative_weight_sequence(ConvexDomain::ellipsoid(1, 2));
  EXPECT_EQ(*tri.head, 2);
  EXPECT_EQ(tri.weights, W({"1", "1"}));
  auto ball = negative_weight_sequence(ConvexDomain::ball(1));
  EXPECT_EQ(*ball.head, 1);
  EXPECT_TRUE(ball.weights.empty());
}

TEST(Weights, EllipsoidExamples) {
  EXPECT_EQ(ellipsoid_weights(1, 3).weights, W({"1", "1", "1"}));
  EXPECT_EQ(ellipsoid_weights(1, 1).weights, W({"1"}));
  EXPECT_EQ(ellipsoid_weights(2, 5).weights, W({"2", "2", "1", "1"}));
  EXPECT_EQ(ellipsoid_weights(2, 5).sum_of_squares(), 10);
}

TEST(Weights, TwoAlgorithmsAgreeOnTriangles) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen::positive_rational(rng, 40, 20), b = gen::positive_rational(rng, 40, 20);
    auto e = ellipsoid_weights(a, b);
    EXPECT_EQ(weight_sequence(ConcaveDomain::ellipsoid(a, b)).weights, e.weights);
    EXPECT_EQ(e.weights, oracle::continued_fraction_weights(a, b));
    EXPECT_EQ(e.sum_of_squares(), 2 * (a * b / 2));
  }
}

TEST(Weights, AreaIdentitiesOnRandomDomains) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    auto c = gen::concave(rng);
    EXPECT_EQ(weight_sequence(c).sum_of_squares(), 2 * c.area());
    auto v = gen::convex(rng);
    auto n = negative_weight_sequence(v);
    EXPECT_EQ(*n.head * *n.head - n.sum_of_squares(), 2 * v.area());
  }
}

TEST(Weights, ScaleLinearly) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    Rational lambda = gen::positive_rational(rng, 9, 7);
    auto c = gen::concave(rng);
    auto w = weight_sequence(c).weights;
    for (auto& x : w) x *= lambda;
    EXPECT_EQ(weight_sequence(c.scaled(lambda)).weights, w);
    auto v = gen::convex(rng);
    auto n = negative_weight_sequence(v), ns = negative_weight_sequence(v.scaled(lambda));
    EXPECT_EQ(*ns.head, *n.head * lambda);
    for (auto& x : n.weights) x *= lambda;
    EXPECT_EQ(ns.weights, n.weights);
  }
}

TEST(Weights, EachPeeledTriangleFitsItsStage) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    for (const auto& s : weight_expansion_stages(gen::concave(rng))) {
      EXPECT_GT(s.weight, 0);
      EXPECT_LE(s.weight, std::min(s.width, s.height));
    }
  }
}

TEST(Weights, HugePartialQuotientHitsBudget) {
  EXPECT_THROW(ellipsoid_weights(1, 100000, {1000}), ResourceError);
  EXPECT_THROW(weight_sequence(ConcaveDomain::ellipsoid(1, 5000), {1000}), ResourceError);
}

TEST(ToricDecide, Examples) {
  auto e12 = ConcaveDomain::ellipsoid(1, 2);
  EXPECT_EQ(decide_concave_into_convex(e12, ConvexDomain::ball(2)), Decision::no);
  EXPECT_EQ(decide_concave_into_convex(e12, ConvexDomain::ball(R("21/10"))), Decision::yes);
  EXPECT_EQ(decide_concave_into_convex(ConcaveDomain::ellipsoid(1, 1), ConvexDomain::ball(1)), Decision::no);
  auto d = decide_concave_into_convex_detailed(ConcaveDomain::ellipsoid(1, 4), ConvexDomain::ball(R("21/10")));
  EXPECT_EQ(d.decision, Decision::yes);
  EXPECT_EQ(d.config.sizes(), W({"1", "1", "1", "1"}));
  EXPECT_EQ(d.target, R("21/10"));
}

TEST(ToricDecide, BallIntoPolydisk) {
  // config {a, 1, 1} into B(2); the complement pair (1;1,1) is tight but does not involve the source
  EXPECT_EQ(decide_concave_into_convex(ConcaveDomain::ellipsoid(R("9/10"), R("9/10")), ConvexDomain::polydisk(1, 1)),
            Decision::yes);
  EXPECT_EQ(decide_concave_into_convex(ConcaveDomain::ellipsoid(1, 1), ConvexDomain::polydisk(1, 1)), Decision::no);
  EXPECT_EQ(decide_concave_into_convex(ConcaveDomain::ellipsoid(1, 1), ConvexDomain::polydisk(1, 1),
                                       Convention::closed_target),
            Decision::yes);
  // touches the side x = 1/2
  EXPECT_EQ(decide_concave_into_convex(ConcaveDomain::ellipsoid(R("1/2"), 1), ConvexDomain::polydisk(R("1/2"), 1)),
            Decision::no);
}

TEST(ToricDecide, InclusionImpliesYes) {
  // a strictly shrunken copy of any convex domain fits, seen through a random inner concave triangle
  std::mt19937_64 rng(45);
  for (int i = 0; i < 40; ++i) {
    auto v = gen::convex(rng);
    Rational s = std::min(v.width(), v.height()) * Rational(9, 10);
    EXPECT_EQ(decide_concave_into_convex(ConcaveDomain::ellipsoid(s, s), v), Decision::yes) << i;
  }
}

TEST(Approximation, ConvergentBrackets) {
  auto [lo, hi] = convergent_bracket(QuadraticValue::sqrt(2), 3);
  EXPECT_LE(QuadraticValue(lo), QuadraticValue::sqrt(2));
  EXPECT_GE(QuadraticValue(hi), QuadraticValue::sqrt(2));
  EXPECT_EQ(std::min(lo, hi), R("7/5"));
  EXPECT_EQ(std::max(lo, hi), R("17/12"));
  auto exact = convergent_bracket(QuadraticValue(R("7/3")), 10);
  EXPECT_EQ(exact.first, R("7/3"));
  EXPECT_EQ(exact.second, R("7/3"));
}

TEST(Approximation, IrrationalEllipsoidIntoBalls) {
  auto src = approximate_concave_ellipsoid(1, QuadraticValue::sqrt(2));
  EXPECT_EQ(decide_by_approximation(src, approximate_ball(R("3/2"))), Decision::yes);
  EXPECT_EQ(decide_by_approximation(src, approximate_ball(R("7/5"))), Decision::no);
  EXPECT_EQ(decide_by_approximation(src, approximate_ball(QuadraticValue::sqrt(2)), Convention::open_target, 4),
            Decision::undecided);
  // irrational target: B(1 + sqrt 2 / 2) is about 1.707 > sqrt 2
  EXPECT_EQ(decide_by_approximation(src, approximate_ball(QuadraticValue::linear(1, R("1/2"), 2))), Decision::yes);
}
