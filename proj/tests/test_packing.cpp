#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sympack/packing.hpp"

using namespace sympack;

namespace {

Rational R(const char* s) { return parse_rational(s); }
ObstructionTuple T(std::int64_t d, std::vector<std::int64_t> m) { return ObstructionTuple(d, std::move(m)); }
BallConfig balls(const char* s) { return parse_ball_list(s); }

BallConfig random_config(std::mt19937_64& rng, std::size_t max_k) {
  std::uniform_int_distribution<std::size_t> count(1, max_k);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> sizes(count(rng));
  for (auto& r : sizes) {
    int q = den(rng);
    // uniform numerator keeps the size in [1/4, 2]
    int lo = (q + 3) / 4, hi = 2 * q;
    r = Rational(std::uniform_int_distribution<int>(lo, hi)(rng), q);
  }
  return BallConfig(sizes);
}

}  // namespace

TEST(BallConfig, SortsAndValidates) {
  auto c = balls("1, 5/2,1");
  EXPECT_EQ(c.sizes(), (std::vector<Rational>{R("5/2"), 1, 1}));
  EXPECT_EQ(c.volume(), R("33/4"));
  EXPECT_THROW(balls("1,0"), InputError);
  EXPECT_THROW(balls(""), InputError);
  EXPECT_THROW(BallConfig(std::vector<Rational>{}), InputError);
}

TEST(PerDegreeMax, Examples) {
  auto a = per_degree_max(1, balls("1,1"));
  EXPECT_EQ(a.value, 2);
  EXPECT_EQ(a.witness, T(1, {1, 1}));
  auto b = per_degree_max(2, balls("1,1,1,1,1"));
  EXPECT_EQ(b.value, 5);
  EXPECT_EQ(b.witness, T(2, {1, 1, 1, 1, 1}));
  auto c = per_degree_max(3, balls("2,1,1,1,1,1,1"));
  EXPECT_EQ(c.value, 10);
  EXPECT_EQ(c.witness, T(3, {2, 1, 1, 1, 1, 1, 1}));
}

TEST(PerDegreeMax, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_config(rng, 4);
    for (std::int64_t d = 1; d <= 5; ++d) {
      auto got = per_degree_max(d, c);
      EXPECT_EQ(got.value, oracle::max_pairing_at_degree(d, c.sizes())) << c.str() << " d=" << d;
      EXPECT_TRUE(satisfies_packing_constraint(got.witness));
      EXPECT_EQ(got.witness.pairing(c.sizes()), got.value);
    }
  }
}

TEST(PerDegreeMax, RespectsCauchySchwarzBound) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_config(rng, 8);
    for (std::int64_t d = 1; d <= 12; ++d) {
      Rational ratio = per_degree_max(d, c).value / d;
      EXPECT_LE(QuadraticValue(ratio), QuadraticValue::sqrt((1 + Rational(3) / d) * c.volume()));
    }
  }
}

TEST(PerDegreeMax, BigIntegerPathAgreesWithMachineIntegers) {
  auto c = balls("1,2/3,1/2");
  for (std::int64_t d = 1; d <= 6; ++d) {
    auto small = detail::per_degree_max_as<std::int64_t>(d, c);
    auto big = detail::per_degree_max_as<Integer>(d, c);
    EXPECT_EQ(small.value, big.value);
    EXPECT_EQ(small.witness, big.witness);
  }
}

TEST(Capacity, Examples) {
  auto two = packing_capacity(balls("1,1"), 10, Engine::full_tuples);
  ASSERT_TRUE(two.exact());
  EXPECT_EQ(two.lower, QuadraticValue(2));
  EXPECT_EQ(two.attained, Attainment::yes);
  EXPECT_EQ(*two.witness, T(1, {1, 1}));

  auto one = packing_capacity(balls("1"), 10);
  ASSERT_TRUE(one.exact());
  EXPECT_EQ(one.lower, QuadraticValue(1));
  EXPECT_EQ(*one.witness, T(1, {1}));

  auto seven = packing_capacity(BallConfig::equal(7), 20);
  ASSERT_TRUE(seven.exact());
  EXPECT_EQ(seven.lower, QuadraticValue(R("8/3")));
  EXPECT_EQ(*seven.witness, T(3, {2, 1, 1, 1, 1, 1, 1}));
}

TEST(Capacity, EveryEngineBracketsTheValue) {
  for (auto engine : {Engine::full_tuples, Engine::exceptional_only, Engine::combined}) {
    auto r = packing_capacity(BallConfig::equal(6), 8, engine);
    EXPECT_LE(r.lower, QuadraticValue(R("5/2")));
    EXPECT_GE(r.upper, QuadraticValue(R("5/2")));
    EXPECT_LE(r.lower, r.upper);
  }
}

TEST(Capacity, LowerBoundsFromVolumeAndPairs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_config(rng, 6);
    auto r = packing_capacity(c, 6);
    EXPECT_GE(r.lower, QuadraticValue::sqrt(c.volume()));
    if (c.count() >= 2) EXPECT_GE(r.lower, QuadraticValue(c[0] + c[1]));
    EXPECT_LE(r.lower, r.upper);
    if (r.attained == Attainment::yes) {
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(QuadraticValue(r.witness->pairing(c.sizes()) / r.witness->degree()), r.lower);
    }
  }
}

TEST(Capacity, ScalingIsExact) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_config(rng, 5);
    Rational lambda(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
    for (auto engine : {Engine::full_tuples, Engine::exceptional_only}) {
      auto a = packing_capacity(c, 8, engine);
      auto b = packing_capacity(c.scaled(lambda), 8, engine);
      EXPECT_EQ(b.lower, a.lower * lambda);
      EXPECT_EQ(b.upper, a.upper * lambda);
      EXPECT_EQ(b.witness, a.witness);
      EXPECT_EQ(b.attained, a.attained);
    }
  }
}

TEST(Capacity, MonotoneUnderGrowthAndAppending) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_config(rng, 5);
    auto base = packing_capacity(c, 8);
    std::vector<Rational> bigger = c.sizes();
    bigger[std::uniform_int_distribution<std::size_t>(0, bigger.size() - 1)(rng)] += Rational(1, 3);
    EXPECT_GE(packing_capacity(BallConfig(bigger), 8).lower, base.lower);
    EXPECT_GE(packing_capacity(c.with(Rational(1, 5)), 8).lower, base.lower);
  }
}

TEST(Capacity, EnginesAgreeWheneverBothCertify) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_config(rng, 5);
    auto full = packing_capacity(c, 12, Engine::full_tuples);
    auto exc = packing_capacity(c, 12, Engine::exceptional_only);
    EXPECT_TRUE(exc.exact()) << c.str();
    if (full.exact() && exc.exact()) EXPECT_EQ(full.lower, exc.lower) << c.str();
    // each engine's interval contains the other's exact value
    EXPECT_LE(full.lower, exc.upper);
    EXPECT_LE(exc.lower, full.upper);
  }
}

TEST(Capacity, NineBallsCertifyOnlyThroughFullTuples) {
  auto full = packing_capacity(BallConfig::equal(9), 4, Engine::full_tuples);
  EXPECT_TRUE(full.exact());
  EXPECT_EQ(full.lower, QuadraticValue(3));
  EXPECT_EQ(*full.witness, T(3, std::vector<std::int64_t>(9, 1)));
  // the shifted bound pins the value at 3 already, but no searched tuple attains it
  auto small = packing_capacity(BallConfig::equal(9), 2, Engine::combined);
  EXPECT_TRUE(small.exact());
  EXPECT_EQ(small.lower, QuadraticValue(3));
  EXPECT_EQ(small.attained, Attainment::unknown);
  EXPECT_EQ(decide_from_capacity(small, 3, Convention::open_target), Decision::undecided);
}

TEST(Capacity, TenBallsSitAtTheVolumeBoundWithUnknownAttainment) {
  auto r = packing_capacity(BallConfig::equal(10), 12);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.lower, QuadraticValue::sqrt(10));
  EXPECT_EQ(r.attained, Attainment::unknown);
  auto full = packing_capacity(BallConfig::equal(10), 12, Engine::full_tuples);
  EXPECT_EQ(full.upper, QuadraticValue::sqrt(10));
}

TEST(Decide, Examples) {
  EXPECT_EQ(decide_packing(balls("1,1,1"), 2, Convention::open_target), Decision::no);
  EXPECT_EQ(decide_packing(balls("1,1,1"), R("21/10"), Convention::open_target), Decision::yes);
  EXPECT_EQ(decide_packing(balls("1"), 1, Convention::open_target), Decision::no);
  EXPECT_EQ(decide_packing(balls("1"), 1, Convention::closed_target), Decision::yes);
  EXPECT_EQ(decide_packing(balls("1,1"), R("19/10")), Decision::no);
  EXPECT_THROW(decide_packing(balls("1"), 0), InputError);
}

TEST(Decide, AgreesWithExhaustiveTupleCheckOnSmallConfigs) {
  // Strict inequality for every tuple up to the certified degree is what "yes" means.
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_config(rng, 3);
    auto cap = packing_capacity(c, 12);
    if (!cap.exact() || !cap.lower.is_rational()) continue;
    Rational value = cap.lower.rational();
    Rational oracle_best = oracle::max_ratio_up_to(6, c.sizes());
    EXPECT_LE(oracle_best, value);
    EXPECT_EQ(decide_packing(c, value + Rational(1, 100)), Decision::yes);
    EXPECT_EQ(decide_packing(c, value - Rational(1, 100)), Decision::no);
  }
}

TEST(EqualBallFraction, SmallCounts) {
  const char* expect[] = {"1", "1/2", "3/4", "1", "20/25", "24/25", "63/64", "288/289"};
  for (int k = 1; k <= 8; ++k) {
    auto f = equal_ball_fraction(k, 12);
    ASSERT_TRUE(f.exact()) << k;
    EXPECT_EQ(f.lower, QuadraticValue(R(expect[k - 1]))) << k;
  }
  auto nine = equal_ball_fraction(9, 10);
  EXPECT_TRUE(nine.exact());
  EXPECT_EQ(nine.lower, QuadraticValue(1));
}

TEST(Tails, ExceptionalTailVanishesForFewPoints) {
  EXPECT_TRUE(detail::exceptional_tail_empty(8, 7));
  EXPECT_FALSE(detail::exceptional_tail_empty(8, 6));
  EXPECT_TRUE(detail::exceptional_tail_empty(5, 2));
  EXPECT_FALSE(detail::exceptional_tail_empty(9, 100));
}

TEST(Tails, BoundsDominateLaterDegrees) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 25; ++trial) {
    auto c = random_config(rng, 10);
    const std::int64_t searched = 4;
    auto tail = detail::full_tuple_tail(c, searched);
    for (std::int64_t d = searched + 1; d <= searched + 6; ++d)
      EXPECT_LE(QuadraticValue(per_degree_max(d, c).value / d), tail) << c.str() << " d=" << d;
    auto etail = detail::exceptional_tail(c, 1);
    for (const auto& t : enumerate_exceptional(7, c.count())) {
      if (t.degree() <= 1) continue;
      ASSERT_TRUE(etail.has_value());
      EXPECT_LE(QuadraticValue(t.pairing(c.sizes()) / t.degree()), *etail) << c.str() << " " << t.str();
    }
  }
}
