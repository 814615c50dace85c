#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ransomlot/econ.hpp"

using namespace ransomlot;

namespace {

AttackEconomics make(double x, double c, double p_success, double p_pay) {
  return {Money(x), CostModel::lump_sum(Money(c)), Probability(p_success), Probability(p_pay)};
}

AttackEconomics reference(double x) {
  return {Money(x), CostModel(Money(3000), Money(400), Money(800)), Probability(0.54),
          Probability(0.56)};
}

}  // namespace

TEST(Probability, RejectsOutOfRange) {
  EXPECT_NO_THROW(Probability(0.0));
  EXPECT_NO_THROW(Probability(1.0));
  EXPECT_THROW(Probability(-1e-12), InvalidValue);
  EXPECT_THROW(Probability(1.0 + 1e-12), InvalidValue);
  EXPECT_THROW(Probability(std::numeric_limits<double>::quiet_NaN()), InvalidValue);
}

TEST(Money, RejectsNonFinite) {
  EXPECT_THROW(Money(std::numeric_limits<double>::infinity()), InvalidValue);
  EXPECT_THROW(Money(std::numeric_limits<double>::quiet_NaN()), InvalidValue);
  EXPECT_NO_THROW(Money(-4200.0));
}

TEST(CostModel, TotalIsSumOfComponents) {
  const CostModel c(Money(3000), Money(400), Money(800));
  EXPECT_EQ(c.total().amount(), 4200.0);
  EXPECT_THROW(CostModel(Money(-1), Money(0), Money(0)), InvalidValue);
}

TEST(CostModel, ScalingKeepsProportions) {
  const CostModel c(Money(3000), Money(400), Money(800));
  const CostModel half = c.scaled_to(Money(2100));
  EXPECT_DOUBLE_EQ(half.product().amount(), 1500.0);
  EXPECT_DOUBLE_EQ(half.initial_access().amount(), 200.0);
  EXPECT_DOUBLE_EQ(half.loader().amount(), 400.0);
  EXPECT_EQ(CostModel().scaled_to(Money(10)).product().amount(), 10.0);
}

TEST(AttackEconomics, JointProbability) {
  const auto e = reference(170404);
  EXPECT_NEAR(e.p_win().value(), 0.3024, 1e-15);
  EXPECT_NEAR(e.p_lose().value(), 0.6976, 1e-15);
  EXPECT_THROW(make(-1, 0, 0.5, 0.5), InvalidValue);
}

TEST(Lottery, Validation) {
  EXPECT_THROW(Lottery({}, {}, Money(0)), InvalidValue);
  EXPECT_THROW(Lottery({Money(1)}, {Probability(0.5), Probability(0.5)}, Money(0)), InvalidValue);
  EXPECT_THROW(Lottery({Money(1), Money(2)}, {Probability(0.5), Probability(0.4)}, Money(0)),
               InvalidValue);
  EXPECT_NO_THROW(
      Lottery({Money(1), Money(2)}, {Probability(0.5), Probability(0.5 + 5e-10)}, Money(0)));
}

TEST(ExpectedUtility, Examples) {
  EXPECT_NEAR(expected_utility(make(7500, 4200, 1.0, 0.56)).amount(), 0.0, 1e-9);
  EXPECT_EQ(expected_utility(make(123456, 4200, 0.0, 0.7)).amount(), -4200.0);
  // Oracle: 0.3024 * 170404 - 4200 and 0.3024 * 312493 - 4200 in exact rationals.
  EXPECT_NEAR(expected_utility(reference(170404)).amount(), 47330.1696, 0.005);
  EXPECT_NEAR(expected_utility(reference(312493)).amount(), 90297.8832, 0.005);
}

TEST(LotteryExpectedUtility, Examples) {
  const Lottery two({Money(170404), Money(0)}, {Probability(0.3024), Probability(0.6976)},
                    Money(4200));
  EXPECT_NEAR(lottery_expected_utility(two).amount(), 47330.1696, 0.005);
  EXPECT_EQ(lottery_expected_utility(Lottery({Money(100)}, {Probability(1.0)}, Money(0))).amount(),
            100.0);
  const Lottery sym({Money(50), Money(50), Money(50)},
                    {Probability(1.0 / 3), Probability(1.0 / 3), Probability(1.0 / 3)}, Money(50));
  EXPECT_NEAR(lottery_expected_utility(sym).amount(), 0.0, 1e-12);
}

TEST(ExpectedBank, Examples) {
  EXPECT_EQ(expected_bank(Money(0), 0, reference(170404)).amount(), 0.0);
  EXPECT_NEAR(expected_bank(Money(0), 1000, reference(170404)).amount(), 47330169.6, 1.0);
  EXPECT_NEAR(expected_bank(Money(1000), 1, make(7500, 4200, 1.0, 0.56)).amount(), 1000.0, 1e-9);
}

TEST(PerTrialProfit, Examples) {
  const auto e = reference(170404);
  EXPECT_EQ(per_trial_profit(true, e).amount(), 166204.0);
  EXPECT_EQ(per_trial_profit(false, e).amount(), -4200.0);
  EXPECT_EQ(per_trial_profit(true, make(0, 0, 1, 1)).amount(), 0.0);
}

// ---------------------------------------------------------------------------
// Properties over random parameters

class EconProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0x5EED};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng); }
};

TEST_F(EconProperties, TwoPrizeLotteryMatchesExpectedUtility) {
  for (int i = 0; i < 2000; ++i) {
    const double x = uniform(0, 1e7);
    const double c = uniform(0, 1e5);
    const double ps = uniform(0, 1);
    const double pp = uniform(0, 1);
    const auto e = make(x, c, ps, pp);
    const double a = lottery_expected_utility(Lottery::from_attack(e)).amount();
    const double b = expected_utility(e).amount();
    EXPECT_LE(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(b)));
  }
}

TEST_F(EconProperties, Monotonicity) {
  for (int i = 0; i < 2000; ++i) {
    const double x = uniform(0, 1e7);
    const double c = uniform(0, 1e5);
    const double ps = uniform(0, 1);
    const double pp = uniform(0, 1);
    const auto e = make(x, c, ps, pp);
    const double ev = expected_utility(e).amount();
    EXPECT_GE(expected_utility(make(x + uniform(0, 1e5), c, ps, pp)).amount(), ev);
    EXPECT_GE(expected_utility(make(x, c, ps, std::min(1.0, pp + uniform(0, 0.5)))).amount(), ev);
    EXPECT_LT(expected_utility(make(x, c + uniform(1, 1e4), ps, pp)).amount(), ev);
  }
}

TEST_F(EconProperties, BankIncrementsByExpectedUtility) {
  for (int i = 0; i < 500; ++i) {
    const auto e = make(uniform(0, 1e6), uniform(0, 1e4), uniform(0, 1), uniform(0, 1));
    const Money b0(uniform(-1e5, 1e5));
    const auto k = static_cast<std::uint64_t>(uniform(1, 10000));
    const double diff = (expected_bank(b0, k, e) - expected_bank(b0, k - 1, e)).amount();
    const double ev = expected_utility(e).amount();
    EXPECT_NEAR(diff, ev, 1e-6 * std::max(1.0, std::abs(ev) * static_cast<double>(k)));
  }
}

TEST_F(EconProperties, SignLaw) {
  for (int i = 0; i < 2000; ++i) {
    const auto e = make(uniform(0, 1e6), uniform(0, 1e5), uniform(0, 1), uniform(0, 1));
    const bool profitable = e.p_win().value() * e.ransom().amount() > e.cost_total().amount();
    EXPECT_EQ(expected_utility(e).amount() > 0.0, profitable);
  }
}
