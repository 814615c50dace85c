#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "ransomlot/breakeven.hpp"

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

TEST(BreakEvenRansom, Examples) {
  EXPECT_NEAR(break_even_ransom(Money(4200), Probability(0.3024)).amount(), 13888.89, 0.005);
  EXPECT_NEAR(break_even_ransom(Money(4200), Probability(0.56)).amount(), 7500.0, 1e-9);
  EXPECT_EQ(break_even_ransom(Money(0), Probability(0.5)).amount(), 0.0);
  EXPECT_THROW(break_even_ransom(Money(4200), Probability(0.0)), ZeroProbability);
}

TEST(BreakEvenPayProbability, Examples) {
  EXPECT_NEAR(break_even_pay_probability(Money(4200), Money(312493), Probability(0.54)).value(),
              0.02489, 5e-6);
  EXPECT_NEAR(break_even_pay_probability(Money(4200), Money(170404), Probability(0.54)).value(),
              0.04564, 5e-6);
  EXPECT_EQ(break_even_pay_probability(Money(0), Money(100), Probability(0.5)).value(), 0.0);
}

TEST(BreakEvenPayProbability, Errors) {
  EXPECT_THROW(break_even_pay_probability(Money(4200), Money(0), Probability(0.5)),
               ZeroDenominator);
  EXPECT_THROW(break_even_pay_probability(Money(4200), Money(1000), Probability(0.0)),
               ZeroDenominator);
  EXPECT_THROW(break_even_pay_probability(Money(4200), Money(5000), Probability(0.54)),
               NotAchievable);
  // Exactly at the boundary is achievable.
  EXPECT_EQ(break_even_pay_probability(Money(500), Money(1000), Probability(0.5)).value(), 1.0);
}

TEST(BreakEvenCost, Examples) {
  EXPECT_NEAR(break_even_cost(reference(170404)).amount(), 51530.1696, 0.005);
  EXPECT_EQ(break_even_cost(make(99999, 10, 0.0, 0.5)).amount(), 0.0);
  EXPECT_NEAR(break_even_cost(make(7500, 4200, 1.0, 0.56)).amount(), 4200.0, 1e-9);
}

TEST(BreakEvenMultiplier, Examples) {
  EXPECT_NEAR(break_even_multiplier(Probability(0.56)), 1.7857, 5e-5);
  EXPECT_EQ(break_even_multiplier(Probability(1.0)), 1.0);
  EXPECT_NEAR(break_even_multiplier(Probability(0.3024)), 3.306878306878307, 1e-12);
  EXPECT_THROW(break_even_multiplier(Probability(0.0)), ZeroProbability);
}

TEST(PayoutMultiple, Examples) {
  EXPECT_NEAR(payout_multiple(Money(312493), Money(4200), Probability(0.3024)), 22.5, 0.05);
  EXPECT_NEAR(payout_multiple(Money(170404), Money(4200), Probability(0.3024)), 12.3, 0.05);
  EXPECT_NEAR(payout_multiple(Money(13888.89), Money(4200), Probability(0.3024)), 1.0, 1e-4);
  EXPECT_THROW(payout_multiple(Money(1), Money(0), Probability(0.3)), ZeroCost);
  EXPECT_THROW(payout_multiple(Money(1), Money(1), Probability(0.0)), ZeroProbability);
}

TEST(RunSweep, HalvingPayProbability) {
  const SweepGrid grid(reference(170404), {{SweepParameter::PPayGivenSuccess, {0.56, 0.28}}});
  const SweepResult r = run_sweep(grid);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_NEAR(r.rows[0].expected_value.amount(), 47330.1696, 0.005);
  EXPECT_NEAR(r.rows[1].expected_value.amount(), 21565.0848, 0.005);
}

TEST(RunSweep, NoAxesIsSingleCell) {
  const SweepResult r = run_sweep(SweepGrid(reference(170404), {}));
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].expected_value, expected_utility(reference(170404)));
}

TEST(RunSweep, CostAxis) {
  const auto base = make(170404, 4200, 1.0, 0.3024);
  const SweepResult r = run_sweep(SweepGrid(base, {{SweepParameter::CostTotal, {0, 51530.1696}}}));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_NEAR(r.rows[0].expected_value.amount(), 51530.1696, 0.005);
  EXPECT_NEAR(r.rows[1].expected_value.amount(), 0.0, 0.005);
}

TEST(RunSweep, CostAxisScalesComponents) {
  const SweepResult r =
      run_sweep(SweepGrid(reference(170404), {{SweepParameter::CostTotal, {8400}}}));
  const CostModel& c = r.rows[0].econ.cost();
  EXPECT_DOUBLE_EQ(c.product().amount(), 6000);
  EXPECT_DOUBLE_EQ(c.initial_access().amount(), 800);
  EXPECT_DOUBLE_EQ(c.loader().amount(), 1600);
}

TEST(RunSweep, RowMajorOrder) {
  const SweepGrid grid(reference(1000), {{SweepParameter::Ransom, {1, 2}},
                                         {SweepParameter::PSuccess, {0.1, 0.2, 0.3}}});
  const SweepResult r = run_sweep(grid);
  ASSERT_EQ(r.rows.size(), 6u);
  const std::vector<std::vector<double>> expected{{1, 0.1}, {1, 0.2}, {1, 0.3},
                                                  {2, 0.1}, {2, 0.2}, {2, 0.3}};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.rows[i].assignment, expected[i]);
  }
}

TEST(RunSweep, GridValidation) {
  const auto base = reference(1000);
  EXPECT_THROW(SweepGrid(base, {{SweepParameter::PSuccess, {}}}), InvalidValue);
  EXPECT_THROW(SweepGrid(base, {{SweepParameter::PSuccess, {1.5}}}), InvalidValue);
  EXPECT_THROW(SweepGrid(base, {{SweepParameter::Ransom, {-1}}}), InvalidValue);
  EXPECT_THROW(SweepGrid(base, {{SweepParameter::Ransom, {1}}, {SweepParameter::Ransom, {2}}}),
               InvalidValue);
}

TEST(RunSweep, CellCap) {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 0.0);
  const SweepGrid grid(reference(1000), {{SweepParameter::Ransom, v},
                                         {SweepParameter::CostTotal, v}});
  EXPECT_EQ(grid.cell_count(), 10000u);
  EXPECT_THROW(run_sweep(grid, {9999, 1}), GridTooLarge);
  EXPECT_NO_THROW(run_sweep(grid, {10000, 1}));
}

TEST(RunSweep, ThreadCountDoesNotChangeRows) {
  std::vector<double> xs, ps;
  for (int i = 0; i < 37; ++i) xs.push_back(1000.0 * i);
  for (int i = 0; i <= 20; ++i) ps.push_back(i / 20.0);
  const SweepGrid grid(reference(1000), {{SweepParameter::Ransom, xs},
                                         {SweepParameter::PPayGivenSuccess, ps}});
  const auto serial = run_sweep(grid, {kDefaultSweepCellCap, 1});
  for (unsigned t : {2u, 3u, 8u}) {
    const auto parallel = run_sweep(grid, {kDefaultSweepCellCap, t});
    ASSERT_EQ(parallel.rows.size(), serial.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      EXPECT_EQ(parallel.rows[i].assignment, serial.rows[i].assignment);
      EXPECT_EQ(parallel.rows[i].expected_value, serial.rows[i].expected_value);
    }
  }
}

// ---------------------------------------------------------------------------
// Properties

class BreakEvenProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0xB3E4};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng); }
};

TEST_F(BreakEvenProperties, RansomRoundTrip) {
  for (int i = 0; i < 5000; ++i) {
    const double c = uniform(1e-3, 1e5);
    const double p = uniform(1e-3, 1.0);
    const Money x = break_even_ransom(Money(c), Probability(p));
    const AttackEconomics e(x, CostModel::lump_sum(Money(c)), Probability(1.0), Probability(p));
    EXPECT_NEAR(expected_utility(e).amount(), 0.0, 1e-6);
  }
}

TEST_F(BreakEvenProperties, PayProbabilityRoundTrip) {
  int defined = 0;
  for (int i = 0; i < 5000; ++i) {
    const double c = uniform(0, 1e5);
    const double x = uniform(1, 1e6);
    const double ps = uniform(1e-3, 1.0);
    try {
      const Probability pp = break_even_pay_probability(Money(c), Money(x), Probability(ps));
      const AttackEconomics e(Money(x), CostModel::lump_sum(Money(c)), Probability(ps), pp);
      EXPECT_NEAR(expected_utility(e).amount(), 0.0, 1e-6);
      ++defined;
    } catch (const NotAchievable&) {
      EXPECT_GT(c, ps * x);
    }
  }
  EXPECT_GT(defined, 1000);
}

TEST_F(BreakEvenProperties, MultiplierTimesCostIsBreakEvenRansom) {
  for (int i = 0; i < 5000; ++i) {
    const double c = uniform(0, 1e5);
    const Probability p(uniform(1e-6, 1.0));
    EXPECT_EQ(break_even_multiplier(p) * c, break_even_ransom(Money(c), p).amount());
  }
}

TEST_F(BreakEvenProperties, SweepRowsMatchExpectedUtility) {
  const SweepGrid grid(reference(170404), {{SweepParameter::Ransom, {0, 5000, 170404, 312493}},
                                           {SweepParameter::CostTotal, {0, 4200, 9000}},
                                           {SweepParameter::PSuccess, {0, 0.54, 1}},
                                           {SweepParameter::PPayGivenSuccess, {0.14, 0.28, 0.56}}});
  const auto r = run_sweep(grid);
  EXPECT_EQ(r.rows.size(), 4u * 3 * 3 * 3);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.expected_value, expected_utility(row.econ));
  }
}

TEST_F(BreakEvenProperties, AxisReorderingPermutesRows) {
  const SweepAxis a{SweepParameter::Ransom, {1000, 50000, 312493}};
  const SweepAxis b{SweepParameter::PPayGivenSuccess, {0.1, 0.56}};
  const SweepAxis c{SweepParameter::CostTotal, {100, 4200}};
  auto key_rows = [](const SweepResult& r) {
    std::vector<std::tuple<double, double, double, double, double>> rows;
    for (const auto& row : r.rows) {
      rows.emplace_back(row.econ.ransom().amount(), row.econ.p_pay_given_success().value(),
                        row.econ.cost_total().amount(), row.econ.p_success().value(),
                        row.expected_value.amount());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  const auto base = reference(1000);
  const auto ref = key_rows(run_sweep(SweepGrid(base, {a, b, c})));
  EXPECT_EQ(key_rows(run_sweep(SweepGrid(base, {c, a, b}))), ref);
  EXPECT_EQ(key_rows(run_sweep(SweepGrid(base, {b, c, a}))), ref);
}
