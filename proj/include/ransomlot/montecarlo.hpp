#pragma once

// Repeated-attack simulation: each trial is a Bernoulli(p_win) draw, realized
// as uniform() < p_win on a xoshiro256** stream. Because the draw does not
// depend on p_win, runs sharing a seed are monotonically coupled across p.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "ransomlot/econ.hpp"
#include "ransomlot/errors.hpp"
#include "ransomlot/rng.hpp"

namespace ransomlot {

inline constexpr std::uint64_t kDefaultSeed = 0xDEC0DE;

struct TrialTrace {
  std::uint64_t seed;
  AttackEconomics econ;
  Money b0;
  std::vector<bool> outcomes;
  std::vector<Money> bank_series;  // bank_series[i] = b0 + profit through trial i

  [[nodiscard]] std::size_t trials() const noexcept { return outcomes.size(); }

  [[nodiscard]] std::uint64_t wins() const noexcept {
    std::uint64_t n = 0;
    for (bool w : outcomes) {
      n += w ? 1 : 0;
    }
    return n;
  }

  [[nodiscard]] Money final_bank() const { return bank_series.empty() ? b0 : bank_series.back(); }
};

struct TraceSummary {
  std::uint64_t trials;
  std::uint64_t wins;
  Probability empirical_win_rate;
  Money final_bank;
  Money mean_per_trial_profit;
  Money sample_std_per_trial_profit;  // n-1 divisor; 0 for a single trial
};

/// Simulates k attacks from bank b0. Identical arguments give identical traces.
inline TrialTrace run_trials(const AttackEconomics& econ, std::uint64_t k, Money b0,
                             std::uint64_t seed) {
  if (k == 0) {
    throw InvalidValue("trial count must be >= 1");
  }
  const double p = econ.p_win().value();
  const Money win = per_trial_profit(true, econ);
  const Money loss = per_trial_profit(false, econ);

  TrialTrace trace{seed, econ, b0, {}, {}};
  trace.outcomes.reserve(k);
  trace.bank_series.reserve(k);

  Xoshiro256StarStar rng(seed);
  Money bank = b0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const bool won = rng.uniform() < p;
    bank = bank + (won ? win : loss);
    trace.outcomes.push_back(won);
    trace.bank_series.push_back(bank);
  }
  return trace;
}

inline TraceSummary summarize(const TrialTrace& trace) {
  const std::size_t n = trace.trials();
  if (n == 0) {
    throw InvalidValue("cannot summarize an empty trace");
  }
  const double win = per_trial_profit(true, trace.econ).amount();
  const double loss = per_trial_profit(false, trace.econ).amount();
  const std::uint64_t wins = trace.wins();

  // Two distinct values only, so the moments follow from the win count.
  const double nd = static_cast<double>(n);
  const double mean = (static_cast<double>(wins) * win + static_cast<double>(n - wins) * loss) / nd;
  double var = 0.0;
  if (n > 1) {
    const double dw = win - mean;
    const double dl = loss - mean;
    var = (static_cast<double>(wins) * dw * dw + static_cast<double>(n - wins) * dl * dl) / (nd - 1.0);
  }
  return TraceSummary{n,
                      wins,
                      Probability(static_cast<double>(wins) / nd),
                      trace.final_bank(),
                      Money(mean),
                      Money(std::sqrt(var))};
}

/// Runs one trace per seed, possibly on several threads. Output order follows
/// `seeds` and does not depend on the thread count.
inline std::vector<TrialTrace> run_trials_batch(const AttackEconomics& econ, std::uint64_t k,
                                                Money b0, std::span<const std::uint64_t> seeds,
                                                unsigned threads = 1) {
  if (k == 0) {
    throw InvalidValue("trial count must be >= 1");
  }
  std::vector<TrialTrace> out(seeds.size(), TrialTrace{0, econ, b0, {}, {}});
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(seeds.size())));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < seeds.size(); i += threads) {
          out[i] = run_trials(econ, k, b0, seeds[i]);
        }
      });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The three-run accumulated-utility experiment: x = 170404, c = 4200 and
// joint win probability 0.1, 0.3024 and 0.5, 1000 trials each.

inline constexpr std::array<double, 3> kFigure1WinProbabilities{0.1, 0.3024, 0.5};
inline constexpr double kFigure1Ransom = 170404.0;
inline constexpr std::uint64_t kFigure1Trials = 1000;

/// Cost model of the reference scenario: $3000 product, $400 access, $800 loader.
inline CostModel reference_cost_model() { return {Money(3000.0), Money(400.0), Money(800.0)}; }

/// Economics of one Figure 1 run. The joint probability is carried by
/// p_pay_given_success with p_success = 1, so p_win equals `p` exactly.
inline AttackEconomics figure1_economics(double p) {
  return {Money(kFigure1Ransom), reference_cost_model(), Probability(1.0), Probability(p)};
}

inline std::array<TrialTrace, 3> replicate_figure1(const std::array<std::uint64_t, 3>& seeds,
                                                   std::uint64_t k = kFigure1Trials,
                                                   Money b0 = Money(0.0)) {
  return {run_trials(figure1_economics(kFigure1WinProbabilities[0]), k, b0, seeds[0]),
          run_trials(figure1_economics(kFigure1WinProbabilities[1]), k, b0, seeds[1]),
          run_trials(figure1_economics(kFigure1WinProbabilities[2]), k, b0, seeds[2])};
}

}  // namespace ransomlot
