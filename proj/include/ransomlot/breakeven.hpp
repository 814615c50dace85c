#pragma once

// Break-even solvers and cartesian sensitivity sweeps.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ransomlot/econ.hpp"
#include "ransomlot/errors.hpp"

namespace ransomlot {

/// Ratio of break-even ransom to cost, 1 / p_win.
inline double break_even_multiplier(Probability p_win) {
  if (p_win.value() == 0.0) {
    throw ZeroProbability("no finite ransom breaks even when p_win = 0");
  }
  return 1.0 / p_win.value();
}

/// Ransom at which expected utility is zero. Defined as multiplier * cost so
/// that the two agree bit for bit.
inline Money break_even_ransom(Money cost, Probability p_win) {
  return Money(break_even_multiplier(p_win) * cost.amount());
}

inline Money break_even_ransom(const AttackEconomics& econ) {
  return break_even_ransom(econ.cost_total(), econ.p_win());
}

/// Conditional payment probability c / (p_success * x) at which EV is zero.
inline Probability break_even_pay_probability(Money cost, Money ransom, Probability p_success) {
  const double denom = p_success.value() * ransom.amount();
  if (denom == 0.0) {
    throw ZeroDenominator("break-even payment probability needs ransom > 0 and p_success > 0");
  }
  const double p = cost.amount() / denom;
  if (p > 1.0) {
    throw NotAchievable("attack is unprofitable even if every successful victim pays");
  }
  return Probability(p);
}

/// Per-attack cost p_win * x at which EV is zero.
inline Money break_even_cost(const AttackEconomics& econ) {
  return Money(econ.p_win().value() * econ.ransom().amount());
}

/// How many times the break-even ransom an observed ransom is.
inline double payout_multiple(Money observed_ransom, Money cost, Probability p_win) {
  if (cost.amount() == 0.0) {
    throw ZeroCost("payout multiple is undefined for a zero-cost attack");
  }
  return observed_ransom.amount() / break_even_ransom(cost, p_win).amount();
}

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepParameter { Ransom, CostTotal, PSuccess, PPayGivenSuccess };

inline std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Ransom: return "ransom";
    case SweepParameter::CostTotal: return "cost_total";
    case SweepParameter::PSuccess: return "p_success";
    case SweepParameter::PPayGivenSuccess: return "p_pay_given_success";
  }
  return "?";
}

inline bool parse_sweep_parameter(std::string_view name, SweepParameter& out) {
  for (auto p : {SweepParameter::Ransom, SweepParameter::CostTotal, SweepParameter::PSuccess,
                 SweepParameter::PPayGivenSuccess}) {
    if (to_string(p) == name) {
      out = p;
      return true;
    }
  }
  return false;
}

inline bool is_probability(SweepParameter p) {
  return p == SweepParameter::PSuccess || p == SweepParameter::PPayGivenSuccess;
}

/// Returns `base` with one parameter replaced. Throws InvalidValue when the
/// value breaks that field's invariant.
inline AttackEconomics assign(const AttackEconomics& base, SweepParameter p, double value) {
  switch (p) {
    case SweepParameter::Ransom: return base.with_ransom(Money(value));
    case SweepParameter::CostTotal: return base.with_cost_total(Money(value));
    case SweepParameter::PSuccess: return base.with_p_success(Probability(value));
    case SweepParameter::PPayGivenSuccess: return base.with_p_pay_given_success(Probability(value));
  }
  return base;
}

struct SweepAxis {
  SweepParameter parameter;
  std::vector<double> values;

  friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

class SweepGrid {
 public:
  SweepGrid(AttackEconomics base, std::vector<SweepAxis> axes)
      : base_(std::move(base)), axes_(std::move(axes)) {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
      const auto& axis = axes_[i];
      for (std::size_t j = 0; j < i; ++j) {
        if (axes_[j].parameter == axis.parameter) {
          throw InvalidValue("duplicate sweep axis " + std::string(to_string(axis.parameter)));
        }
      }
      if (axis.values.empty()) {
        throw InvalidValue("sweep axis " + std::string(to_string(axis.parameter)) + " is empty");
      }
      for (double v : axis.values) {
        (void)assign(base_, axis.parameter, v);
      }
    }
  }

  [[nodiscard]] const AttackEconomics& base() const noexcept { return base_; }
  [[nodiscard]] const std::vector<SweepAxis>& axes() const noexcept { return axes_; }

  /// Number of cells, saturating at UINT64_MAX.
  [[nodiscard]] std::uint64_t cell_count() const noexcept {
    std::uint64_t n = 1;
    for (const auto& a : axes_) {
      const auto len = static_cast<std::uint64_t>(a.values.size());
      if (n > std::numeric_limits<std::uint64_t>::max() / len) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      n *= len;
    }
    return n;
  }

 private:
  AttackEconomics base_;
  std::vector<SweepAxis> axes_;
};

struct SweepRow {
  std::vector<double> assignment;  // one value per axis, in axis order
  AttackEconomics econ;
  Money expected_value;
};

struct SweepResult {
  std::vector<SweepParameter> axes;
  std::vector<SweepRow> rows;
};

inline constexpr std::uint64_t kDefaultSweepCellCap = 10'000'000;

struct SweepOptions {
  std::uint64_t cell_cap = kDefaultSweepCellCap;
  unsigned threads = 1;
};

/// Evaluates expected_utility on every cell of the grid. Rows are row-major in
/// declared axis order (last axis fastest) regardless of thread count.
inline SweepResult run_sweep(const SweepGrid& grid, SweepOptions options = {}) {
  const std::uint64_t cells = grid.cell_count();
  if (cells > options.cell_cap) {
    throw GridTooLarge("sweep has " + std::to_string(cells) + " cells, cap is " +
                       std::to_string(options.cell_cap));
  }
  const auto& axes = grid.axes();

  SweepResult result;
  for (const auto& a : axes) {
    result.axes.push_back(a.parameter);
  }

  auto make_row = [&](std::uint64_t index) {
    std::vector<double> assignment(axes.size());
    AttackEconomics econ = grid.base();
    for (std::size_t i = axes.size(); i-- > 0;) {
      const auto len = axes[i].values.size();
      assignment[i] = axes[i].values[index % len];
      index /= len;
    }
    for (std::size_t i = 0; i < axes.size(); ++i) {
      econ = assign(econ, axes[i].parameter, assignment[i]);
    }
    const Money ev = expected_utility(econ);
    return SweepRow{std::move(assignment), econ, ev};
  };

  const auto n = static_cast<std::size_t>(cells);
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    result.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      result.rows.push_back(make_row(i));
    }
    return result;
  }

  // Each worker fills a contiguous block of its own slots.
  std::vector<std::vector<SweepRow>> blocks(threads);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          blocks[t].push_back(make_row(i));
        }
      });
    }
  }
  result.rows.reserve(n);
  for (auto& b : blocks) {
    std::move(b.begin(), b.end(), std::back_inserter(result.rows));
  }
  return result;
}

}  // namespace ransomlot
