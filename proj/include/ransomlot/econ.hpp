#pragma once

// Domain types and closed-form expected-utility arithmetic for the attacker
// lottery. Utility is the identity (risk-neutral attacker); all amounts are
// US dollars held at full binary64 precision. Rounding to cents happens only
// when formatting (see format.hpp).

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ransomlot/errors.hpp"

namespace ransomlot {

/// A probability in the closed interval [0, 1].
class Probability {
 public:
  constexpr Probability() = default;

  explicit Probability(double value) : value_(value) {
    // Written so that NaN fails too.
    if (!(value >= 0.0 && value <= 1.0)) {
      throw InvalidValue("probability out of range [0,1]: " + std::to_string(value));
    }
  }

  [[nodiscard]] constexpr double value() const noexcept { return value_; }
  [[nodiscard]] Probability complement() const { return Probability(1.0 - value_); }

  friend constexpr auto operator<=>(Probability, Probability) = default;

 private:
  double value_ = 0.0;
};

/// A finite dollar amount. Signed: expected values may be negative.
class Money {
 public:
  constexpr Money() = default;

  explicit Money(double amount) : amount_(amount) {
    if (!std::isfinite(amount)) {
      throw InvalidValue("money amount must be finite");
    }
  }

  [[nodiscard]] constexpr double amount() const noexcept { return amount_; }

  friend constexpr auto operator<=>(Money, Money) = default;

  friend Money operator+(Money a, Money b) { return Money(a.amount_ + b.amount_); }
  friend Money operator-(Money a, Money b) { return Money(a.amount_ - b.amount_); }
  friend Money operator-(Money a) { return Money(-a.amount_); }
  friend Money operator*(Money a, double k) { return Money(a.amount_ * k); }
  friend Money operator*(double k, Money a) { return Money(k * a.amount_); }

 private:
  double amount_ = 0.0;
};

namespace detail {
inline Money nonnegative(Money m, const char* what) {
  if (m.amount() < 0.0) {
    throw InvalidValue(std::string(what) + " must be >= 0");
  }
  return m;
}
}  // namespace detail

/// Per-attack cost, split into the ransomware product, the purchased initial
/// access, and the loader used to deliver the payload.
class CostModel {
 public:
  CostModel() = default;

  CostModel(Money product, Money initial_access, Money loader)
      : product_(detail::nonnegative(product, "cost.product")),
        initial_access_(detail::nonnegative(initial_access, "cost.access")),
        loader_(detail::nonnegative(loader, "cost.loader")) {}

  /// A cost carried entirely by the product component.
  static CostModel lump_sum(Money total) { return {total, Money(0.0), Money(0.0)}; }

  [[nodiscard]] Money product() const noexcept { return product_; }
  [[nodiscard]] Money initial_access() const noexcept { return initial_access_; }
  [[nodiscard]] Money loader() const noexcept { return loader_; }
  [[nodiscard]] Money total() const { return product_ + initial_access_ + loader_; }

  /// Rescales the components proportionally so that total() becomes `target`.
  /// A zero-cost model has no proportions; the whole target goes to product.
  [[nodiscard]] CostModel scaled_to(Money target) const {
    detail::nonnegative(target, "cost_total");
    const double current = total().amount();
    if (current == 0.0) {
      return lump_sum(target);
    }
    const double k = target.amount() / current;
    return {product_ * k, initial_access_ * k, loader_ * k};
  }

  friend bool operator==(const CostModel&, const CostModel&) = default;

 private:
  Money product_;
  Money initial_access_;
  Money loader_;
};

/// Parameters of one attack scenario: ransom x, cost c, P(success) and
/// P(paid | success). The joint win probability is derived, never stored.
class AttackEconomics {
 public:
  AttackEconomics(Money ransom, CostModel cost, Probability p_success,
                  Probability p_pay_given_success)
      : ransom_(detail::nonnegative(ransom, "ransom")),
        cost_(cost),
        p_success_(p_success),
        p_pay_given_success_(p_pay_given_success) {}

  [[nodiscard]] Money ransom() const noexcept { return ransom_; }
  [[nodiscard]] const CostModel& cost() const noexcept { return cost_; }
  [[nodiscard]] Money cost_total() const { return cost_.total(); }
  [[nodiscard]] Probability p_success() const noexcept { return p_success_; }
  [[nodiscard]] Probability p_pay_given_success() const noexcept { return p_pay_given_success_; }

  [[nodiscard]] Probability p_win() const {
    return Probability(p_success_.value() * p_pay_given_success_.value());
  }
  [[nodiscard]] Probability p_lose() const { return p_win().complement(); }

  [[nodiscard]] AttackEconomics with_ransom(Money x) const {
    return {x, cost_, p_success_, p_pay_given_success_};
  }
  [[nodiscard]] AttackEconomics with_cost(CostModel c) const {
    return {ransom_, c, p_success_, p_pay_given_success_};
  }
  [[nodiscard]] AttackEconomics with_cost_total(Money c) const {
    return with_cost(cost_.scaled_to(c));
  }
  [[nodiscard]] AttackEconomics with_p_success(Probability p) const {
    return {ransom_, cost_, p, p_pay_given_success_};
  }
  [[nodiscard]] AttackEconomics with_p_pay_given_success(Probability p) const {
    return {ransom_, cost_, p_success_, p};
  }

  friend bool operator==(const AttackEconomics&, const AttackEconomics&) = default;

 private:
  Money ransom_;
  CostModel cost_;
  Probability p_success_;
  Probability p_pay_given_success_;
};

inline constexpr double kLotteryNormalizationTolerance = 1e-9;

/// A discrete lottery: prize i is won with probability i, at an entry cost.
class Lottery {
 public:
  Lottery(std::vector<Money> prizes, std::vector<Probability> probabilities, Money entry_cost)
      : prizes_(std::move(prizes)),
        probabilities_(std::move(probabilities)),
        entry_cost_(detail::nonnegative(entry_cost, "entry cost")) {
    if (prizes_.empty()) {
      throw InvalidValue("lottery needs at least one prize");
    }
    if (prizes_.size() != probabilities_.size()) {
      throw InvalidValue("lottery prizes and probabilities differ in length");
    }
    double sum = 0.0;
    for (auto p : probabilities_) {
      sum += p.value();
    }
    if (std::abs(sum - 1.0) > kLotteryNormalizationTolerance) {
      throw InvalidValue("lottery probabilities sum to " + std::to_string(sum) + ", not 1");
    }
  }

  /// The two-outcome attacker lottery {x, 0} with {p_win, p_lose}.
  static Lottery from_attack(const AttackEconomics& econ) {
    return Lottery({econ.ransom(), Money(0.0)}, {econ.p_win(), econ.p_lose()}, econ.cost_total());
  }

  [[nodiscard]] const std::vector<Money>& prizes() const noexcept { return prizes_; }
  [[nodiscard]] const std::vector<Probability>& probabilities() const noexcept {
    return probabilities_;
  }
  [[nodiscard]] Money entry_cost() const noexcept { return entry_cost_; }

 private:
  std::vector<Money> prizes_;
  std::vector<Probability> probabilities_;
  Money entry_cost_;
};

/// Expected profit of one attack: p_win * x - c.
inline Money expected_utility(const AttackEconomics& econ) {
  return Money(econ.p_win().value() * econ.ransom().amount() - econ.cost_total().amount());
}

/// Sum of p_i * x_i minus the entry cost.
inline Money lottery_expected_utility(const Lottery& lot) {
  double acc = 0.0;
  for (std::size_t i = 0; i < lot.prizes().size(); ++i) {
    acc += lot.probabilities()[i].value() * lot.prizes()[i].amount();
  }
  return Money(acc - lot.entry_cost().amount());
}

/// Expected bank after k trials starting from b0.
inline Money expected_bank(Money b0, std::uint64_t k, const AttackEconomics& econ) {
  return b0 + Money(static_cast<double>(k) * expected_utility(econ).amount());
}

/// Realized profit of a single trial: x - c on a win, -c otherwise.
inline Money per_trial_profit(bool won, const AttackEconomics& econ) {
  const double c = econ.cost_total().amount();
  return Money(won ? econ.ransom().amount() - c : -c);
}

}  // namespace ransomlot
