#pragma once

// Defensive strategies as parameter transforms on AttackEconomics.
//
// Each action scales one of the two attacker-facing probabilities by an
// independent factor; ransom and cost are never touched. Insurance leaves the
// attacker's lottery as it is.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "ransomlot/breakeven.hpp"
#include "ransomlot/econ.hpp"
#include "ransomlot/errors.hpp"

namespace ransomlot {

/// Hardening that stops a fraction `reduction` of launched attacks.
struct AttackSuccessReduction {
  Probability reduction;
  friend bool operator==(const AttackSuccessReduction&, const AttackSuccessReduction&) = default;
};

/// Free decrypters available for a fraction `coverage` of infections.
struct DecrypterAvailability {
  Probability coverage;
  friend bool operator==(const DecrypterAvailability&, const DecrypterAvailability&) = default;
};

/// Off-site backups held by `adoption` of victims, restoring successfully with
/// probability `effectiveness`.
struct BackupAdoption {
  Probability adoption;
  Probability effectiveness;
  friend bool operator==(const BackupAdoption&, const BackupAdoption&) = default;
};

struct CyberInsurance {
  friend bool operator==(const CyberInsurance&, const CyberInsurance&) = default;
};

using MitigationAction =
    std::variant<AttackSuccessReduction, DecrypterAvailability, BackupAdoption, CyberInsurance>;

inline std::string_view kind_name(const MitigationAction& action) {
  constexpr std::string_view names[] = {"AttackSuccessReduction", "DecrypterAvailability",
                                        "BackupAdoption", "CyberInsurance"};
  return names[action.index()];
}

namespace detail {

struct ChannelFactors {
  double success = 1.0;  // multiplier on p_success
  double pay = 1.0;      // multiplier on p_pay_given_success
};

inline ChannelFactors factors(const MitigationAction& action) {
  return std::visit(
      [](const auto& a) -> ChannelFactors {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AttackSuccessReduction>) {
          return {1.0 - a.reduction.value(), 1.0};
        } else if constexpr (std::is_same_v<T, DecrypterAvailability>) {
          return {1.0, 1.0 - a.coverage.value()};
        } else if constexpr (std::is_same_v<T, BackupAdoption>) {
          return {1.0, 1.0 - a.adoption.value() * a.effectiveness.value()};
        } else {
          return {1.0, 1.0};
        }
      },
      action);
}

inline AttackEconomics scale_probabilities(const AttackEconomics& econ, std::span<double> success,
                                           std::span<double> pay) {
  // Multiplying in sorted order makes the result independent of action order.
  std::sort(success.begin(), success.end());
  std::sort(pay.begin(), pay.end());
  double ps = econ.p_success().value();
  for (double f : success) {
    ps *= f;
  }
  double pp = econ.p_pay_given_success().value();
  for (double f : pay) {
    pp *= f;
  }
  AttackEconomics out = econ.with_p_success(Probability(ps)).with_p_pay_given_success(Probability(pp));
  assert(out.ransom() == econ.ransom() && out.cost() == econ.cost());
  return out;
}

}  // namespace detail

inline AttackEconomics apply_action(const AttackEconomics& econ, const MitigationAction& action) {
  if (std::holds_alternative<CyberInsurance>(action)) {
    return econ;
  }
  auto f = detail::factors(action);
  double s[] = {f.success};
  double p[] = {f.pay};
  return detail::scale_probabilities(econ, s, p);
}

/// Applies every action. Order does not matter: all factors commute and are
/// multiplied in a canonical order, so permutations agree bit for bit.
inline AttackEconomics apply_portfolio(const AttackEconomics& econ,
                                       std::span<const MitigationAction> actions) {
  std::vector<double> success;
  std::vector<double> pay;
  for (const auto& a : actions) {
    if (std::holds_alternative<CyberInsurance>(a)) {
      continue;
    }
    auto f = detail::factors(a);
    if (std::holds_alternative<AttackSuccessReduction>(a)) {
      success.push_back(f.success);
    } else {
      pay.push_back(f.pay);
    }
  }
  if (success.empty() && pay.empty()) {
    return econ;
  }
  return detail::scale_probabilities(econ, success, pay);
}

/// Inputs for comparing yearly attack income against a legitimate salary.
struct Annualization {
  std::uint64_t attacks_per_year = 0;
  Money salary_threshold;

  friend bool operator==(const Annualization&, const Annualization&) = default;
};

struct AnnualizedComparison {
  std::uint64_t attacks_per_year;
  Money annual_ev;
  Money salary_threshold;
  bool substitutable;  // annual_ev <= salary_threshold
};

struct MitigationReport {
  AttackEconomics baseline;
  AttackEconomics transformed;
  Money baseline_ev;
  Money transformed_ev;
  Money ev_reduction;
  bool still_profitable;
  std::optional<AnnualizedComparison> annualized;
};

inline MitigationReport evaluate(const AttackEconomics& econ,
                                 std::span<const MitigationAction> actions,
                                 std::optional<Annualization> annual = std::nullopt) {
  AttackEconomics transformed = apply_portfolio(econ, actions);
  const Money base_ev = expected_utility(econ);
  const Money new_ev = expected_utility(transformed);
  MitigationReport report{econ, transformed, base_ev, new_ev, base_ev - new_ev,
                          new_ev.amount() > 0.0, std::nullopt};
  if (annual) {
    if (annual->salary_threshold.amount() < 0.0) {
      throw InvalidValue("salary_threshold must be >= 0");
    }
    const Money yearly = static_cast<double>(annual->attacks_per_year) * new_ev;
    report.annualized = AnnualizedComparison{annual->attacks_per_year, yearly,
                                             annual->salary_threshold,
                                             yearly <= annual->salary_threshold};
  }
  return report;
}

/// P(paid | success) that makes the expected value equal `target_ev`.
inline Probability required_pay_probability_for_target_ev(const AttackEconomics& econ,
                                                          Money target_ev) {
  const double denom = econ.p_success().value() * econ.ransom().amount();
  if (denom == 0.0) {
    throw ZeroDenominator("target payment probability needs ransom > 0 and p_success > 0");
  }
  const double p = (target_ev.amount() + econ.cost_total().amount()) / denom;
  if (!(p >= 0.0 && p <= 1.0)) {
    throw NotAchievable("no payment probability in [0,1] reaches the target expected value");
  }
  return Probability(p);
}

}  // namespace ransomlot
