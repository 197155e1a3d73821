#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace boostcraft {

enum class StrategyId {
  adaboost,
  adacc1,
  adacc2,
  adan_cc1,
  adan_cc2,
  cgada,
  cgada_cal,
  adamec,
  adamec_cal,
  rareboost,
  csb1,
  csb2,
  adacost,
  adac1,
  adac2,
  adac3,
};

inline constexpr std::array kAllStrategies = {
    StrategyId::adaboost, StrategyId::adacc1,    StrategyId::adacc2,  StrategyId::adan_cc1,
    StrategyId::adan_cc2, StrategyId::cgada,     StrategyId::cgada_cal, StrategyId::adamec,
    StrategyId::adamec_cal, StrategyId::rareboost, StrategyId::csb1,  StrategyId::csb2,
    StrategyId::adacost,  StrategyId::adac1,     StrategyId::adac2,   StrategyId::adac3,
};

std::string_view to_string(StrategyId id) noexcept;
std::optional<StrategyId> parse_strategy(std::string_view name) noexcept;

/// Strategies that take a user-supplied (C+, C-) pair.
bool uses_fixed_costs(StrategyId id) noexcept;
/// Costs derived from the partial ensemble each round (AdaCC1/2).
bool uses_cumulative_costs(StrategyId id) noexcept;
/// Costs derived from the current weak learner alone (AdaN-CC1/2).
bool uses_learner_costs(StrategyId id) noexcept;
/// Initial distribution proportional to the fixed per-instance costs.
bool cost_proportional_init(StrategyId id) noexcept;
/// Platt calibration is fitted after the boosting loop.
bool is_calibrated(StrategyId id) noexcept;

}  // namespace boostcraft
