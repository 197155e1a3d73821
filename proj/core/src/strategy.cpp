#include "boostcraft/strategy.hpp"

namespace boostcraft {

std::string_view to_string(StrategyId id) noexcept {
  switch (id) {
    case StrategyId::adaboost: return "adaboost";
    case StrategyId::adacc1: return "adacc1";
    case StrategyId::adacc2: return "adacc2";
    case StrategyId::adan_cc1: return "adan_cc1";
    case StrategyId::adan_cc2: return "adan_cc2";
    case StrategyId::cgada: return "cgada";
    case StrategyId::cgada_cal: return "cgada_cal";
    case StrategyId::adamec: return "adamec";
    case StrategyId::adamec_cal: return "adamec_cal";
    case StrategyId::rareboost: return "rareboost";
    case StrategyId::csb1: return "csb1";
    case StrategyId::csb2: return "csb2";
    case StrategyId::adacost: return "adacost";
    case StrategyId::adac1: return "adac1";
    case StrategyId::adac2: return "adac2";
    case StrategyId::adac3: return "adac3";
  }
  return "unknown";
}

std::optional<StrategyId> parse_strategy(std::string_view name) noexcept {
  for (StrategyId id : kAllStrategies) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool uses_fixed_costs(StrategyId id) noexcept {
  switch (id) {
    case StrategyId::cgada:
    case StrategyId::cgada_cal:
    case StrategyId::adamec:
    case StrategyId::adamec_cal:
    case StrategyId::csb1:
    case StrategyId::csb2:
    case StrategyId::adacost:
    case StrategyId::adac1:
    case StrategyId::adac2:
    case StrategyId::adac3:
      return true;
    default:
      return false;
  }
}

bool uses_cumulative_costs(StrategyId id) noexcept {
  return id == StrategyId::adacc1 || id == StrategyId::adacc2;
}

bool uses_learner_costs(StrategyId id) noexcept {
  return id == StrategyId::adan_cc1 || id == StrategyId::adan_cc2;
}

bool cost_proportional_init(StrategyId id) noexcept {
  return uses_fixed_costs(id) && id != StrategyId::adamec && id != StrategyId::adamec_cal;
}

bool is_calibrated(StrategyId id) noexcept {
  return id == StrategyId::cgada_cal || id == StrategyId::adamec_cal;
}

}  // namespace boostcraft
