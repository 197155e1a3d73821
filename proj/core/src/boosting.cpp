#include "boostcraft/boosting.hpp"

#include <cmath>
#include <string>

#include "boostcraft/calibration.hpp"
#include "boostcraft/error.hpp"
#include "boostcraft/stump.hpp"
#include "boostcraft/tracker.hpp"

namespace boostcraft {

namespace {

enum class AlphaRule { error_ratio, cost_inside, cost_ratio, cost_squared, adacost, rareboost };

AlphaRule alpha_rule(StrategyId id) {
  switch (id) {
    case StrategyId::adacc1:
    case StrategyId::adan_cc1:
    case StrategyId::adac1:
      return AlphaRule::cost_inside;
    case StrategyId::adacc2:
    case StrategyId::adan_cc2:
    case StrategyId::adac2:
      return AlphaRule::cost_ratio;
    case StrategyId::adac3:
      return AlphaRule::cost_squared;
    case StrategyId::adacost:
      return AlphaRule::adacost;
    case StrategyId::rareboost:
      return AlphaRule::rareboost;
    default:
      // AdaBoost, CGAda, AdaMEC and CSB1/2 all vote with the plain error ratio.
      return AlphaRule::error_ratio;
  }
}

double half_log_ratio(double num, double den) {
  return 0.5 * std::log(num / (den > kMinErrorMass ? den : kMinErrorMass));
}

}  // namespace

void StrategyConfig::validate() const {
  if (rounds == 0) throw ConfigError("number of boosting rounds must be positive");
  if (uses_fixed_costs(strategy)) {
    if (!fixed_costs) {
      throw ConfigError(std::string(to_string(strategy)) + " requires fixed costs (C+, C-)");
    }
    fixed_costs->validate();
  } else if (fixed_costs) {
    throw ConfigError(std::string(to_string(strategy)) + " is parameter-free and rejects costs");
  }
}

double adacost_beta(double cost, bool misclassified) noexcept {
  return misclassified ? 0.5 * (1.0 + cost) : 0.5 * (1.0 - cost);
}

RoundStats round_stats(const WeightDistribution& weights, std::span<const double> costs,
                       std::span<const Label> predictions, std::span<const Label> labels) {
  const std::size_t n = weights.size();
  if (costs.size() != n || predictions.size() != n || labels.size() != n) {
    throw DimensionMismatch("round statistics inputs differ in length");
  }
  RoundStats s;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = weights[i];
    const double c = costs[i];
    const bool correct = predictions[i] == labels[i];
    s.cost_total_mass += c * d;
    if (correct) {
      s.correct_mass += d;
      s.cost_correct_mass += c * d;
      s.cost_sq_correct_mass += c * c * d;
      s.adacost_margin += d * adacost_beta(c, false);
    } else {
      s.wrong_mass += d;
      s.cost_wrong_mass += c * d;
      s.cost_sq_wrong_mass += c * c * d;
      s.adacost_margin -= d * adacost_beta(c, true);
    }
    if (predictions[i] == kPositive) {
      (labels[i] == kPositive ? s.tp_mass : s.fp_mass) += d;
    } else {
      (labels[i] == kNegative ? s.tn_mass : s.fn_mass) += d;
    }
  }
  return s;
}

Continuation continuation_check(StrategyId strategy, const RoundStats& s) {
  const bool perfect = !(s.wrong_mass > 0.0);
  switch (alpha_rule(strategy)) {
    case AlphaRule::error_ratio:
      if (perfect) return Continuation::last_round;
      return s.correct_mass > s.wrong_mass ? Continuation::proceed : Continuation::stop;
    case AlphaRule::cost_inside:
    case AlphaRule::cost_ratio:
      if (perfect) return Continuation::last_round;
      return s.cost_correct_mass > s.cost_wrong_mass ? Continuation::proceed : Continuation::stop;
    case AlphaRule::cost_squared:
      if (perfect) return Continuation::last_round;
      return s.cost_sq_correct_mass > s.cost_sq_wrong_mass ? Continuation::proceed
                                                           : Continuation::stop;
    case AlphaRule::adacost:
      if (perfect) return Continuation::last_round;
      return s.adacost_margin > 0.0 ? Continuation::proceed : Continuation::stop;
    case AlphaRule::rareboost:
      if (!(s.tp_mass > s.fp_mass) || !(s.tn_mass > s.fn_mass)) return Continuation::stop;
      return perfect ? Continuation::last_round : Continuation::proceed;
  }
  return Continuation::stop;
}

std::optional<AlphaPair> compute_alpha(StrategyId strategy, const RoundStats& s) {
  if (continuation_check(strategy, s) == Continuation::stop) return std::nullopt;
  AlphaPair a;
  switch (alpha_rule(strategy)) {
    case AlphaRule::error_ratio:
      a.positive = half_log_ratio(s.correct_mass, s.wrong_mass);
      break;
    case AlphaRule::cost_inside:
      a.positive = half_log_ratio(1.0 + s.cost_correct_mass - s.cost_wrong_mass,
                                  1.0 - s.cost_correct_mass + s.cost_wrong_mass);
      break;
    case AlphaRule::cost_ratio:
      a.positive = half_log_ratio(s.cost_correct_mass, s.cost_wrong_mass);
      break;
    case AlphaRule::cost_squared:
      a.positive = half_log_ratio(s.cost_total_mass + s.cost_sq_correct_mass - s.cost_sq_wrong_mass,
                                  s.cost_total_mass - s.cost_sq_correct_mass + s.cost_sq_wrong_mass);
      break;
    case AlphaRule::adacost:
      a.positive = half_log_ratio(1.0 + s.adacost_margin, 1.0 - s.adacost_margin);
      break;
    case AlphaRule::rareboost:
      a.positive = half_log_ratio(s.tp_mass, s.fp_mass);
      a.negative = half_log_ratio(s.tn_mass, s.fn_mass);
      if (!(a.negative > 0.0)) return std::nullopt;
      break;
  }
  a.negative = alpha_rule(strategy) == AlphaRule::rareboost ? a.negative : a.positive;
  if (!(a.positive > 0.0) || !std::isfinite(a.positive)) return std::nullopt;
  return a;
}

Reweighted reweight(StrategyId strategy, const WeightDistribution& weights,
                    std::span<const double> costs, const AlphaPair& alpha,
                    std::span<const Label> predictions, std::span<const Label> labels) {
  const std::size_t n = weights.size();
  if (costs.size() != n || predictions.size() != n || labels.size() != n) {
    throw DimensionMismatch("reweight inputs differ in length");
  }
  std::vector<double> raw(n);
  const double a = alpha.positive;
  for (std::size_t i = 0; i < n; ++i) {
    const double yh = static_cast<double>(labels[i] * predictions[i]);
    const double d = weights[i];
    const double c = costs[i];
    double w = 0.0;
    switch (strategy) {
      case StrategyId::adacc1:
      case StrategyId::adan_cc1:
      case StrategyId::adac1:
        w = d * std::exp(-c * a * yh);
        break;
      case StrategyId::adacc2:
      case StrategyId::adan_cc2:
      case StrategyId::adac2:
      case StrategyId::csb2:
        w = d * c * std::exp(-a * yh);
        break;
      case StrategyId::adac3:
        w = d * c * std::exp(-c * a * yh);
        break;
      case StrategyId::csb1:
        w = d * c * std::exp(-yh);
        break;
      case StrategyId::adacost:
        w = d * std::exp(-a * yh * adacost_beta(c, yh < 0.0));
        break;
      case StrategyId::rareboost:
        w = d * std::exp(-(predictions[i] == kPositive ? alpha.positive : alpha.negative) * yh);
        break;
      default:
        w = d * std::exp(-a * yh);
        break;
    }
    raw[i] = w;
  }
  double z = 0.0;
  for (double w : raw) z += w;
  return Reweighted{WeightDistribution::normalized(raw), z};
}

namespace {

WeightDistribution initial_distribution(const StrategyConfig& config, const Dataset& data) {
  if (cost_proportional_init(config.strategy)) {
    return WeightDistribution::normalized(expand_costs(*config.fixed_costs, data.labels()));
  }
  return WeightDistribution::uniform(data.size());
}

}  // namespace

TrainingResult train(const StrategyConfig& config, const Dataset& data, const TrainOptions& options) {
  config.validate();
  const StrategyId strategy = config.strategy;
  const auto labels = data.labels();
  const std::size_t n = data.size();

  TrainingResult result;
  result.ensemble.strategy_id = std::string(to_string(strategy));
  result.ensemble.feature_count = data.feature_count();

  WeightDistribution weights = initial_distribution(config, data);
  result.log.initial_minority_mass = weights.class_mass(labels, kPositive);

  const std::optional<CostVector> fixed =
      config.fixed_costs ? std::optional(expand_costs(*config.fixed_costs, labels)) : std::nullopt;
  const CostVector unit(n, 1.0);

  const bool track = options.record_diagnostics || uses_cumulative_costs(strategy);
  CumulativeTracker tracker(labels);
  const StumpTrainer trainer(data);
  std::vector<Label> predictions(n);
  std::vector<double> votes(n);
  CostVector costs;

  for (std::size_t t = 1; t <= config.rounds; ++t) {
    const StumpSearchResult learner = trainer.train(weights);
    for (std::size_t i = 0; i < n; ++i) predictions[i] = learner.stump(data.row(i));

    if (fixed) {
      costs = *fixed;
    } else if (options.bypass_cost_tracker || !(uses_cumulative_costs(strategy) || uses_learner_costs(strategy))) {
      costs = unit;
    } else if (uses_learner_costs(strategy)) {
      cumulative_costs(prediction_error_rates(predictions, labels), predictions, labels, costs);
    } else {
      // The rates of H_{1:t} depend on alpha_t, which itself depends on the
      // costs; they are previewed with h_t carrying its plain AdaBoost weight.
      const RoundStats plain = round_stats(weights, unit, predictions, labels);
      const double provisional =
          plain.correct_mass > plain.wrong_mass ? half_log_ratio(plain.correct_mass, plain.wrong_mass) : 0.0;
      cumulative_costs(tracker.preview(provisional, predictions), predictions, labels, costs);
    }

    const RoundStats stats = round_stats(weights, costs, predictions, labels);
    const Continuation next = continuation_check(strategy, stats);
    const std::optional<AlphaPair> alpha =
        next == Continuation::stop ? std::nullopt : compute_alpha(strategy, stats);
    if (!alpha) {
      if (t == 1) {
        throw TrainingDegenerate(std::string(to_string(strategy)) +
                                 ": first weak learner fails the continuation condition");
      }
      result.stop = StopReason::continuation_failed;
      break;
    }

    EnsembleMember member{learner.stump, alpha->positive, std::nullopt};
    if (strategy == StrategyId::rareboost) member.alpha_negative = alpha->negative;
    result.ensemble.members.push_back(member);

    if (track) {
      for (std::size_t i = 0; i < n; ++i) {
        votes[i] = predictions[i] == kPositive ? alpha->positive : -alpha->negative;
      }
      tracker.commit_votes(votes);
    }

    Reweighted next_weights = reweight(strategy, weights, costs, *alpha, predictions, labels);
    weights = std::move(next_weights.weights);

    if (options.record_diagnostics) {
      RoundRecord rec;
      rec.round = t;
      rec.alpha = alpha->positive;
      rec.normalizer = next_weights.normalizer;
      rec.minority_weight_mass = weights.class_mass(labels, kPositive);
      rec.cum_fnr = tracker.fnr();
      rec.cum_fpr = tracker.fpr();
      rec.balanced_error = tracker.rates().balanced_error();
      result.log.rounds.push_back(rec);
    }
    if (options.record_trajectory) {
      result.log.weights.emplace_back(weights.values().begin(), weights.values().end());
      result.log.costs.push_back(costs);
    }
    if (next == Continuation::last_round) {
      result.stop = StopReason::perfect_learner;
      break;
    }
  }

  if (strategy == StrategyId::adamec || strategy == StrategyId::adamec_cal) {
    const FixedCosts& c = *config.fixed_costs;
    const double total = c.positive + c.negative;
    result.ensemble.decision_shift = DecisionShift{c.positive / total, c.negative / total};
  }
  if (is_calibrated(strategy)) {
    result.ensemble.calibrator = platt_calibrate(result.ensemble, data);
  }
  return result;
}

ErrorBound training_error_bound(const TrainingResult& result, const Dataset& data) {
  if (result.log.rounds.size() != result.ensemble.size() || result.ensemble.empty()) {
    throw MissingDiagnostics("training log lacks per-round normalizers");
  }
  ErrorBound bound;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    wrong += sign_label(raw_score(result.ensemble, data.row(i))) != data.label(i);
  }
  bound.empirical_error = static_cast<double>(wrong) / static_cast<double>(data.size());
  for (const auto& r : result.log.rounds) bound.product_of_z *= r.normalizer;
  return bound;
}

}  // namespace boostcraft
