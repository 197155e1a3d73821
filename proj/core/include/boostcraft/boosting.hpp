#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boostcraft/dataset.hpp"
#include "boostcraft/ensemble.hpp"
#include "boostcraft/strategy.hpp"
#include "boostcraft/weights.hpp"

namespace boostcraft {

/// Floor applied to vanishing error masses inside the alpha formulas.
inline constexpr double kMinErrorMass = 1e-10;

struct StrategyConfig {
  StrategyId strategy = StrategyId::adaboost;
  std::size_t rounds = 100;
  /// Required by the fixed-cost strategies, rejected by the others.
  std::optional<FixedCosts> fixed_costs;
  std::uint64_t seed = 0;

  /// Throws ConfigError on a zero round count or a costs/strategy mismatch.
  void validate() const;
};

struct TrainOptions {
  bool record_diagnostics = true;
  /// Keep D^{t+1} and C^t for every round (used by equivalence checks).
  bool record_trajectory = false;
  /// Force every per-round cost to 1 for the cumulative and learner-cost
  /// strategies, which must then reproduce AdaBoost.
  bool bypass_cost_tracker = false;
};

/// Weighted sums over one round's training set, enough for every
/// strategy's alpha and continuation rule.
struct RoundStats {
  double correct_mass = 0.0;          // sum D over h(x) == y
  double wrong_mass = 0.0;            // sum D over h(x) != y
  double cost_correct_mass = 0.0;     // sum C D over h(x) == y
  double cost_wrong_mass = 0.0;       // sum C D over h(x) != y
  double cost_total_mass = 0.0;       // sum C D
  double cost_sq_correct_mass = 0.0;  // sum C^2 D over h(x) == y
  double cost_sq_wrong_mass = 0.0;    // sum C^2 D over h(x) != y
  double adacost_margin = 0.0;        // sum D y h beta
  double tp_mass = 0.0;
  double fp_mass = 0.0;
  double tn_mass = 0.0;
  double fn_mass = 0.0;
};

RoundStats round_stats(const WeightDistribution& weights, std::span<const double> costs,
                       std::span<const Label> predictions, std::span<const Label> labels);

/// AdaCost beta_2: 0.5 (1 + c) when misclassified, 0.5 (1 - c) otherwise.
double adacost_beta(double cost, bool misclassified) noexcept;

struct AlphaPair {
  double positive = 0.0;
  /// Only meaningful for RareBoost (alpha for negative predictions).
  double negative = 0.0;
};

enum class Continuation {
  proceed,
  /// Accept this member, then stop: the learner is perfect on the weights.
  last_round,
  /// Reject this member and stop.
  stop,
};

Continuation continuation_check(StrategyId strategy, const RoundStats& stats);

/// The strategy's alpha. Returns nullopt when the formula's log argument
/// leaves the positive domain (equivalently, continuation_check says stop).
std::optional<AlphaPair> compute_alpha(StrategyId strategy, const RoundStats& stats);

struct Reweighted {
  WeightDistribution weights;
  /// Z_t, the sum of the unnormalized updated weights.
  double normalizer = 0.0;
};

/// Applies the strategy's multiplicative update and renormalizes. `costs`
/// holds C_i (fixed or cumulative); AdaCost derives beta from it.
Reweighted reweight(StrategyId strategy, const WeightDistribution& weights,
                    std::span<const double> costs, const AlphaPair& alpha,
                    std::span<const Label> predictions, std::span<const Label> labels);

/// Per-round diagnostics. Round t describes the state after member t was
/// accepted: minority weight mass of D^{t+1}, rates of the partial ensemble.
struct RoundRecord {
  std::size_t round = 0;
  double alpha = 0.0;
  double normalizer = 1.0;
  double minority_weight_mass = 0.0;
  double cum_fnr = 0.0;
  double cum_fpr = 0.0;
  double balanced_error = 0.0;
};

struct TrainingLog {
  /// Minority mass of the initial distribution D^1.
  double initial_minority_mass = 0.0;
  std::vector<RoundRecord> rounds;
  /// Filled when TrainOptions::record_trajectory is set.
  std::vector<std::vector<double>> weights;
  std::vector<CostVector> costs;
};

enum class StopReason { completed, perfect_learner, continuation_failed };

struct TrainingResult {
  Ensemble ensemble;
  TrainingLog log;
  StopReason stop = StopReason::completed;
};

/// Runs up to config.rounds boosting rounds with the configured strategy.
/// Throws TrainingDegenerate if the first round already fails.
TrainingResult train(const StrategyConfig& config, const Dataset& data,
                     const TrainOptions& options = {});

/// Raw 0/1 training error next to the product of the logged Z_t.
struct ErrorBound {
  double empirical_error = 0.0;
  double product_of_z = 1.0;
};

/// Throws MissingDiagnostics when the log has no per-round Z values.
ErrorBound training_error_bound(const TrainingResult& result, const Dataset& data);

}  // namespace boostcraft
