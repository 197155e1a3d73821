#include "boostcraft/cross_validation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "boostcraft/error.hpp"
#include "boostcraft/metrics.hpp"
#include "boostcraft/random.hpp"

namespace boostcraft {

FoldAssignment stratified_folds(const CVPlan& plan, const Dataset& data) {
  if (plan.folds < 2) throw ConfigError("cross-validation needs at least two folds");
  if (plan.repeats == 0) throw ConfigError("cross-validation needs at least one repeat");
  if (data.minority_count() < plan.folds || data.majority_count() < plan.folds) {
    throw ConfigError("each class needs at least " + std::to_string(plan.folds) +
                      " instances for stratified folds (minority has " +
                      std::to_string(data.minority_count()) + ")");
  }
  FoldAssignment out;
  out.repeats = plan.repeats;
  out.folds = plan.folds;
  out.fold_of.assign(plan.repeats, std::vector<std::size_t>(data.size(), 0));

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i) (data.label(i) == kPositive ? pos : neg).push_back(i);

  for (std::size_t r = 0; r < plan.repeats; ++r) {
    Rng rng(Rng::derive(plan.seed, r));
    std::vector<std::size_t> p = pos, q = neg;
    rng.shuffle(std::span(p));
    rng.shuffle(std::span(q));
    std::size_t slot = 0;
    for (std::size_t i : p) out.fold_of[r][i] = slot++ % plan.folds;
    for (std::size_t i : q) out.fold_of[r][i] = slot++ % plan.folds;
  }
  return out;
}

std::pair<Dataset, Dataset> split(const Dataset& data, const FoldAssignment& folds,
                                  std::size_t repeat, std::size_t fold) {
  std::vector<std::size_t> train_idx, test_idx;
  const auto& assignment = folds.fold_of.at(repeat);
  for (std::size_t i = 0; i < data.size(); ++i) {
    (assignment[i] == fold ? test_idx : train_idx).push_back(i);
  }
  return {data.subset(train_idx), data.subset(test_idx)};
}

std::vector<FixedCosts> cost_grid() {
  std::vector<FixedCosts> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(FixedCosts{1.0, k / 10.0});
  return grid;
}

namespace {

double f1_of(const Ensemble& e, const Dataset& data) {
  const auto preds = predict_labels(e, data);
  const auto c = confusion(preds, data.labels());
  const std::size_t den = 2 * c.tp + c.fp + c.fn;
  return den == 0 ? 0.0 : static_cast<double>(2 * c.tp) / static_cast<double>(den);
}

}  // namespace

GridSearchResult grid_search_costs(StrategyId strategy, const Dataset& train_data,
                                   std::size_t rounds, const GridSearchOptions& options) {
  if (!uses_fixed_costs(strategy)) {
    throw ConfigError(std::string(to_string(strategy)) + " has no cost parameter to search");
  }

  std::optional<Dataset> fit_part;
  std::optional<Dataset> score_part;
  if (options.validation_split) {
    const auto folds = stratified_folds(CVPlan{1, 5, options.seed}, train_data);
    auto [fit, hold_out] = split(train_data, folds, 0, 0);
    fit_part.emplace(std::move(fit));
    score_part.emplace(std::move(hold_out));
  }
  const Dataset& fit_data = fit_part ? *fit_part : train_data;
  const Dataset& score_data = score_part ? *score_part : train_data;

  const TrainOptions quiet{.record_diagnostics = false};
  GridSearchResult result;
  result.best_f1 = -std::numeric_limits<double>::infinity();
  bool any = false;

  // AdaMEC's members and calibrator do not depend on the costs, only its
  // decision shift does, so one training run serves the whole grid.
  std::optional<Ensemble> shared;
  if (strategy == StrategyId::adamec || strategy == StrategyId::adamec_cal) {
    try {
      shared = train(StrategyConfig{strategy, rounds, FixedCosts{1.0, 1.0}, options.seed}, fit_data, quiet).ensemble;
    } catch (const TrainingDegenerate&) {
    } catch (const CalibrationFailed&) {
    }
  }

  for (const FixedCosts& costs : cost_grid()) {
    GridPoint point{costs, std::numeric_limits<double>::quiet_NaN()};
    try {
      Ensemble e;
      if (shared) {
        e = *shared;
        const double total = costs.positive + costs.negative;
        e.decision_shift = DecisionShift{costs.positive / total, costs.negative / total};
      } else if (strategy == StrategyId::adamec || strategy == StrategyId::adamec_cal) {
        throw TrainingDegenerate("adamec base model failed");
      } else {
        e = train(StrategyConfig{strategy, rounds, costs, options.seed}, fit_data, quiet).ensemble;
      }
      point.f1 = f1_of(e, score_data);
      any = true;
      // Later grid points carry larger C-, so >= sends ties toward them.
      if (point.f1 >= result.best_f1) {
        result.best_f1 = point.f1;
        result.best = costs;
      }
    } catch (const TrainingDegenerate&) {
    } catch (const CalibrationFailed&) {
    }
    result.grid.push_back(point);
  }
  if (!any) throw TrainingDegenerate(std::string(to_string(strategy)) + ": every grid candidate failed");
  return result;
}

}  // namespace boostcraft
