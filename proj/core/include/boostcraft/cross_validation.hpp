#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "boostcraft/boosting.hpp"
#include "boostcraft/dataset.hpp"
#include "boostcraft/strategy.hpp"
#include "boostcraft/weights.hpp"

namespace boostcraft {

struct CVPlan {
  std::size_t repeats = 10;
  std::size_t folds = 5;
  std::uint64_t seed = 0;
};

/// fold_of[r][i] is the test fold of instance i in repeat r.
struct FoldAssignment {
  std::size_t repeats = 0;
  std::size_t folds = 0;
  std::vector<std::vector<std::size_t>> fold_of;
};

/// Stratified assignment: each class is shuffled and dealt round-robin, the
/// majority continuing where the minority stopped, so fold sizes differ by
/// at most one and every fold holds both classes. Throws ConfigError if a
/// class has fewer instances than folds.
FoldAssignment stratified_folds(const CVPlan& plan, const Dataset& data);

/// (training split, test split) for one repeat/fold.
std::pair<Dataset, Dataset> split(const Dataset& data, const FoldAssignment& folds,
                                  std::size_t repeat, std::size_t fold);

struct GridSearchOptions {
  /// Score F1 on a stratified 80/20 hold-out of the training data instead
  /// of the training data itself.
  bool validation_split = false;
  std::uint64_t seed = 0;
};

struct GridPoint {
  FixedCosts costs;
  /// F1 of this candidate; NaN if training failed.
  double f1 = 0.0;
};

struct GridSearchResult {
  FixedCosts best;
  double best_f1 = 0.0;
  std::vector<GridPoint> grid;
};

/// The ten candidates C+ = 1, C- in {0.1, 0.2, ..., 1.0}.
std::vector<FixedCosts> cost_grid();

/// Picks the candidate with the highest F1, ties going to the larger C-.
/// Throws ConfigError for parameter-free strategies and TrainingDegenerate
/// if every candidate fails.
GridSearchResult grid_search_costs(StrategyId strategy, const Dataset& train_data,
                                   std::size_t rounds, const GridSearchOptions& options = {});

}  // namespace boostcraft
