#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "boostcraft/cross_validation.hpp"
#include "boostcraft/dataset.hpp"
#include "boostcraft/ensemble.hpp"
#include "boostcraft/metrics.hpp"
#include "boostcraft/resample.hpp"
#include "boostcraft/statistics.hpp"
#include "boostcraft/strategy.hpp"

namespace boostcraft {

enum class MethodKind {
  strategy,    // one of the boosting strategies
  data_level,  // resample the training split, then AdaBoost
  rusboost,
  smoteboost,
};

struct MethodSpec {
  std::string name;
  MethodKind kind = MethodKind::strategy;
  StrategyId strategy = StrategyId::adaboost;
  ResampleMethod resample = ResampleMethod::smote;
};

std::optional<MethodSpec> parse_method(std::string_view name);
/// Every boosting strategy followed by ros, rus, smote, smoteboost, rusboost.
std::vector<std::string> all_method_names();

struct FitOptions {
  std::size_t smote_k = 5;
  GridSearchOptions grid;
};

struct FittedModel {
  Ensemble ensemble;
  /// Cost pair picked by the grid search, for fixed-cost strategies.
  std::optional<FixedCosts> costs;
};

/// Trains a method on one training split. Fixed-cost strategies are
/// grid-searched on that split first.
FittedModel fit_method(const MethodSpec& method, const Dataset& train_data, std::size_t rounds,
                       std::uint64_t seed, const FitOptions& options = {});

struct BenchmarkDataset {
  std::string name;
  Dataset data;
};

struct BenchmarkConfig {
  std::vector<std::string> methods;
  std::vector<std::size_t> rounds{25, 50, 100, 200};
  CVPlan plan;
  /// Worker threads; 0 means one per available processor.
  std::size_t jobs = 0;
  FitOptions fit;
};

struct CellResult {
  std::size_t dataset = 0;
  std::size_t method = 0;
  std::size_t rounds_index = 0;
  std::size_t repeat = 0;
  std::size_t fold = 0;
  /// Absent when training failed; see `error`.
  std::optional<MetricSuite> metrics;
  std::optional<FixedCosts> costs;
  std::string error;
};

struct Aggregate {
  std::size_t dataset = 0;
  std::size_t method = 0;
  std::size_t rounds_index = 0;
  std::string metric;
  double mean = 0.0;
  /// Sample standard deviation (0 for a single value).
  double stddev = 0.0;
  std::size_t count = 0;
};

/// Per (T, metric): datasets x methods average ranks of the mean metric.
struct RankTable {
  std::size_t rounds_index = 0;
  std::string metric;
  RankMatrix ranks;
};

struct Significance {
  std::size_t rounds_index = 0;
  std::string metric;
  FriedmanResult result;
};

struct EvalReport {
  std::vector<std::string> datasets;
  std::vector<std::string> methods;
  std::vector<std::size_t> rounds;
  std::size_t repeats = 0;
  std::size_t folds = 0;
  /// Ordered by dataset, method, T, repeat, fold.
  std::vector<CellResult> cells;
  std::vector<Aggregate> aggregates;
  std::vector<RankTable> ranks;
  /// Present with at least two methods and two datasets.
  std::vector<Significance> significance;

  const Aggregate* find(std::size_t dataset, std::size_t method, std::size_t rounds_index,
                        std::string_view metric) const;
};

/// Trains and scores every (dataset, method, T, repeat, fold) cell. Cells run
/// concurrently; results and all derived tables are independent of the
/// thread count. Training failures mark the cell missing instead of aborting.
EvalReport run_benchmark(const std::vector<BenchmarkDataset>& datasets,
                         const BenchmarkConfig& config);

/// Long format: dataset,method,T,repeat,fold,metric,value.
void write_report_csv(const EvalReport& report, std::ostream& out);
/// Aggregates, rank tables, significance and failed cells.
void write_summary_json(const EvalReport& report, std::ostream& out);
/// rounds,metric,dataset,<method...> rows of average ranks.
void write_rank_table_csv(const EvalReport& report, std::ostream& out);
/// Friedman statistic, p-value and Bonferroni post-hoc per (T, metric).
void write_significance_json(const EvalReport& report, std::ostream& out);

}  // namespace boostcraft
