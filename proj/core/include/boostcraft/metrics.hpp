#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "boostcraft/dataset.hpp"

namespace boostcraft {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fn = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;

  std::size_t positives() const noexcept { return tp + fn; }
  std::size_t negatives() const noexcept { return fp + tn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

ConfusionCounts confusion(std::span<const Label> predictions, std::span<const Label> labels);

struct MetricSuite {
  double tpr = 0.0;
  double tnr = 0.0;
  double balanced_accuracy = 0.0;
  double f1 = 0.0;
  double gmean = 0.0;
  /// Absent when only one class is present in the scored set.
  std::optional<double> auc;
  /// Mean of auc, balanced accuracy, gmean, f1, tpr, tnr; absent with auc.
  std::optional<double> opm;
};

inline constexpr std::array<std::string_view, 7> kMetricNames = {
    "tpr", "tnr", "balanced_accuracy", "f1", "gmean", "auc", "opm"};

/// Value of the named metric, or nullopt if it is undefined for this suite.
std::optional<double> metric_value(const MetricSuite& suite, std::string_view name);

/// Rank-based AUC (Mann-Whitney U with average ranks for ties).
/// Throws UndefinedMetric when a class is missing.
double auc_score(std::span<const double> scores, std::span<const Label> labels);

/// Table of imbalance-aware metrics. A rate whose class is absent is reported
/// as 0; F1 is 0 when tp = fp = fn = 0.
MetricSuite suite(const ConfusionCounts& counts, std::span<const double> scores,
                  std::span<const Label> labels);

/// Convenience wrapper: confusion + suite.
MetricSuite evaluate(std::span<const Label> predictions, std::span<const double> scores,
                     std::span<const Label> labels);

}  // namespace boostcraft
