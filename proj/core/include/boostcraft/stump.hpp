#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boostcraft/dataset.hpp"
#include "boostcraft/weights.hpp"

namespace boostcraft {

/// Depth-1 decision tree: predicts `polarity` when x[feature_index] > threshold
/// and -polarity otherwise.
struct Stump {
  std::size_t feature_index = 0;
  double threshold = 0.0;
  Label polarity = kPositive;

  /// Unchecked prediction; `x` must have more than feature_index entries.
  Label operator()(std::span<const double> x) const noexcept {
    return x[feature_index] > threshold ? polarity : -polarity;
  }

  friend bool operator==(const Stump&, const Stump&) = default;
};

/// Checked prediction. Throws DimensionMismatch if the feature is out of range.
Label predict_stump(const Stump& stump, std::span<const double> x);

/// Predictions of `stump` on every row of `data`.
std::vector<Label> predict_all(const Stump& stump, const Dataset& data);

struct StumpSearchResult {
  Stump stump;
  /// Sum of the weights of the instances the stump misclassifies.
  double weighted_error = 0.0;
};

inline constexpr double kStumpTieTolerance = 1e-12;

/// Exhaustive stump search over a fixed dataset.
///
/// Candidate thresholds per feature are the midpoints between consecutive
/// distinct sorted values plus a sentinel below the minimum, each tried with
/// both polarities. The per-feature sort happens once in the constructor so
/// that each boosting round costs O(n * m).
///
/// Errors within kStumpTieTolerance of the minimum count as ties, which are
/// broken by lowest feature index, then lowest threshold, then polarity +1.
class StumpTrainer {
 public:
  explicit StumpTrainer(const Dataset& data);

  StumpSearchResult train(const WeightDistribution& weights) const;

  std::size_t size() const noexcept { return n_; }
  std::size_t feature_count() const noexcept { return m_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Label> labels_;
  std::vector<double> rows_;                // row-major copy, for the final error pass
  std::vector<std::uint32_t> order_;        // m blocks of n indices sorted by value
  std::vector<double> sorted_values_;       // values in the same layout as order_
};

/// One-shot search; builds a StumpTrainer internally.
StumpSearchResult train_stump(const Dataset& data, const WeightDistribution& weights);

}  // namespace boostcraft
