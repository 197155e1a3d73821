#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boostcraft/dataset.hpp"
#include "boostcraft/weights.hpp"

namespace boostcraft {

/// False-negative / false-positive rates of a classifier on a labelled set.
struct ErrorRates {
  double fnr = 0.0;
  double fpr = 0.0;
  double balanced_error() const noexcept { return 0.5 * (fnr + fpr); }
};

/// Rates of sign(margin) against `labels`, sign(0) counted as -1.
ErrorRates margin_error_rates(std::span<const double> margin, std::span<const Label> labels);

/// Rates of a single learner's predictions.
ErrorRates prediction_error_rates(std::span<const Label> predictions, std::span<const Label> labels);

/// Running record of the partial ensemble on the training set.
///
/// Holds o[i] = sum_{j<=t} alpha_j h_j(x_i) so that the ensemble's FNR/FPR
/// after each round cost O(n) instead of re-scoring every member.
class CumulativeTracker {
 public:
  explicit CumulativeTracker(std::span<const Label> labels);

  /// Rates the partial ensemble would have after adding `alpha * predictions`.
  ErrorRates preview(double alpha, std::span<const Label> predictions) const;

  /// o += alpha * h_t(x), then refresh the rates.
  void commit(double alpha, std::span<const Label> predictions);
  /// o += votes, for learners whose vote weight depends on the prediction.
  void commit_votes(std::span<const double> votes);

  std::span<const double> margin() const noexcept { return margin_; }
  const ErrorRates& rates() const noexcept { return rates_; }
  double fnr() const noexcept { return rates_.fnr; }
  double fpr() const noexcept { return rates_.fpr; }
  std::size_t rounds() const noexcept { return rounds_; }

 private:
  std::vector<Label> labels_;
  std::vector<double> margin_;
  std::size_t positives_ = 0;
  std::size_t negatives_ = 0;
  ErrorRates rates_;
  std::size_t rounds_ = 0;
};

/// Per-instance costs for the round: misclassified positives get 1 + FNR when
/// FNR > FPR, misclassified negatives get 1 + FPR when FPR > FNR, and every
/// other instance gets 1. "Misclassified" refers to the current learner.
CostVector cumulative_costs(const ErrorRates& rates, std::span<const Label> predictions,
                            std::span<const Label> labels);
/// Same, writing into `out` (resized to n) so a buffer can be reused across rounds.
void cumulative_costs(const ErrorRates& rates, std::span<const Label> predictions,
                      std::span<const Label> labels, CostVector& out);

/// Commits the accepted member to the tracker and returns the costs computed
/// from the updated rates.
CostVector update_cumulative_costs(CumulativeTracker& tracker, double alpha,
                                   std::span<const Label> predictions,
                                   std::span<const Label> labels);

}  // namespace boostcraft
