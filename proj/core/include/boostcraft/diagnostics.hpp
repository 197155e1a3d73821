#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "boostcraft/boosting.hpp"
#include "boostcraft/dataset.hpp"
#include "boostcraft/ensemble.hpp"

namespace boostcraft {

/// Per-round training log as CSV:
///   round,alpha,Z,minority_weight_mass,cum_fnr,cum_fpr,balanced_error
/// Row 0 describes the initial distribution and the empty ensemble (which
/// predicts -1 everywhere).
void write_training_log_csv(const TrainingLog& log, std::ostream& out);

/// Parses the output of write_training_log_csv. Throws MissingDiagnostics on
/// malformed input.
TrainingLog read_training_log_csv(std::istream& in);

struct CurvePoint {
  std::size_t round = 0;
  double minority_weight_mass = 0.0;
  double alpha = 0.0;
  double balanced_error = 0.0;
  /// Number of logs that reached this round.
  std::size_t runs = 0;
};

/// Round-aligned averages over several training logs; logs that stopped
/// early simply drop out of the later rounds. Starts at round 0.
/// Throws MissingDiagnostics if no log has any rounds.
std::vector<CurvePoint> diagnostics_curves(std::span<const TrainingLog> logs);

void write_curves_csv(std::span<const CurvePoint> curves, std::ostream& out);

/// Sum of alphas per feature, normalized to a distribution. RareBoost members
/// count the mean of their two alphas. Throws EmptyEnsemble.
std::vector<double> feature_importance(const Ensemble& ensemble);

struct ConfidenceSamples {
  std::vector<double> positive;
  std::vector<double> negative;
};

/// y_i * raw_score(x_i) / (sum of the vote weights applied to x_i), in [-1, 1].
ConfidenceSamples confidence_distribution(const Ensemble& ensemble, const Dataset& data);

/// Long-format CSV: class,confidence (sorted ascending within each class).
void write_confidence_csv(const ConfidenceSamples& samples, std::ostream& out);

}  // namespace boostcraft
