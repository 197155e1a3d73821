#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boostcraft/dataset.hpp"
#include "boostcraft/stump.hpp"

namespace boostcraft {

struct EnsembleMember {
  Stump stump;
  double alpha = 0.0;
  /// Only RareBoost members carry a separate weight for negative votes.
  std::optional<double> alpha_negative;

  /// Signed contribution alpha_t * h_t(x); RareBoost uses alpha_negative
  /// when the stump votes -1.
  double vote(std::span<const double> x) const noexcept {
    return stump(x) == kPositive ? alpha : -alpha_negative.value_or(alpha);
  }
  /// Magnitude of vote(x).
  double voting_weight(std::span<const double> x) const noexcept {
    return stump(x) == kPositive ? alpha : alpha_negative.value_or(alpha);
  }

  friend bool operator==(const EnsembleMember&, const EnsembleMember&) = default;
};

/// Class multipliers c(+1), c(-1) that shift the decision boundary (AdaMEC).
struct DecisionShift {
  double positive = 0.5;
  double negative = 0.5;
  friend bool operator==(const DecisionShift&, const DecisionShift&) = default;
};

/// Sigmoid P(y = +1 | s) = 1 / (1 + exp(a * s + b)) over raw scores.
struct PlattCalibrator {
  double a = 0.0;
  double b = 0.0;

  double probability(double score) const noexcept {
    const double z = a * score + b;
    // Evaluated on the side that cannot overflow.
    return z >= 0.0 ? std::exp(-z) / (1.0 + std::exp(-z)) : 1.0 / (1.0 + std::exp(z));
  }
  friend bool operator==(const PlattCalibrator&, const PlattCalibrator&) = default;
};

struct Ensemble {
  std::string strategy_id;
  /// Width of the feature vectors the ensemble was trained on; 0 if unknown.
  std::size_t feature_count = 0;
  std::vector<EnsembleMember> members;
  std::optional<DecisionShift> decision_shift;
  std::optional<PlattCalibrator> calibrator;

  bool empty() const noexcept { return members.empty(); }
  std::size_t size() const noexcept { return members.size(); }

  /// First `rounds` members, without decision shift or calibrator.
  Ensemble prefix(std::size_t rounds) const;

  friend bool operator==(const Ensemble&, const Ensemble&) = default;
};

/// sign with sign(0) == -1.
inline Label sign_label(double v) noexcept { return v > 0.0 ? kPositive : kNegative; }

/// sum_t alpha_t h_t(x), accumulated in member order.
double raw_score(const Ensemble& ensemble, std::span<const double> x);

/// Value whose sign is the ensemble's decision: the raw score for plain
/// ensembles, the class-weighted vote for shifted ones, and a centred
/// calibrated probability when a calibrator is attached.
double decision_score(const Ensemble& ensemble, std::span<const double> x);

Label predict_label(const Ensemble& ensemble, std::span<const double> x);

std::vector<double> decision_scores(const Ensemble& ensemble, const Dataset& data);
std::vector<Label> predict_labels(const Ensemble& ensemble, const Dataset& data);

}  // namespace boostcraft
