#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boostcraft/dataset.hpp"

namespace boostcraft {

/// Probability vector over training instances. Always sums to one.
class WeightDistribution {
 public:
  static WeightDistribution uniform(std::size_t n);
  /// Rescales `raw` to sum to one. Throws InvalidWeights on empty, negative,
  /// non-finite or all-zero input.
  static WeightDistribution normalized(std::span<const double> raw);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

  /// Total weight carried by instances with the given label.
  double class_mass(std::span<const Label> labels, Label which) const;

 private:
  explicit WeightDistribution(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

/// Shorthand for WeightDistribution::normalized.
inline WeightDistribution normalized(std::span<const double> raw) {
  return WeightDistribution::normalized(raw);
}

/// Fixed misclassification cost pair used by the cost-matrix baselines.
struct FixedCosts {
  double positive = 1.0;
  double negative = 1.0;

  /// Throws ConfigError unless positive >= negative > 0.
  void validate() const;
  double of(Label y) const noexcept { return y == kPositive ? positive : negative; }
  friend bool operator==(const FixedCosts&, const FixedCosts&) = default;
};

/// Per-instance cost multipliers, one per training instance.
using CostVector = std::vector<double>;

CostVector expand_costs(const FixedCosts& costs, std::span<const Label> labels);

}  // namespace boostcraft
