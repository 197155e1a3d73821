#include "boostcraft/weights.hpp"

#include <cmath>

#include "boostcraft/error.hpp"

namespace boostcraft {

WeightDistribution WeightDistribution::uniform(std::size_t n) {
  if (n == 0) throw InvalidWeights("cannot build a distribution over zero instances");
  return WeightDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

WeightDistribution WeightDistribution::normalized(std::span<const double> raw) {
  if (raw.empty()) throw InvalidWeights("empty weight vector");
  double total = 0.0;
  for (double w : raw) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidWeights("weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw InvalidWeights("weights sum to zero");
  std::vector<double> out(raw.begin(), raw.end());
  for (double& w : out) w /= total;
  return WeightDistribution(std::move(out));
}

double WeightDistribution::class_mass(std::span<const Label> labels, Label which) const {
  double mass = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (labels[i] == which) mass += weights_[i];
  }
  return mass;
}

void FixedCosts::validate() const {
  if (!std::isfinite(positive) || !std::isfinite(negative) || !(negative > 0.0) ||
      positive < negative) {
    throw ConfigError("fixed costs must satisfy C+ >= C- > 0");
  }
}

CostVector expand_costs(const FixedCosts& costs, std::span<const Label> labels) {
  CostVector out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = costs.of(labels[i]);
  return out;
}

}  // namespace boostcraft
