#include "boostcraft/ensemble.hpp"

#include <string>

#include "boostcraft/error.hpp"

namespace boostcraft {

namespace {

void check_input(const Ensemble& e, std::span<const double> x) {
  if (e.members.empty()) throw EmptyEnsemble("ensemble has no members");
  if (e.feature_count != 0) {
    if (x.size() != e.feature_count) {
      throw DimensionMismatch("ensemble expects " + std::to_string(e.feature_count) +
                              " features, got " + std::to_string(x.size()));
    }
    return;
  }
  for (const auto& m : e.members) {
    if (m.stump.feature_index >= x.size()) {
      throw DimensionMismatch("input too narrow for ensemble member");
    }
  }
}

}  // namespace

Ensemble Ensemble::prefix(std::size_t rounds) const {
  Ensemble out;
  out.strategy_id = strategy_id;
  out.feature_count = feature_count;
  const std::size_t k = rounds < members.size() ? rounds : members.size();
  out.members.assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

double raw_score(const Ensemble& ensemble, std::span<const double> x) {
  check_input(ensemble, x);
  double s = 0.0;
  for (const auto& m : ensemble.members) s += m.vote(x);
  return s;
}

double decision_score(const Ensemble& ensemble, std::span<const double> x) {
  check_input(ensemble, x);
  if (ensemble.calibrator) {
    double s = 0.0;
    for (const auto& m : ensemble.members) s += m.vote(x);
    const double p = ensemble.calibrator->probability(s);
    if (ensemble.decision_shift) {
      const auto& c = *ensemble.decision_shift;
      return c.positive * p - c.negative * (1.0 - p);
    }
    return p - 0.5;
  }
  if (ensemble.decision_shift) {
    double positive_votes = 0.0;
    double negative_votes = 0.0;
    for (const auto& m : ensemble.members) {
      const double v = m.vote(x);
      (v > 0.0 ? positive_votes : negative_votes) += v;
    }
    const auto& c = *ensemble.decision_shift;
    return c.positive * positive_votes + c.negative * negative_votes;
  }
  double s = 0.0;
  for (const auto& m : ensemble.members) s += m.vote(x);
  return s;
}

Label predict_label(const Ensemble& ensemble, std::span<const double> x) {
  return sign_label(decision_score(ensemble, x));
}

std::vector<double> decision_scores(const Ensemble& ensemble, const Dataset& data) {
  std::vector<double> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = decision_score(ensemble, data.row(i));
  return out;
}

std::vector<Label> predict_labels(const Ensemble& ensemble, const Dataset& data) {
  std::vector<Label> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = predict_label(ensemble, data.row(i));
  return out;
}

}  // namespace boostcraft
