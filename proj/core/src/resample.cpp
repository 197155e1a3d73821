#include "boostcraft/resample.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "boostcraft/error.hpp"
#include "boostcraft/random.hpp"
#include "boostcraft/stump.hpp"
#include "boostcraft/tracker.hpp"

namespace boostcraft {

std::string_view to_string(ResampleMethod method) noexcept {
  switch (method) {
    case ResampleMethod::ros: return "ros";
    case ResampleMethod::rus: return "rus";
    case ResampleMethod::smote: return "smote";
  }
  return "unknown";
}

std::optional<ResampleMethod> parse_resample_method(std::string_view name) noexcept {
  if (name == "ros") return ResampleMethod::ros;
  if (name == "rus") return ResampleMethod::rus;
  if (name == "smote") return ResampleMethod::smote;
  return std::nullopt;
}

namespace {

std::vector<std::size_t> indices_of(const Dataset& data, Label which) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.label(i) == which) out.push_back(i);
  }
  return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    d += diff * diff;
  }
  return d;
}

void check_smote_k(const Dataset& data, std::size_t k) {
  if (k == 0) throw ConfigError("SMOTE needs k_neighbors >= 1");
  if (data.minority_count() <= k) {
    throw ConfigError("SMOTE needs more than k = " + std::to_string(k) +
                      " minority instances, got " + std::to_string(data.minority_count()));
  }
}

SmoteSynthetics synthesize(const Dataset& data, const std::vector<std::size_t>& minority,
                           const std::vector<std::vector<std::size_t>>& neighbors,
                           std::size_t count, Rng& rng) {
  const std::size_t m = data.feature_count();
  SmoteSynthetics out;
  out.rows.reserve(count * m);
  out.provenance.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t pick = rng.index(minority.size());
    const auto& nn = neighbors[pick];
    const std::size_t seed_row = minority[pick];
    const std::size_t nn_row = nn[rng.index(nn.size())];
    const double lambda = rng.uniform();
    const auto a = data.row(seed_row);
    const auto b = data.row(nn_row);
    for (std::size_t j = 0; j < m; ++j) {
      const double v = a[j] + lambda * (b[j] - a[j]);
      out.rows.push_back(std::clamp(v, std::min(a[j], b[j]), std::max(a[j], b[j])));
    }
    out.provenance.emplace_back(seed_row, nn_row);
  }
  return out;
}

// Neighbour lists indexed by position in `minority`.
std::vector<std::vector<std::size_t>> neighbor_table(const Dataset& data,
                                                     const std::vector<std::size_t>& minority,
                                                     std::size_t k) {
  const std::size_t p = minority.size();
  std::vector<std::vector<std::size_t>> table(p);
  std::vector<std::pair<double, std::size_t>> dist;
  for (std::size_t a = 0; a < p; ++a) {
    dist.clear();
    for (std::size_t b = 0; b < p; ++b) {
      if (a == b) continue;
      dist.emplace_back(squared_distance(data.row(minority[a]), data.row(minority[b])), minority[b]);
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
    for (std::size_t r = 0; r < k; ++r) table[a].push_back(dist[r].second);
  }
  return table;
}

}  // namespace

std::vector<std::vector<std::size_t>> minority_neighbors(const Dataset& data, std::size_t k) {
  check_smote_k(data, k);
  return neighbor_table(data, indices_of(data, kPositive), k);
}

SmoteSynthetics generate_smote(const Dataset& data, std::size_t count, std::size_t k,
                               std::uint64_t seed) {
  check_smote_k(data, k);
  const auto minority = indices_of(data, kPositive);
  const auto table = neighbor_table(data, minority, k);
  Rng rng(seed);
  return synthesize(data, minority, table, count, rng);
}

Dataset resample(const ResampleConfig& config, const Dataset& data) {
  const std::size_t pos = data.minority_count();
  const std::size_t neg = data.majority_count();
  const std::size_t deficit = neg > pos ? neg - pos : 0;
  Rng rng(config.seed);

  switch (config.method) {
    case ResampleMethod::ros: {
      const auto minority = indices_of(data, kPositive);
      std::vector<std::size_t> idx(data.size());
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      for (std::size_t s = 0; s < deficit; ++s) idx.push_back(minority[rng.index(minority.size())]);
      return data.subset(idx);
    }
    case ResampleMethod::rus: {
      auto majority = indices_of(data, kNegative);
      rng.shuffle(std::span(majority));
      majority.resize(std::min(majority.size(), pos));
      std::vector<bool> keep(data.size(), false);
      for (std::size_t i = 0; i < data.size(); ++i) keep[i] = data.label(i) == kPositive;
      for (std::size_t i : majority) keep[i] = true;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < data.size(); ++i) {
        if (keep[i]) idx.push_back(i);
      }
      return data.subset(idx);
    }
    case ResampleMethod::smote: {
      check_smote_k(data, config.k_neighbors);
      if (deficit == 0) return data;
      const auto minority = indices_of(data, kPositive);
      const auto table = neighbor_table(data, minority, config.k_neighbors);
      const auto synth = synthesize(data, minority, table, deficit, rng);
      const std::vector<Label> ys(deficit, kPositive);
      return data.concatenated(synth.rows, ys);
    }
  }
  throw ConfigError("unknown resampling method");
}

namespace {

using RoundLearner = std::function<Stump(const WeightDistribution&)>;

// AdaBoost alpha/update on the full distribution; only the stump comes from
// the per-round sampler.
TrainingResult boost_with_learner(const Dataset& data, std::size_t rounds, std::string id,
                                  const RoundLearner& learner, const TrainOptions& options) {
  if (rounds == 0) throw ConfigError("number of boosting rounds must be positive");
  const auto labels = data.labels();
  const std::size_t n = data.size();
  TrainingResult result;
  result.ensemble.strategy_id = std::move(id);
  result.ensemble.feature_count = data.feature_count();

  WeightDistribution weights = WeightDistribution::uniform(n);
  result.log.initial_minority_mass = weights.class_mass(labels, kPositive);
  const CostVector unit(n, 1.0);
  CumulativeTracker tracker(labels);
  std::vector<Label> predictions(n);

  for (std::size_t t = 1; t <= rounds; ++t) {
    const Stump stump = learner(weights);
    for (std::size_t i = 0; i < n; ++i) predictions[i] = stump(data.row(i));
    const RoundStats stats = round_stats(weights, unit, predictions, labels);
    const Continuation next = continuation_check(StrategyId::adaboost, stats);
    const auto alpha = next == Continuation::stop ? std::nullopt : compute_alpha(StrategyId::adaboost, stats);
    if (!alpha) {
      if (t == 1) throw TrainingDegenerate(result.ensemble.strategy_id + ": first weak learner is no better than chance");
      result.stop = StopReason::continuation_failed;
      break;
    }
    result.ensemble.members.push_back(EnsembleMember{stump, alpha->positive, std::nullopt});
    tracker.commit(alpha->positive, predictions);
    Reweighted next_weights = reweight(StrategyId::adaboost, weights, unit, *alpha, predictions, labels);
    weights = std::move(next_weights.weights);
    if (options.record_diagnostics) {
      result.log.rounds.push_back(RoundRecord{t, alpha->positive, next_weights.normalizer,
                                              weights.class_mass(labels, kPositive), tracker.fnr(),
                                              tracker.fpr(), tracker.rates().balanced_error()});
    }
    if (options.record_trajectory) {
      result.log.weights.emplace_back(weights.values().begin(), weights.values().end());
      result.log.costs.push_back(unit);
    }
    if (next == Continuation::last_round) {
      result.stop = StopReason::perfect_learner;
      break;
    }
  }
  return result;
}

}  // namespace

TrainingResult train_rusboost(const Dataset& data, std::size_t rounds, std::uint64_t seed,
                              const TrainOptions& options) {
  const auto minority = indices_of(data, kPositive);
  const auto majority = indices_of(data, kNegative);
  const std::size_t keep = std::min(minority.size(), majority.size());
  Rng rng(seed);

  const RoundLearner learner = [&](const WeightDistribution& w) {
    std::vector<std::size_t> chosen = majority;
    if (keep < majority.size()) {
      rng.shuffle(std::span(chosen));
      chosen.resize(keep);
    }
    std::vector<bool> in_sample(data.size(), false);
    for (std::size_t i : minority) in_sample[i] = true;
    for (std::size_t i : chosen) in_sample[i] = true;
    std::vector<std::size_t> idx;
    std::vector<double> sub_w;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (in_sample[i]) {
        idx.push_back(i);
        sub_w.push_back(w[i]);
      }
    }
    return train_stump(data.subset(idx), WeightDistribution::normalized(sub_w)).stump;
  };
  return boost_with_learner(data, rounds, "rusboost", learner, options);
}

TrainingResult train_smoteboost(const Dataset& data, std::size_t rounds, std::size_t k,
                                std::uint64_t seed, const TrainOptions& options) {
  check_smote_k(data, k);
  const auto minority = indices_of(data, kPositive);
  const auto table = neighbor_table(data, minority, k);
  const std::size_t deficit =
      data.majority_count() > data.minority_count() ? data.majority_count() - data.minority_count() : 0;
  Rng rng(seed);
  const std::vector<Label> synth_labels(deficit, kPositive);

  const RoundLearner learner = [&](const WeightDistribution& w) {
    if (deficit == 0) return train_stump(data, w).stump;
    const auto synth = synthesize(data, minority, table, deficit, rng);
    const Dataset augmented = data.concatenated(synth.rows, synth_labels);
    std::vector<double> aug_w(w.values().begin(), w.values().end());
    const double share = w.class_mass(data.labels(), kPositive) / static_cast<double>(deficit);
    aug_w.insert(aug_w.end(), deficit, share);
    return train_stump(augmented, WeightDistribution::normalized(aug_w)).stump;
  };
  return boost_with_learner(data, rounds, "smoteboost", learner, options);
}

}  // namespace boostcraft
