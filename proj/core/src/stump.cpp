#include "boostcraft/stump.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "boostcraft/error.hpp"

namespace boostcraft {

Label predict_stump(const Stump& stump, std::span<const double> x) {
  if (stump.feature_index >= x.size()) {
    throw DimensionMismatch("stump uses feature " + std::to_string(stump.feature_index) +
                            " but the input has " + std::to_string(x.size()));
  }
  return stump(x);
}

std::vector<Label> predict_all(const Stump& stump, const Dataset& data) {
  if (stump.feature_index >= data.feature_count()) {
    throw DimensionMismatch("stump feature index out of range for dataset");
  }
  std::vector<Label> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = stump(data.row(i));
  return out;
}

StumpTrainer::StumpTrainer(const Dataset& data)
    : n_(data.size()),
      m_(data.feature_count()),
      labels_(data.labels().begin(), data.labels().end()),
      rows_(data.features().begin(), data.features().end()),
      order_(n_ * m_),
      sorted_values_(n_ * m_) {
  std::vector<std::uint32_t> idx(n_);
  for (std::size_t j = 0; j < m_; ++j) {
    std::iota(idx.begin(), idx.end(), 0U);
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return data.value(a, j) < data.value(b, j);
    });
    for (std::size_t k = 0; k < n_; ++k) {
      order_[j * n_ + k] = idx[k];
      sorted_values_[j * n_ + k] = data.value(idx[k], j);
    }
  }
}

namespace {

// Threshold t with lo <= t < hi, so that x > t separates the two values.
double split_point(double lo, double hi) {
  double mid = lo + (hi - lo) / 2.0;
  if (!(mid < hi)) mid = lo;
  return mid;
}

double sentinel_below(double min_value) {
  double t = min_value - 1.0;
  if (!(t < min_value)) t = std::nextafter(min_value, -std::numeric_limits<double>::infinity());
  return t;
}

}  // namespace

StumpSearchResult StumpTrainer::train(const WeightDistribution& weights) const {
  if (weights.size() != n_) throw DimensionMismatch("weights do not match dataset size");
  const auto w = weights.values();

  double pos_total = 0.0;
  double neg_total = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    (labels_[i] == kPositive ? pos_total : neg_total) += w[i];
  }

  // Visits every candidate in tie-break order; `visit` returns true to stop.
  auto sweep = [&](auto&& visit) {
    for (std::size_t j = 0; j < m_; ++j) {
      const std::uint32_t* order = order_.data() + j * n_;
      const double* values = sorted_values_.data() + j * n_;
      // x > threshold predicts `polarity`, so the left block predicts -polarity.
      double pos_left = 0.0;
      double neg_left = 0.0;
      auto consider = [&](double threshold) {
        return visit(pos_left + (neg_total - neg_left), Stump{j, threshold, kPositive}) ||
               visit(neg_left + (pos_total - pos_left), Stump{j, threshold, kNegative});
      };
      if (consider(sentinel_below(values[0]))) return;
      for (std::size_t k = 1; k < n_; ++k) {
        const std::uint32_t i = order[k - 1];
        (labels_[i] == kPositive ? pos_left : neg_left) += w[i];
        if (values[k - 1] < values[k] && consider(split_point(values[k - 1], values[k]))) return;
      }
    }
  };

  double min_error = std::numeric_limits<double>::infinity();
  sweep([&](double err, const Stump&) {
    min_error = std::min(min_error, err);
    return false;
  });
  StumpSearchResult result;
  sweep([&](double err, const Stump& s) {
    if (err > min_error + kStumpTieTolerance) return false;
    result.stump = s;
    return true;
  });

  // Report the error as a direct sum in index order, independent of the
  // prefix-sum path used for the search.
  double err = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::span<const double> x(rows_.data() + i * m_, m_);
    if (result.stump(x) != labels_[i]) err += w[i];
  }
  result.weighted_error = err;
  return result;
}

StumpSearchResult train_stump(const Dataset& data, const WeightDistribution& weights) {
  return StumpTrainer(data).train(weights);
}

}  // namespace boostcraft
