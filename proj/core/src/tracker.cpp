#include "boostcraft/tracker.hpp"

#include "boostcraft/error.hpp"

namespace boostcraft {

namespace {

ErrorRates rates_from_counts(std::size_t fn, std::size_t pos, std::size_t fp, std::size_t neg) {
  ErrorRates r;
  r.fnr = pos == 0 ? 0.0 : static_cast<double>(fn) / static_cast<double>(pos);
  r.fpr = neg == 0 ? 0.0 : static_cast<double>(fp) / static_cast<double>(neg);
  return r;
}

}  // namespace

ErrorRates margin_error_rates(std::span<const double> margin, std::span<const Label> labels) {
  if (margin.size() != labels.size()) throw DimensionMismatch("margin/label length mismatch");
  std::size_t pos = 0, neg = 0, fn = 0, fp = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool predicted_positive = margin[i] > 0.0;
    if (labels[i] == kPositive) {
      ++pos;
      fn += !predicted_positive;
    } else {
      ++neg;
      fp += predicted_positive;
    }
  }
  return rates_from_counts(fn, pos, fp, neg);
}

ErrorRates prediction_error_rates(std::span<const Label> predictions, std::span<const Label> labels) {
  if (predictions.size() != labels.size()) throw DimensionMismatch("prediction/label length mismatch");
  std::size_t pos = 0, neg = 0, fn = 0, fp = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == kPositive) {
      ++pos;
      fn += predictions[i] != kPositive;
    } else {
      ++neg;
      fp += predictions[i] == kPositive;
    }
  }
  return rates_from_counts(fn, pos, fp, neg);
}

CumulativeTracker::CumulativeTracker(std::span<const Label> labels)
    : labels_(labels.begin(), labels.end()), margin_(labels.size(), 0.0) {
  for (Label y : labels_) (y == kPositive ? positives_ : negatives_) += 1;
  rates_ = margin_error_rates(margin_, labels_);
}

ErrorRates CumulativeTracker::preview(double alpha, std::span<const Label> predictions) const {
  if (predictions.size() != margin_.size()) throw DimensionMismatch("prediction length mismatch");
  std::size_t fn = 0, fp = 0;
  for (std::size_t i = 0; i < margin_.size(); ++i) {
    const bool predicted_positive = margin_[i] + alpha * predictions[i] > 0.0;
    if (labels_[i] == kPositive) {
      fn += !predicted_positive;
    } else {
      fp += predicted_positive;
    }
  }
  return rates_from_counts(fn, positives_, fp, negatives_);
}

void CumulativeTracker::commit(double alpha, std::span<const Label> predictions) {
  if (predictions.size() != margin_.size()) throw DimensionMismatch("prediction length mismatch");
  std::size_t fn = 0, fp = 0;
  for (std::size_t i = 0; i < margin_.size(); ++i) {
    margin_[i] += alpha * predictions[i];
    const bool predicted_positive = margin_[i] > 0.0;
    if (labels_[i] == kPositive) {
      fn += !predicted_positive;
    } else {
      fp += predicted_positive;
    }
  }
  rates_ = rates_from_counts(fn, positives_, fp, negatives_);
  ++rounds_;
}

void CumulativeTracker::commit_votes(std::span<const double> votes) {
  if (votes.size() != margin_.size()) throw DimensionMismatch("vote length mismatch");
  std::size_t fn = 0, fp = 0;
  for (std::size_t i = 0; i < margin_.size(); ++i) {
    margin_[i] += votes[i];
    const bool predicted_positive = margin_[i] > 0.0;
    if (labels_[i] == kPositive) {
      fn += !predicted_positive;
    } else {
      fp += predicted_positive;
    }
  }
  rates_ = rates_from_counts(fn, positives_, fp, negatives_);
  ++rounds_;
}

void cumulative_costs(const ErrorRates& rates, std::span<const Label> predictions,
                      std::span<const Label> labels, CostVector& out) {
  if (predictions.size() != labels.size()) throw DimensionMismatch("prediction/label length mismatch");
  out.assign(labels.size(), 1.0);
  if (rates.fnr > rates.fpr) {
    const double c = 1.0 + rates.fnr;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == kPositive && predictions[i] != kPositive) out[i] = c;
    }
  } else if (rates.fpr > rates.fnr) {
    const double c = 1.0 + rates.fpr;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == kNegative && predictions[i] != kNegative) out[i] = c;
    }
  }
}

CostVector cumulative_costs(const ErrorRates& rates, std::span<const Label> predictions,
                            std::span<const Label> labels) {
  CostVector costs;
  cumulative_costs(rates, predictions, labels, costs);
  return costs;
}

CostVector update_cumulative_costs(CumulativeTracker& tracker, double alpha,
                                   std::span<const Label> predictions,
                                   std::span<const Label> labels) {
  tracker.commit(alpha, predictions);
  return cumulative_costs(tracker.rates(), predictions, labels);
}

}  // namespace boostcraft
