#include "boostcraft/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "boostcraft/error.hpp"

namespace boostcraft {

ConfusionCounts confusion(std::span<const Label> predictions, std::span<const Label> labels) {
  if (predictions.size() != labels.size()) {
    throw DimensionMismatch("predictions and labels differ in length");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool pred_pos = predictions[i] == kPositive;
    if (labels[i] == kPositive) {
      (pred_pos ? c.tp : c.fn) += 1;
    } else {
      (pred_pos ? c.fp : c.tn) += 1;
    }
  }
  return c;
}

double auc_score(std::span<const double> scores, std::span<const Label> labels) {
  if (scores.size() != labels.size()) throw DimensionMismatch("scores and labels differ in length");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  double rank_sum = 0.0;
  double n_pos = 0.0;
  for (std::size_t k = 0; k < n;) {
    std::size_t end = k + 1;
    while (end < n && scores[order[end]] == scores[order[k]]) ++end;
    // Ranks k+1 .. end share their average.
    const double avg_rank = 0.5 * static_cast<double>(k + 1 + end);
    for (std::size_t r = k; r < end; ++r) {
      if (labels[order[r]] == kPositive) {
        rank_sum += avg_rank;
        n_pos += 1.0;
      }
    }
    k = end;
  }
  const double n_neg = static_cast<double>(n) - n_pos;
  if (n_pos == 0.0 || n_neg == 0.0) throw UndefinedMetric("AUC needs both classes");
  return (rank_sum - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

MetricSuite suite(const ConfusionCounts& c, std::span<const double> scores,
                  std::span<const Label> labels) {
  MetricSuite s;
  const auto rate = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  s.tpr = rate(c.tp, c.positives());
  s.tnr = rate(c.tn, c.negatives());
  s.balanced_accuracy = (s.tpr + s.tnr) / 2.0;
  s.gmean = std::sqrt(s.tpr * s.tnr);
  const std::size_t f1_den = 2 * c.tp + c.fp + c.fn;
  s.f1 = f1_den == 0 ? 0.0 : static_cast<double>(2 * c.tp) / static_cast<double>(f1_den);
  try {
    s.auc = auc_score(scores, labels);
    s.opm = (*s.auc + s.balanced_accuracy + s.gmean + s.f1 + s.tpr + s.tnr) / 6.0;
  } catch (const UndefinedMetric&) {
    s.auc.reset();
    s.opm.reset();
  }
  return s;
}

MetricSuite evaluate(std::span<const Label> predictions, std::span<const double> scores,
                     std::span<const Label> labels) {
  return suite(confusion(predictions, labels), scores, labels);
}

std::optional<double> metric_value(const MetricSuite& s, std::string_view name) {
  if (name == "tpr") return s.tpr;
  if (name == "tnr") return s.tnr;
  if (name == "balanced_accuracy") return s.balanced_accuracy;
  if (name == "f1") return s.f1;
  if (name == "gmean") return s.gmean;
  if (name == "auc") return s.auc;
  if (name == "opm") return s.opm;
  return std::nullopt;
}

}  // namespace boostcraft
