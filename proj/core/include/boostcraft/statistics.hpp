#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace boostcraft {

/// 1-based ranks with ties sharing the average rank. Rank 1 goes to the
/// highest value when `higher_is_better`, else to the lowest.
std::vector<double> average_ranks(std::span<const double> values, bool higher_is_better = true);

/// Datasets x methods matrix of ranks.
using RankMatrix = std::vector<std::vector<double>>;

struct PairwiseComparison {
  std::size_t control = 0;
  std::size_t other = 0;
  double z = 0.0;
  double p_value = 1.0;
  /// min(1, p_value * (k - 1)).
  double p_bonferroni = 1.0;
};

struct FriedmanResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t datasets = 0;
  std::size_t methods = 0;
  std::vector<double> mean_ranks;
  std::vector<PairwiseComparison> pairwise;
};

/// Friedman chi-square over the rank matrix (k - 1 degrees of freedom) and
/// two-sided z-test post-hoc comparisons of each control against every other
/// method, Bonferroni-adjusted for the k - 1 comparisons of that control.
/// An empty `controls` picks the method with the best mean rank.
/// Throws ConfigError with fewer than 2 methods or 2 datasets.
FriedmanResult friedman_test(const RankMatrix& ranks, std::span<const std::size_t> controls = {});

}  // namespace boostcraft
