#include "boostcraft/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "boostcraft/error.hpp"

namespace boostcraft {

std::vector<double> average_ranks(std::span<const double> values, bool higher_is_better) {
  const std::size_t k = values.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_is_better ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(k);
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i + 1;
    while (j < k && values[order[j]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t r = i; r < j; ++r) ranks[order[r]] = avg;
    i = j;
  }
  return ranks;
}

FriedmanResult friedman_test(const RankMatrix& ranks, std::span<const std::size_t> controls) {
  const std::size_t n = ranks.size();
  if (n < 2) throw ConfigError("Friedman test needs at least two datasets");
  const std::size_t k = ranks.front().size();
  if (k < 2) throw ConfigError("Friedman test needs at least two methods");
  for (const auto& row : ranks) {
    if (row.size() != k) throw DimensionMismatch("ragged rank matrix");
  }

  FriedmanResult out;
  out.datasets = n;
  out.methods = k;
  out.mean_ranks.assign(k, 0.0);
  for (const auto& row : ranks) {
    for (std::size_t j = 0; j < k; ++j) out.mean_ranks[j] += row[j];
  }
  for (double& r : out.mean_ranks) r /= static_cast<double>(n);

  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double centre = (kd + 1.0) / 2.0;
  double ss = 0.0;
  for (double r : out.mean_ranks) ss += (r - centre) * (r - centre);
  out.statistic = 12.0 * nd / (kd * (kd + 1.0)) * ss;
  const boost::math::chi_squared chi2(kd - 1.0);
  out.p_value = out.statistic <= 0.0 ? 1.0 : boost::math::cdf(boost::math::complement(chi2, out.statistic));

  std::vector<std::size_t> chosen(controls.begin(), controls.end());
  if (chosen.empty()) {
    chosen.push_back(static_cast<std::size_t>(
        std::min_element(out.mean_ranks.begin(), out.mean_ranks.end()) - out.mean_ranks.begin()));
  }
  const double se = std::sqrt(kd * (kd + 1.0) / (6.0 * nd));
  const boost::math::normal standard;
  for (std::size_t c : chosen) {
    if (c >= k) throw ConfigError("control method index out of range");
    for (std::size_t j = 0; j < k; ++j) {
      if (j == c) continue;
      PairwiseComparison cmp;
      cmp.control = c;
      cmp.other = j;
      cmp.z = (out.mean_ranks[c] - out.mean_ranks[j]) / se;
      cmp.p_value = 2.0 * boost::math::cdf(boost::math::complement(standard, std::abs(cmp.z)));
      cmp.p_value = std::min(1.0, cmp.p_value);
      cmp.p_bonferroni = std::min(1.0, cmp.p_value * (kd - 1.0));
      out.pairwise.push_back(cmp);
    }
  }
  return out;
}

}  // namespace boostcraft
