#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <vector>

#include "boostcraft/dataset.hpp"
#include "boostcraft/stump.hpp"
#include "boostcraft/weights.hpp"

namespace oracles {

using namespace boostcraft;

/// Exhaustive stump enumeration, written independently of the prefix-sum
/// search: every midpoint plus a sentinel, errors summed directly.
inline StumpSearchResult brute_force_stump(const Dataset& d, const WeightDistribution& w) {
  // Candidates in tie-break order: feature, then threshold, then +1 before -1.
  std::vector<StumpSearchResult> all;
  for (std::size_t j = 0; j < d.feature_count(); ++j) {
    std::set<double> values;
    for (std::size_t i = 0; i < d.size(); ++i) values.insert(d.value(i, j));
    std::vector<double> thresholds{*values.begin() - 1.0};
    for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
      thresholds.push_back(*it + (*std::next(it) - *it) / 2.0);
    }
    for (double t : thresholds) {
      for (Label p : {kPositive, kNegative}) {
        const Stump s{j, t, p};
        double err = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (s(d.row(i)) != d.label(i)) err += w[i];
        }
        all.push_back({s, err});
      }
    }
  }
  double min_error = 2.0;
  for (const auto& c : all) min_error = std::min(min_error, c.weighted_error);
  for (const auto& c : all) {
    if (c.weighted_error <= min_error + kStumpTieTolerance) return c;
  }
  return {};
}

/// Fraction of (positive, negative) pairs ranked correctly, ties counting half.
inline double pairwise_auc(const std::vector<double>& s, const std::vector<Label>& y) {
  double hits = 0, pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (y[i] != kPositive) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (y[j] != kNegative) continue;
      pairs += 1;
      hits += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
    }
  }
  return hits / pairs;
}

}  // namespace oracles
