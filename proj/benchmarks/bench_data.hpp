#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boostcraft/dataset.hpp"
#include "boostcraft/random.hpp"

namespace bench {

// Gaussian-free synthetic data: uniform features, positives shifted on even columns.
inline boostcraft::Dataset synthetic(std::size_t n, std::size_t m, double positive_rate = 0.1,
                                     std::uint64_t seed = 1) {
  boostcraft::Rng rng(seed);
  std::vector<double> x(n * m);
  std::vector<boostcraft::Label> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = (i < 2 ? i == 0 : rng.uniform() < positive_rate) ? boostcraft::kPositive : boostcraft::kNegative;
    for (std::size_t j = 0; j < m; ++j) {
      x[i * m + j] = rng.uniform() + (y[i] == boostcraft::kPositive && j % 2 == 0 ? 0.4 : 0.0);
    }
  }
  return boostcraft::Dataset(std::move(x), m, std::move(y));
}

}  // namespace bench
