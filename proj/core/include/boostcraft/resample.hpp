#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "boostcraft/boosting.hpp"
#include "boostcraft/dataset.hpp"

namespace boostcraft {

enum class ResampleMethod { ros, rus, smote };

std::string_view to_string(ResampleMethod method) noexcept;
std::optional<ResampleMethod> parse_resample_method(std::string_view name) noexcept;

struct ResampleConfig {
  ResampleMethod method = ResampleMethod::smote;
  std::size_t k_neighbors = 5;
  std::uint64_t seed = 0;
};

/// Balances the classes.
///  ros:   appends minority rows drawn uniformly with replacement.
///  rus:   keeps a uniform sample of majority rows (original order kept).
///  smote: appends interpolated minority points.
/// Originals come first (ros, smote) so they are preserved exactly.
/// Throws ConfigError for smote when minority_count <= k.
Dataset resample(const ResampleConfig& config, const Dataset& data);

/// k Euclidean nearest minority neighbours of every minority row, in
/// order of distance (ties by row index). Indices refer to `data`.
std::vector<std::vector<std::size_t>> minority_neighbors(const Dataset& data, std::size_t k);

struct SmoteSynthetics {
  std::vector<double> rows;  // row-major, data.feature_count() wide
  /// (seed row, neighbour row) in `data` for each synthetic point.
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

/// `count` points x_seed + lambda (x_nn - x_seed), lambda ~ U[0, 1), the seed a
/// uniformly drawn minority row and x_nn one of its k nearest minority rows.
SmoteSynthetics generate_smote(const Dataset& data, std::size_t count, std::size_t k,
                               std::uint64_t seed);

/// AdaBoost where each round's stump is trained on all minority rows plus an
/// equally large uniform sample of majority rows, weighted by the current
/// distribution restricted to that sample; alpha and the update use the full
/// distribution.
TrainingResult train_rusboost(const Dataset& data, std::size_t rounds, std::uint64_t seed,
                              const TrainOptions& options = {});

/// AdaBoost where each round's stump is trained on the data plus fresh SMOTE
/// synthetics sharing the minority class's weight mass; alpha and the update
/// use the original distribution only.
TrainingResult train_smoteboost(const Dataset& data, std::size_t rounds, std::size_t k,
                                std::uint64_t seed, const TrainOptions& options = {});

}  // namespace boostcraft
