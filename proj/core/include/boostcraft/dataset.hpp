#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace boostcraft {

/// Binary class label. +1 is the minority/positive class, -1 the majority.
using Label = int;
inline constexpr Label kPositive = +1;
inline constexpr Label kNegative = -1;

/// Immutable n x m matrix of finite features with labels in {+1, -1}.
///
/// Construction validates every invariant (n >= 2, m >= 1, finite values,
/// both classes present) and throws InvalidDataset otherwise. Features are
/// stored row-major.
class Dataset {
 public:
  Dataset(std::vector<double> features, std::size_t feature_count,
          std::vector<Label> labels, std::vector<std::string> feature_names = {});

  static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                           std::vector<Label> labels,
                           std::vector<std::string> feature_names = {});

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t feature_count() const noexcept { return feature_count_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {features_.data() + i * feature_count_, feature_count_};
  }
  double value(std::size_t i, std::size_t j) const noexcept {
    return features_[i * feature_count_ + j];
  }
  Label label(std::size_t i) const noexcept { return labels_[i]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::span<const double> features() const noexcept { return features_; }
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }

  std::size_t minority_count() const noexcept { return positives_; }
  std::size_t majority_count() const noexcept { return size() - positives_; }

  /// Rows selected by `indices`, in that order. Duplicates are allowed.
  Dataset subset(std::span<const std::size_t> indices) const;

  /// Appends `rows` (row-major, same width) with the given labels.
  Dataset concatenated(std::span<const double> rows, std::span<const Label> labels) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<double> features_;
  std::size_t feature_count_;
  std::vector<Label> labels_;
  std::vector<std::string> feature_names_;
  std::size_t positives_ = 0;
};

}  // namespace boostcraft
