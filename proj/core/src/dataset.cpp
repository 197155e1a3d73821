#include "boostcraft/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boostcraft/error.hpp"

namespace boostcraft {

Dataset::Dataset(std::vector<double> features, std::size_t feature_count,
                 std::vector<Label> labels, std::vector<std::string> feature_names)
    : features_(std::move(features)),
      feature_count_(feature_count),
      labels_(std::move(labels)),
      feature_names_(std::move(feature_names)) {
  if (feature_count_ == 0) throw InvalidDataset("dataset needs at least one feature");
  if (labels_.size() < 2) throw InvalidDataset("dataset needs at least two instances");
  if (features_.size() != labels_.size() * feature_count_) {
    throw InvalidDataset("feature matrix has " + std::to_string(features_.size()) +
                         " values, expected " +
                         std::to_string(labels_.size() * feature_count_));
  }
  for (std::size_t k = 0; k < features_.size(); ++k) {
    if (!std::isfinite(features_[k])) {
      throw InvalidDataset("non-finite feature value at row " +
                           std::to_string(k / feature_count_) + ", column " +
                           std::to_string(k % feature_count_));
    }
  }
  for (Label y : labels_) {
    if (y != kPositive && y != kNegative) throw InvalidDataset("labels must be +1 or -1");
    if (y == kPositive) ++positives_;
  }
  if (positives_ == 0 || positives_ == labels_.size()) {
    throw InvalidDataset("both classes must be present");
  }
  if (feature_names_.empty()) {
    feature_names_.reserve(feature_count_);
    for (std::size_t j = 0; j < feature_count_; ++j) {
      feature_names_.push_back("f" + std::to_string(j));
    }
  } else if (feature_names_.size() != feature_count_) {
    throw InvalidDataset("feature_names length does not match feature count");
  }
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows,
                           std::vector<Label> labels,
                           std::vector<std::string> feature_names) {
  if (rows.empty()) throw InvalidDataset("dataset needs at least two instances");
  const std::size_t m = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * m);
  for (const auto& r : rows) {
    if (r.size() != m) throw InvalidDataset("ragged feature rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Dataset(std::move(flat), m, std::move(labels), std::move(feature_names));
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<double> flat;
  flat.reserve(indices.size() * feature_count_);
  std::vector<Label> ys;
  ys.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw DimensionMismatch("subset index out of range");
    const auto r = row(i);
    flat.insert(flat.end(), r.begin(), r.end());
    ys.push_back(labels_[i]);
  }
  return Dataset(std::move(flat), feature_count_, std::move(ys), feature_names_);
}

Dataset Dataset::concatenated(std::span<const double> rows, std::span<const Label> labels) const {
  if (rows.size() != labels.size() * feature_count_) {
    throw DimensionMismatch("appended rows do not match feature count");
  }
  std::vector<double> flat(features_);
  flat.insert(flat.end(), rows.begin(), rows.end());
  std::vector<Label> ys(labels_);
  ys.insert(ys.end(), labels.begin(), labels.end());
  return Dataset(std::move(flat), feature_count_, std::move(ys), feature_names_);
}

}  // namespace boostcraft
