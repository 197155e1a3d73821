#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "boostcraft/dataset.hpp"
#include "boostcraft/error.hpp"
#include "boostcraft/weights.hpp"

using namespace boostcraft;

TEST(Dataset, CountsClasses) {
  const Dataset d = Dataset::from_rows({{1.0}, {2.0}, {3.0}}, {kPositive, kNegative, kNegative});
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.feature_count(), 1u);
  EXPECT_EQ(d.minority_count(), 1u);
  EXPECT_EQ(d.majority_count(), 2u);
  EXPECT_EQ(d.feature_names(), std::vector<std::string>{"f0"});
  EXPECT_DOUBLE_EQ(d.value(2, 0), 3.0);
}

TEST(Dataset, RejectsBrokenInvariants) {
  EXPECT_THROW(Dataset::from_rows({{1.0}}, {kPositive}), InvalidDataset);
  EXPECT_THROW(Dataset::from_rows({{1.0}, {2.0}}, {kPositive, kPositive}), InvalidDataset);
  EXPECT_THROW(Dataset::from_rows({{1.0}, {std::nan("")}}, {kPositive, kNegative}), InvalidDataset);
  EXPECT_THROW(Dataset::from_rows({{1.0}, {std::numeric_limits<double>::infinity()}}, {kPositive, kNegative}),
               InvalidDataset);
  EXPECT_THROW(Dataset::from_rows({{1.0}, {2.0}}, {kPositive, 0}), InvalidDataset);
  EXPECT_THROW(Dataset::from_rows({{1.0}, {2.0, 3.0}}, {kPositive, kNegative}), InvalidDataset);
  EXPECT_THROW(Dataset({1.0, 2.0}, 0, {kPositive, kNegative}), InvalidDataset);
  EXPECT_THROW(Dataset::from_rows({{1.0}, {2.0}}, {kPositive, kNegative}, {"a", "b"}), InvalidDataset);
}

TEST(Dataset, SubsetAndConcatenate) {
  const Dataset d = Dataset::from_rows({{1.0, 10.0}, {2.0, 20.0}, {3.0, 30.0}}, {kPositive, kNegative, kNegative},
                                       {"a", "b"});
  const std::vector<std::size_t> idx{2, 0, 0};
  const Dataset s = d.subset(idx);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s.value(0, 1), 30.0);
  EXPECT_EQ(s.minority_count(), 2u);
  EXPECT_EQ(s.feature_names(), d.feature_names());

  const std::vector<double> extra{4.0, 40.0};
  const std::vector<Label> extra_y{kPositive};
  const Dataset c = d.concatenated(extra, extra_y);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.minority_count(), 2u);
  EXPECT_DOUBLE_EQ(c.value(3, 1), 40.0);
}

TEST(Weights, NormalizedExamples) {
  const std::vector<double> a{2.0, 2.0};
  const auto wa = normalized(a);
  EXPECT_DOUBLE_EQ(wa[0], 0.5);
  EXPECT_DOUBLE_EQ(wa[1], 0.5);

  const std::vector<double> b{1.0, 3.0};
  const auto wb = normalized(b);
  EXPECT_DOUBLE_EQ(wb[0], 0.25);
  EXPECT_DOUBLE_EQ(wb[1], 0.75);

  const std::vector<double> zero{0.0, 0.0};
  EXPECT_THROW(normalized(zero), InvalidWeights);
  const std::vector<double> neg{1.0, -1.0};
  EXPECT_THROW(normalized(neg), InvalidWeights);
  const std::vector<double> inf{1.0, std::numeric_limits<double>::infinity()};
  EXPECT_THROW(normalized(inf), InvalidWeights);
  EXPECT_THROW(normalized(std::vector<double>{}), InvalidWeights);
}

TEST(Weights, NormalizationPreservesProportions) {
  const std::vector<double> raw{0.3, 7.0, 0.0, 1e-5, 2.5};
  const auto w = normalized(raw);
  double sum = 0.0;
  for (double v : w.values()) sum += v;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (raw[i] > 0 && raw[j] > 0) {
        EXPECT_NEAR(w[i] / w[j], raw[i] / raw[j], 1e-12 * raw[i] / raw[j]);
      }
    }
  }
}

TEST(Weights, UniformAndClassMass) {
  const auto w = WeightDistribution::uniform(4);
  const std::vector<Label> y{kPositive, kNegative, kNegative, kNegative};
  EXPECT_DOUBLE_EQ(w.class_mass(y, kPositive), 0.25);
  EXPECT_DOUBLE_EQ(w.class_mass(y, kNegative), 0.75);
}

TEST(FixedCosts, Validation) {
  EXPECT_NO_THROW((FixedCosts{1.0, 0.5}.validate()));
  EXPECT_NO_THROW((FixedCosts{1.0, 1.0}.validate()));
  EXPECT_THROW((FixedCosts{0.5, 1.0}.validate()), ConfigError);
  EXPECT_THROW((FixedCosts{1.0, 0.0}.validate()), ConfigError);
  const std::vector<Label> y{kPositive, kNegative};
  EXPECT_EQ(expand_costs(FixedCosts{1.0, 0.3}, y), (CostVector{1.0, 0.3}));
}
