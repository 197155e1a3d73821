#include <gtest/gtest.h>

#include "boostcraft/boosting.hpp"
#include "boostcraft/error.hpp"
#include "boostcraft/random.hpp"
#include "boostcraft/tracker.hpp"
#include "test_data.hpp"

using namespace boostcraft;

TEST(CumulativeCosts, EqualRatesGiveUnitCosts) {
  const std::vector<Label> y{kPositive, kNegative, kPositive, kNegative};
  const std::vector<Label> h{kNegative, kPositive, kPositive, kNegative};
  for (double r : {0.0, 0.3, 1.0}) {
    EXPECT_EQ(cumulative_costs(ErrorRates{r, r}, h, y), (CostVector{1, 1, 1, 1}));
  }
}

TEST(CumulativeCosts, FalseNegativeCase) {
  const std::vector<Label> y{kPositive, kNegative, kPositive, kNegative};
  const std::vector<Label> h{kNegative, kPositive, kPositive, kNegative};
  const auto c = cumulative_costs(ErrorRates{0.4, 0.1}, h, y);
  EXPECT_DOUBLE_EQ(c[0], 1.4);  // misclassified positive
  EXPECT_DOUBLE_EQ(c[1], 1.0);  // misclassified negative
  EXPECT_DOUBLE_EQ(c[2], 1.0);
  EXPECT_DOUBLE_EQ(c[3], 1.0);
}

TEST(CumulativeCosts, FalsePositiveCase) {
  const std::vector<Label> y{kPositive, kNegative, kPositive, kNegative};
  const std::vector<Label> h{kNegative, kPositive, kPositive, kNegative};
  const auto c = cumulative_costs(ErrorRates{0.0, 0.3}, h, y);
  EXPECT_DOUBLE_EQ(c[1], 1.3);
  EXPECT_DOUBLE_EQ(c[0], 1.0);
  EXPECT_DOUBLE_EQ(c[2], 1.0);
  EXPECT_DOUBLE_EQ(c[3], 1.0);
}

TEST(Tracker, EmptyEnsemblePredictsNegative) {
  const std::vector<Label> y{kPositive, kNegative, kNegative};
  const CumulativeTracker t(y);
  EXPECT_DOUBLE_EQ(t.fnr(), 1.0);
  EXPECT_DOUBLE_EQ(t.fpr(), 0.0);
  EXPECT_EQ(t.rounds(), 0u);
}

TEST(Tracker, PreviewDoesNotMutate) {
  const std::vector<Label> y{kPositive, kNegative};
  CumulativeTracker t(y);
  const std::vector<Label> h{kPositive, kNegative};
  const ErrorRates r = t.preview(0.5, h);
  EXPECT_DOUBLE_EQ(r.fnr, 0.0);
  EXPECT_DOUBLE_EQ(t.fnr(), 1.0);
  t.commit(0.5, h);
  EXPECT_DOUBLE_EQ(t.fnr(), 0.0);
  EXPECT_DOUBLE_EQ(t.margin()[0], 0.5);
  EXPECT_DOUBLE_EQ(t.margin()[1], -0.5);
}

TEST(Tracker, UpdateCommitsThenPrices) {
  const std::vector<Label> y{kPositive, kPositive, kNegative, kNegative};
  CumulativeTracker t(y);
  // h votes negative everywhere: FNR stays 1, FPR 0, positives are boosted.
  const std::vector<Label> h{kNegative, kNegative, kNegative, kNegative};
  const auto c = update_cumulative_costs(t, 0.4, h, y);
  EXPECT_EQ(c, (CostVector{2.0, 2.0, 1.0, 1.0}));
  EXPECT_EQ(t.rounds(), 1u);
}

TEST(Tracker, IncrementalMatchesFromScratch) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Dataset d = testdata::random_dataset(seed, 50, 3, 0.3);
    for (StrategyId id : {StrategyId::adacc1, StrategyId::adacc2, StrategyId::rareboost}) {
      const auto result = train(StrategyConfig{id, 20, std::nullopt, seed}, d);
      for (std::size_t t = 0; t < result.log.rounds.size(); ++t) {
        const Ensemble p = result.ensemble.prefix(t + 1);
        std::vector<double> margin(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) margin[i] = raw_score(p, d.row(i));
        const ErrorRates r = margin_error_rates(margin, d.labels());
        ASSERT_EQ(result.log.rounds[t].cum_fnr, r.fnr);
        ASSERT_EQ(result.log.rounds[t].cum_fpr, r.fpr);
      }
    }
  }
}

TEST(Tracker, CostsStayInRangeAndOnOneClass) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Dataset d = testdata::random_dataset(seed, 60, 2, 0.2);
    TrainOptions opts;
    opts.record_trajectory = true;
    for (StrategyId id : {StrategyId::adacc1, StrategyId::adacc2, StrategyId::adan_cc1, StrategyId::adan_cc2}) {
      const auto result = train(StrategyConfig{id, 25, std::nullopt, 0}, d, opts);
      for (std::size_t t = 0; t < result.log.costs.size(); ++t) {
        const auto h = predict_all(result.ensemble.members[t].stump, d);
        int boosted_label = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
          const double c = result.log.costs[t][i];
          ASSERT_GE(c, 1.0);
          ASSERT_LE(c, 2.0);
          if (c > 1.0) {
            ASSERT_NE(h[i], d.label(i)) << "boosted instance must be misclassified by h_t";
            if (boosted_label == 0) boosted_label = d.label(i);
            ASSERT_EQ(d.label(i), boosted_label);
          }
        }
      }
    }
  }
}

TEST(Tracker, RatesRejectLengthMismatch) {
  const std::vector<Label> y{kPositive, kNegative};
  const std::vector<Label> h{kPositive};
  EXPECT_THROW(prediction_error_rates(h, y), DimensionMismatch);
  CumulativeTracker t(y);
  EXPECT_THROW(t.commit(1.0, h), DimensionMismatch);
}
