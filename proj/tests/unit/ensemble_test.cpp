#include <gtest/gtest.h>

#include "boostcraft/boosting.hpp"
#include "boostcraft/ensemble.hpp"
#include "boostcraft/error.hpp"
#include "test_data.hpp"

using namespace boostcraft;

namespace {

// Stumps on feature 0 that vote +1 / -1 for x = [1].
const Stump kUp{0, 0.5, kPositive};
const Stump kDown{0, 0.5, kNegative};
const std::vector<double> kX{1.0};

Ensemble make(std::vector<EnsembleMember> members) {
  Ensemble e;
  e.strategy_id = "adaboost";
  e.feature_count = 1;
  e.members = std::move(members);
  return e;
}

}  // namespace

TEST(Ensemble, RawScoreExamples) {
  EXPECT_DOUBLE_EQ(raw_score(make({{kUp, 0.5, {}}}), kX), 0.5);
  EXPECT_DOUBLE_EQ(raw_score(make({{kUp, 0.3, {}}, {kDown, 0.3, {}}}), kX), 0.0);
  EXPECT_DOUBLE_EQ(raw_score(make({{kUp, 0.5, {}}, {kDown, 0.2, {}}}), kX), 0.3);
}

TEST(Ensemble, EmptyAndMismatchedInputs) {
  EXPECT_THROW(raw_score(make({}), kX), EmptyEnsemble);
  EXPECT_THROW(predict_label(make({}), kX), EmptyEnsemble);
  EXPECT_THROW(raw_score(make({{kUp, 0.5, {}}}), std::vector<double>{1.0, 2.0}), DimensionMismatch);
}

TEST(Ensemble, SignRule) {
  EXPECT_EQ(predict_label(make({{kUp, 0.5, {}}, {kDown, 0.2, {}}}), kX), kPositive);
  EXPECT_EQ(predict_label(make({{kUp, 0.3, {}}, {kDown, 0.3, {}}}), kX), kNegative);
  EXPECT_EQ(sign_label(0.0), kNegative);
  EXPECT_EQ(sign_label(-0.0), kNegative);
  EXPECT_EQ(sign_label(1e-300), kPositive);
}

TEST(Ensemble, DecisionShiftExample) {
  // Positive-vote mass 0.2, negative-vote mass -0.3, c(+1) = 1, c(-1) = 0.5.
  Ensemble e = make({{kUp, 0.2, {}}, {kDown, 0.3, {}}});
  EXPECT_EQ(predict_label(e, kX), kNegative);
  e.decision_shift = DecisionShift{1.0, 0.5};
  EXPECT_NEAR(decision_score(e, kX), 0.05, 1e-15);
  EXPECT_EQ(predict_label(e, kX), kPositive);
}

TEST(Ensemble, RareBoostVotes) {
  Ensemble e = make({{kUp, 0.7, 0.1}, {kDown, 0.9, 0.4}});
  // First member votes +0.7, second votes -0.4.
  EXPECT_DOUBLE_EQ(raw_score(e, kX), 0.7 - 0.4);
  EXPECT_DOUBLE_EQ(e.members[1].voting_weight(kX), 0.4);
}

TEST(Ensemble, CalibratedDecisionThresholdsAtHalf) {
  Ensemble e = make({{kUp, 1.0, {}}});
  e.calibrator = PlattCalibrator{-2.0, 1.0};  // p(s = 1) = 1 / (1 + e^-1) > 0.5
  EXPECT_NEAR(decision_score(e, kX), 1.0 / (1.0 + std::exp(-1.0)) - 0.5, 1e-15);
  EXPECT_EQ(predict_label(e, kX), kPositive);
  e.calibrator = PlattCalibrator{-2.0, 3.0};  // p = 1 / (1 + e) < 0.5
  EXPECT_EQ(predict_label(e, kX), kNegative);
}

TEST(Ensemble, PlattProbabilityIsStable) {
  const PlattCalibrator c{1.0, 0.0};
  EXPECT_DOUBLE_EQ(c.probability(0.0), 0.5);
  EXPECT_GT(c.probability(-800.0), 0.999);
  EXPECT_GT(c.probability(800.0), 0.0 - 1e-300);
  EXPECT_LT(c.probability(800.0), 1e-300);
}

TEST(Ensemble, PredictionInvariantUnderAlphaRescaling) {
  const Dataset d = testdata::random_dataset(3, 60, 3, 0.3);
  const auto trained = train(StrategyConfig{StrategyId::adaboost, 15, std::nullopt, 0}, d).ensemble;
  for (double k : {1e-3, 0.5, 3.0, 1e4}) {
    Ensemble scaled = trained;
    for (auto& m : scaled.members) m.alpha *= k;
    EXPECT_EQ(predict_labels(scaled, d), predict_labels(trained, d)) << k;
  }
}

TEST(Ensemble, SingleMemberReproducesStump) {
  const Dataset d = testdata::random_dataset(5, 40, 2, 0.4);
  const Stump s{1, 0.1, kNegative};
  Ensemble e = make({{s, 0.8, {}}});
  e.feature_count = 2;
  EXPECT_EQ(predict_labels(e, d), predict_all(s, d));
}

TEST(Ensemble, PrefixDropsDecisionRules) {
  Ensemble e = make({{kUp, 0.2, {}}, {kDown, 0.3, {}}});
  e.decision_shift = DecisionShift{0.7, 0.3};
  e.calibrator = PlattCalibrator{-1.0, 0.0};
  const Ensemble p = e.prefix(1);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_FALSE(p.decision_shift);
  EXPECT_FALSE(p.calibrator);
  EXPECT_EQ(e.prefix(10).size(), 2u);
}
