#include <gtest/gtest.h>

#include <cmath>

#include "boostcraft/boosting.hpp"
#include "boostcraft/error.hpp"
#include "test_data.hpp"

using namespace boostcraft;

namespace {

RoundStats error_stats(double correct, double wrong) {
  RoundStats s;
  s.correct_mass = s.cost_correct_mass = s.cost_sq_correct_mass = correct;
  s.wrong_mass = s.cost_wrong_mass = s.cost_sq_wrong_mass = wrong;
  s.cost_total_mass = correct + wrong;
  return s;
}

void expect_same_trajectory(const TrainingResult& a, const TrainingResult& b, const char* what) {
  ASSERT_EQ(a.ensemble.size(), b.ensemble.size()) << what;
  for (std::size_t t = 0; t < a.ensemble.size(); ++t) {
    EXPECT_EQ(a.ensemble.members[t].stump, b.ensemble.members[t].stump) << what << " round " << t;
    EXPECT_NEAR(a.ensemble.members[t].alpha, b.ensemble.members[t].alpha, 1e-9) << what;
    for (std::size_t i = 0; i < a.log.weights[t].size(); ++i) {
      ASSERT_NEAR(a.log.weights[t][i], b.log.weights[t][i], 1e-9) << what << " round " << t;
    }
  }
}

}  // namespace

TEST(ComputeAlpha, AdaBoostExample) {
  const auto a = compute_alpha(StrategyId::adaboost, error_stats(0.75, 0.25));
  ASSERT_TRUE(a);
  EXPECT_NEAR(a->positive, 0.5 * std::log(3.0), 1e-15);
  EXPECT_NEAR(a->positive, 0.549306, 1e-6);
}

TEST(ComputeAlpha, HalfErrorStops) {
  EXPECT_FALSE(compute_alpha(StrategyId::adaboost, error_stats(0.5, 0.5)));
  EXPECT_FALSE(compute_alpha(StrategyId::adaboost, error_stats(0.4, 0.6)));
  EXPECT_EQ(continuation_check(StrategyId::adaboost, error_stats(0.5, 0.5)), Continuation::stop);
}

TEST(ComputeAlpha, AdaCC2CostRatio) {
  RoundStats s = error_stats(0.5, 0.5);
  s.cost_correct_mass = 0.8;
  s.cost_wrong_mass = 0.2;
  const auto a = compute_alpha(StrategyId::adacc2, s);
  ASSERT_TRUE(a);
  EXPECT_NEAR(a->positive, 0.5 * std::log(4.0), 1e-15);
}

TEST(ComputeAlpha, AdaCC1CostInside) {
  RoundStats s = error_stats(0.5, 0.5);
  s.cost_correct_mass = 0.9;
  s.cost_wrong_mass = 0.4;
  const auto a = compute_alpha(StrategyId::adacc1, s);
  ASSERT_TRUE(a);
  EXPECT_NEAR(a->positive, 0.5 * std::log(1.5 / 0.5), 1e-15);
}

TEST(ComputeAlpha, PerfectLearnerIsFinite) {
  const auto a = compute_alpha(StrategyId::adaboost, error_stats(1.0, 0.0));
  ASSERT_TRUE(a);
  EXPECT_TRUE(std::isfinite(a->positive));
  EXPECT_NEAR(a->positive, 0.5 * std::log(1.0 / kMinErrorMass), 1e-9);
  EXPECT_EQ(continuation_check(StrategyId::adaboost, error_stats(1.0, 0.0)), Continuation::last_round);
}

TEST(ContinuationCheck, CostMassesDecide) {
  RoundStats s = error_stats(0.7, 0.3);
  s.cost_correct_mass = 0.7;
  s.cost_wrong_mass = 0.7;
  EXPECT_EQ(continuation_check(StrategyId::adacc1, s), Continuation::stop);
  EXPECT_EQ(continuation_check(StrategyId::adacc2, s), Continuation::stop);
  EXPECT_EQ(continuation_check(StrategyId::adaboost, s), Continuation::proceed);
  s.cost_wrong_mass = 0.69;
  EXPECT_EQ(continuation_check(StrategyId::adacc1, s), Continuation::proceed);
}

TEST(ContinuationCheck, RareBoostNeedsBothRatios) {
  RoundStats s;
  s.tp_mass = 0.3;
  s.fp_mass = 0.3;
  s.tn_mass = 0.3;
  s.fn_mass = 0.1;
  s.correct_mass = 0.6;
  s.wrong_mass = 0.4;
  EXPECT_EQ(continuation_check(StrategyId::rareboost, s), Continuation::stop);
  EXPECT_FALSE(compute_alpha(StrategyId::rareboost, s));
  s.tp_mass = 0.4;
  s.fp_mass = 0.2;
  s.wrong_mass = 0.3;
  EXPECT_EQ(continuation_check(StrategyId::rareboost, s), Continuation::proceed);
  const auto a = compute_alpha(StrategyId::rareboost, s);
  ASSERT_TRUE(a);
  EXPECT_NEAR(a->positive, 0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(a->negative, 0.5 * std::log(3.0), 1e-15);
}

TEST(RoundStats, SumsByOutcome) {
  const auto w = normalized(std::vector<double>{1, 1, 1, 1});
  const std::vector<double> c{2.0, 1.0, 1.0, 1.5};
  const std::vector<Label> y{kPositive, kPositive, kNegative, kNegative};
  const std::vector<Label> h{kNegative, kPositive, kNegative, kPositive};
  const RoundStats s = round_stats(w, c, h, y);
  EXPECT_DOUBLE_EQ(s.correct_mass, 0.5);
  EXPECT_DOUBLE_EQ(s.wrong_mass, 0.5);
  EXPECT_DOUBLE_EQ(s.cost_wrong_mass, 0.25 * 3.5);
  EXPECT_DOUBLE_EQ(s.cost_correct_mass, 0.5);
  EXPECT_DOUBLE_EQ(s.cost_sq_wrong_mass, 0.25 * (4.0 + 2.25));
  EXPECT_DOUBLE_EQ(s.tp_mass, 0.25);
  EXPECT_DOUBLE_EQ(s.fn_mass, 0.25);
  EXPECT_DOUBLE_EQ(s.tn_mass, 0.25);
  EXPECT_DOUBLE_EQ(s.fp_mass, 0.25);
}

TEST(Reweight, AdaBoostExample) {
  const auto w = WeightDistribution::uniform(2);
  const std::vector<double> c{1.0, 1.0};
  const std::vector<Label> y{kPositive, kNegative};
  const std::vector<Label> h{kPositive, kPositive};
  const double a = 0.5 * std::log(3.0);
  const auto r = reweight(StrategyId::adaboost, w, c, AlphaPair{a, a}, h, y);
  EXPECT_NEAR(r.weights[0], 0.25, 1e-15);
  EXPECT_NEAR(r.weights[1], 0.75, 1e-15);
  EXPECT_NEAR(r.normalizer, 0.5 / std::sqrt(3.0) + 0.5 * std::sqrt(3.0), 1e-15);
  // Unit costs make AdaCC1 identical.
  const auto r1 = reweight(StrategyId::adacc1, w, c, AlphaPair{a, a}, h, y);
  EXPECT_EQ(r1.weights.values()[0], r.weights.values()[0]);
  EXPECT_EQ(r1.weights.values()[1], r.weights.values()[1]);
}

TEST(Reweight, AdaCC2Example) {
  const auto w = WeightDistribution::uniform(2);
  const std::vector<double> c{1.4, 1.0};
  const std::vector<Label> y{kPositive, kNegative};
  const std::vector<Label> h{kNegative, kNegative};
  const auto r = reweight(StrategyId::adacc2, w, c, AlphaPair{0.5, 0.5}, h, y);
  const double u0 = 0.5 * 1.4 * std::exp(0.5);
  const double u1 = 0.5 * std::exp(-0.5);
  EXPECT_NEAR(r.weights[0], u0 / (u0 + u1), 1e-15);
  EXPECT_NEAR(r.weights[0], 0.7919, 1e-4);
  EXPECT_NEAR(r.weights[1], 0.2081, 1e-4);
}

TEST(Reweight, RareBoostUsesPredictionSidedAlpha) {
  const auto w = WeightDistribution::uniform(2);
  const std::vector<double> c{1.0, 1.0};
  const std::vector<Label> y{kPositive, kPositive};
  const std::vector<Label> h{kPositive, kNegative};
  const auto r = reweight(StrategyId::rareboost, w, c, AlphaPair{0.2, 0.7}, h, y);
  const double u0 = std::exp(-0.2);
  const double u1 = std::exp(0.7);
  EXPECT_NEAR(r.weights[0], u0 / (u0 + u1), 1e-15);
}

TEST(Train, UnitCostStrategiesReduceToAdaBoost) {
  TrainOptions opts;
  opts.record_trajectory = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset d = testdata::random_dataset(seed, 120, 4, 0.3);
    const auto base = train(StrategyConfig{StrategyId::adaboost, 30, std::nullopt, 0}, d, opts);
    for (StrategyId id : {StrategyId::adac1, StrategyId::adac2, StrategyId::adac3, StrategyId::csb2,
                          StrategyId::cgada, StrategyId::adamec}) {
      const auto r = train(StrategyConfig{id, 30, FixedCosts{1.0, 1.0}, 0}, d, opts);
      expect_same_trajectory(base, r, std::string(to_string(id)).c_str());
    }
    TrainOptions bypass = opts;
    bypass.bypass_cost_tracker = true;
    for (StrategyId id : {StrategyId::adacc1, StrategyId::adacc2, StrategyId::adan_cc1, StrategyId::adan_cc2}) {
      const auto r = train(StrategyConfig{id, 30, std::nullopt, 0}, d, bypass);
      expect_same_trajectory(base, r, std::string(to_string(id)).c_str());
    }
  }
}

TEST(Train, TrainingErrorBelowProductOfZ) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Dataset d = testdata::random_dataset(seed, 80, 3, 0.2);
    for (StrategyId id : {StrategyId::adaboost, StrategyId::adacc1, StrategyId::adacc2}) {
      const auto r = train(StrategyConfig{id, 40, std::nullopt, 0}, d);
      const auto bound = training_error_bound(r, d);
      EXPECT_LE(bound.empirical_error, bound.product_of_z) << to_string(id) << " seed " << seed;
    }
  }
}

TEST(Train, SingleRoundNormalizer) {
  const Dataset d = testdata::random_dataset(4, 50, 2, 0.3);
  const auto r = train(StrategyConfig{StrategyId::adaboost, 1, std::nullopt, 0}, d);
  const double eps = train_stump(d, WeightDistribution::uniform(d.size())).weighted_error;
  ASSERT_EQ(r.log.rounds.size(), 1u);
  EXPECT_NEAR(r.log.rounds[0].normalizer, 2.0 * std::sqrt(eps * (1.0 - eps)), 1e-12);
}

TEST(Train, SeparableDataStopsAfterPerfectLearner) {
  const Dataset d = Dataset::from_rows({{0.0}, {1.0}, {2.0}, {3.0}}, {kNegative, kNegative, kPositive, kPositive});
  const auto r = train(StrategyConfig{StrategyId::adaboost, 50, std::nullopt, 0}, d);
  EXPECT_EQ(r.ensemble.size(), 1u);
  EXPECT_EQ(r.stop, StopReason::perfect_learner);
  EXPECT_EQ(predict_labels(r.ensemble, d), std::vector<Label>(d.labels().begin(), d.labels().end()));
}

TEST(Train, InvariantsForEveryStrategy) {
  TrainOptions opts;
  opts.record_trajectory = true;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Dataset d = testdata::random_dataset(seed + 30, 90, 3, 0.25);
    for (StrategyId id : kAllStrategies) {
      StrategyConfig c{id, 20, std::nullopt, 0};
      if (uses_fixed_costs(id)) c.fixed_costs = FixedCosts{1.0, 0.5};
      TrainingResult r;
      try {
        r = train(c, d, opts);
      } catch (const TrainingDegenerate&) {
        continue;
      }
      ASSERT_FALSE(r.ensemble.empty());
      for (const auto& m : r.ensemble.members) {
        EXPECT_GT(m.alpha, 0.0) << to_string(id);
        EXPECT_TRUE(std::isfinite(m.alpha));
      }
      for (const auto& w : r.log.weights) {
        double sum = 0.0;
        for (double v : w) {
          EXPECT_GE(v, 0.0);
          sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12) << to_string(id);
      }
    }
  }
}

TEST(Train, Deterministic) {
  const Dataset d = testdata::random_dataset(8, 70, 3, 0.2);
  for (StrategyId id : {StrategyId::adacc1, StrategyId::adacc2, StrategyId::cgada_cal}) {
    StrategyConfig c{id, 25, std::nullopt, 5};
    if (uses_fixed_costs(id)) c.fixed_costs = FixedCosts{1.0, 0.3};
    EXPECT_EQ(train(c, d).ensemble, train(c, d).ensemble);
  }
}

TEST(Train, RejectsBadConfig) {
  const Dataset d = testdata::random_dataset(1, 20, 2, 0.3);
  EXPECT_THROW(train(StrategyConfig{StrategyId::adaboost, 0, std::nullopt, 0}, d), ConfigError);
  EXPECT_THROW(train(StrategyConfig{StrategyId::adac1, 10, std::nullopt, 0}, d), ConfigError);
  EXPECT_THROW(train(StrategyConfig{StrategyId::adacc1, 10, FixedCosts{1.0, 0.5}, 0}, d), ConfigError);
  EXPECT_THROW(train(StrategyConfig{StrategyId::adac2, 10, FixedCosts{0.5, 1.0}, 0}, d), ConfigError);
}

TEST(Train, UselessFirstLearnerIsDegenerate) {
  // Identical features: every stump is constant, and AdaBoost's constant -1
  // stump has error 0.5 under balanced classes.
  const Dataset d = Dataset::from_rows({{1.0}, {1.0}, {1.0}, {1.0}}, {kPositive, kNegative, kPositive, kNegative});
  EXPECT_THROW(train(StrategyConfig{StrategyId::adaboost, 5, std::nullopt, 0}, d), TrainingDegenerate);
  EXPECT_THROW(train(StrategyConfig{StrategyId::adacc2, 5, std::nullopt, 0}, d), TrainingDegenerate);
}

TEST(Train, DiagnosticsAreRecorded) {
  const Dataset d = testdata::random_dataset(2, 60, 2, 0.15);
  const auto r = train(StrategyConfig{StrategyId::adacc2, 10, std::nullopt, 0}, d);
  EXPECT_NEAR(r.log.initial_minority_mass, static_cast<double>(d.minority_count()) / d.size(), 1e-15);
  ASSERT_EQ(r.log.rounds.size(), r.ensemble.size());
  for (std::size_t t = 0; t < r.log.rounds.size(); ++t) {
    const auto& rec = r.log.rounds[t];
    EXPECT_EQ(rec.round, t + 1);
    EXPECT_EQ(rec.alpha, r.ensemble.members[t].alpha);
    EXPECT_DOUBLE_EQ(rec.balanced_error, 0.5 * (rec.cum_fnr + rec.cum_fpr));
  }
}
