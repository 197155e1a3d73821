#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

#include "boostcraft/boosting.hpp"
#include "boostcraft/error.hpp"
#include "boostcraft/serialization.hpp"
#include "test_data.hpp"

using namespace boostcraft;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST(Serialization, RoundTripIsBitExact) {
  Ensemble e;
  e.strategy_id = "adamec_cal";
  e.feature_count = 3;
  e.members = {{Stump{2, 0.1 + 0.2, kNegative}, 1.0 / 3.0, std::nullopt},
               {Stump{0, -1e-310, kPositive}, 5e-324, 0.7}};
  e.decision_shift = DecisionShift{1.0 / 1.7, 0.7 / 1.7};
  e.calibrator = PlattCalibrator{-2.0 / 3.0, std::nextafter(0.0, 1.0)};

  const Ensemble back = ensemble_from_json(ensemble_to_json(e));
  EXPECT_EQ(back, e);
  EXPECT_TRUE(bit_equal(back.members[0].stump.threshold, e.members[0].stump.threshold));
  EXPECT_TRUE(bit_equal(back.members[1].alpha, e.members[1].alpha));
  EXPECT_TRUE(bit_equal(back.calibrator->b, e.calibrator->b));
  EXPECT_EQ(ensemble_to_json(back), ensemble_to_json(e));
}

TEST(Serialization, TrainedModelsRoundTrip) {
  const Dataset d = testdata::random_dataset(11, 80, 4, 0.25);
  for (StrategyId id : kAllStrategies) {
    StrategyConfig c{id, 12, std::nullopt, 0};
    if (uses_fixed_costs(id)) c.fixed_costs = FixedCosts{1.0, 0.4};
    Ensemble e;
    try {
      e = train(c, d).ensemble;
    } catch (const TrainingDegenerate&) {
      continue;
    }
    const Ensemble back = ensemble_from_json(ensemble_to_json(e, -1));
    EXPECT_EQ(back, e) << to_string(id);
    EXPECT_EQ(decision_scores(back, d), decision_scores(e, d)) << to_string(id);
  }
}

TEST(Serialization, OptionalFieldsOmitted) {
  Ensemble e;
  e.strategy_id = "adaboost";
  e.members = {{Stump{0, 1.5, kPositive}, 0.5, std::nullopt}};
  const std::string text = ensemble_to_json(e);
  EXPECT_EQ(text.find("alpha_neg"), std::string::npos);
  EXPECT_EQ(text.find("decision_shift"), std::string::npos);
  EXPECT_EQ(text.find("calibrator"), std::string::npos);
  EXPECT_NE(text.find("\"strategy_id\""), std::string::npos);
}

TEST(Serialization, RejectsMalformedInput) {
  EXPECT_THROW(ensemble_from_json("not json"), SerializationError);
  EXPECT_THROW(ensemble_from_json("{}"), SerializationError);
  EXPECT_THROW(ensemble_from_json(R"({"strategy_id":"adaboost","members":[{"feature_index":0}]})"),
               SerializationError);
  EXPECT_THROW(
      ensemble_from_json(
          R"({"strategy_id":"adaboost","members":[{"feature_index":0,"threshold":1,"polarity":3,"alpha":1}]})"),
      SerializationError);
}

TEST(Serialization, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "boostcraft_serialization_test.json";
  Ensemble e;
  e.strategy_id = "rareboost";
  e.feature_count = 1;
  e.members = {{Stump{0, 0.25, kNegative}, 0.9, 0.3}};
  save_ensemble(e, path);
  EXPECT_EQ(load_ensemble(path), e);
  std::filesystem::remove(path);
  EXPECT_THROW(load_ensemble(path), SerializationError);
}
