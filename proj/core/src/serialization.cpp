#include "boostcraft/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boostcraft/error.hpp"

namespace boostcraft {

using json = nlohmann::ordered_json;

std::string ensemble_to_json(const Ensemble& ensemble, int indent) {
  json doc;
  doc["strategy_id"] = ensemble.strategy_id;
  doc["feature_count"] = ensemble.feature_count;
  json members = json::array();
  for (const auto& m : ensemble.members) {
    json entry{{"feature_index", m.stump.feature_index},
               {"threshold", m.stump.threshold},
               {"polarity", m.stump.polarity},
               {"alpha", m.alpha}};
    if (m.alpha_negative) entry["alpha_neg"] = *m.alpha_negative;
    members.push_back(std::move(entry));
  }
  doc["members"] = std::move(members);
  if (ensemble.decision_shift) {
    doc["decision_shift"] = {{"positive", ensemble.decision_shift->positive},
                             {"negative", ensemble.decision_shift->negative}};
  }
  if (ensemble.calibrator) {
    doc["calibrator"] = {{"a", ensemble.calibrator->a}, {"b", ensemble.calibrator->b}};
  }
  return doc.dump(indent);
}

Ensemble ensemble_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Ensemble e;
    e.strategy_id = doc.at("strategy_id").get<std::string>();
    e.feature_count = doc.value("feature_count", std::size_t{0});
    for (const auto& entry : doc.at("members")) {
      EnsembleMember m;
      m.stump.feature_index = entry.at("feature_index").get<std::size_t>();
      m.stump.threshold = entry.at("threshold").get<double>();
      m.stump.polarity = entry.at("polarity").get<int>();
      if (m.stump.polarity != kPositive && m.stump.polarity != kNegative) {
        throw SerializationError("member polarity must be +1 or -1");
      }
      m.alpha = entry.at("alpha").get<double>();
      if (entry.contains("alpha_neg")) m.alpha_negative = entry.at("alpha_neg").get<double>();
      e.members.push_back(m);
    }
    if (doc.contains("decision_shift")) {
      const auto& s = doc.at("decision_shift");
      e.decision_shift = DecisionShift{s.at("positive").get<double>(), s.at("negative").get<double>()};
    }
    if (doc.contains("calibrator")) {
      const auto& c = doc.at("calibrator");
      e.calibrator = PlattCalibrator{c.at("a").get<double>(), c.at("b").get<double>()};
    }
    return e;
  } catch (const json::exception& ex) {
    throw SerializationError(std::string("malformed model JSON: ") + ex.what());
  }
}

void save_ensemble(const Ensemble& ensemble, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SerializationError("cannot open " + path.string() + " for writing");
  out << ensemble_to_json(ensemble) << '\n';
  if (!out) throw SerializationError("failed writing " + path.string());
}

Ensemble load_ensemble(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SerializationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ensemble_from_json(buffer.str());
}

}  // namespace boostcraft
