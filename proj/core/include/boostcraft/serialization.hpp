#pragma once

#include <filesystem>
#include <string>

#include "boostcraft/ensemble.hpp"

namespace boostcraft {

// Model JSON:
//   {"strategy_id": str, "feature_count": int,
//    "members": [{"feature_index", "threshold", "polarity", "alpha", "alpha_neg"?}],
//    "decision_shift"?: {"positive", "negative"}, "calibrator"?: {"a", "b"}}
// Doubles are written in shortest round-trip form, so a load reproduces
// every field bit-exactly.

std::string ensemble_to_json(const Ensemble& ensemble, int indent = 2);
/// Throws SerializationError on malformed input.
Ensemble ensemble_from_json(const std::string& text);

void save_ensemble(const Ensemble& ensemble, const std::filesystem::path& path);
Ensemble load_ensemble(const std::filesystem::path& path);

}  // namespace boostcraft
