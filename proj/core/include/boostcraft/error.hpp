#pragma once

#include <stdexcept>
#include <string>

namespace boostcraft {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BOOSTCRAFT_DEFINE_ERROR(Name) \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

BOOSTCRAFT_DEFINE_ERROR(InvalidDataset);
BOOSTCRAFT_DEFINE_ERROR(InvalidWeights);
BOOSTCRAFT_DEFINE_ERROR(DimensionMismatch);
BOOSTCRAFT_DEFINE_ERROR(EmptyEnsemble);
BOOSTCRAFT_DEFINE_ERROR(ConfigError);
// Raised when the very first boosting round already fails its continuation test.
BOOSTCRAFT_DEFINE_ERROR(TrainingDegenerate);
BOOSTCRAFT_DEFINE_ERROR(CalibrationFailed);
BOOSTCRAFT_DEFINE_ERROR(MissingDiagnostics);
BOOSTCRAFT_DEFINE_ERROR(UndefinedMetric);
BOOSTCRAFT_DEFINE_ERROR(IngestError);
BOOSTCRAFT_DEFINE_ERROR(SerializationError);

#undef BOOSTCRAFT_DEFINE_ERROR

}  // namespace boostcraft
