#pragma once

#include <span>

#include "boostcraft/dataset.hpp"
#include "boostcraft/ensemble.hpp"

namespace boostcraft {

struct PlattOptions {
  int max_iterations = 100;
  double min_step = 1e-10;
  double hessian_ridge = 1e-12;
  double gradient_tolerance = 1e-5;
};

/// Fits P(y = +1 | s) = 1 / (1 + exp(a s + b)) by Newton's method with
/// backtracking line search on the smoothed targets (N+ + 1) / (N+ + 2) and
/// 1 / (N- + 2). Throws CalibrationFailed if the iteration cap is reached,
/// InvalidDataset if a class is missing.
PlattCalibrator fit_platt(std::span<const double> scores, std::span<const Label> labels,
                          const PlattOptions& options = {});

/// Fits the calibrator on the ensemble's raw scores over `data`.
PlattCalibrator platt_calibrate(const Ensemble& ensemble, const Dataset& data,
                                const PlattOptions& options = {});

}  // namespace boostcraft
