#include "boostcraft/calibration.hpp"

#include <cmath>
#include <vector>

#include "boostcraft/error.hpp"

namespace boostcraft {

namespace {

// Negative log-likelihood term for target t at z = a s + b, overflow-safe.
double nll_term(double t, double z) {
  return z >= 0.0 ? t * z + std::log1p(std::exp(-z)) : (t - 1.0) * z + std::log1p(std::exp(z));
}

}  // namespace

PlattCalibrator fit_platt(std::span<const double> scores, std::span<const Label> labels,
                          const PlattOptions& options) {
  if (scores.size() != labels.size()) throw DimensionMismatch("score/label length mismatch");
  double n_pos = 0.0;
  double n_neg = 0.0;
  for (Label y : labels) (y == kPositive ? n_pos : n_neg) += 1.0;
  if (n_pos == 0.0 || n_neg == 0.0) throw InvalidDataset("calibration needs both classes");

  const double hi = (n_pos + 1.0) / (n_pos + 2.0);
  const double lo = 1.0 / (n_neg + 2.0);
  std::vector<double> target(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) target[i] = labels[i] == kPositive ? hi : lo;

  double a = 0.0;
  double b = std::log((n_neg + 1.0) / (n_pos + 1.0));
  double fval = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) fval += nll_term(target[i], scores[i] * a + b);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double h11 = options.hessian_ridge;
    double h22 = options.hessian_ridge;
    double h21 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      const double z = scores[i] * a + b;
      double p, q;  // p = P(+1), q = 1 - p
      if (z >= 0.0) {
        const double e = std::exp(-z);
        p = e / (1.0 + e);
        q = 1.0 / (1.0 + e);
      } else {
        const double e = std::exp(z);
        p = 1.0 / (1.0 + e);
        q = e / (1.0 + e);
      }
      const double d2 = p * q;
      h11 += scores[i] * scores[i] * d2;
      h22 += d2;
      h21 += scores[i] * d2;
      const double d1 = target[i] - p;
      g1 += scores[i] * d1;
      g2 += d1;
    }
    if (std::abs(g1) < options.gradient_tolerance && std::abs(g2) < options.gradient_tolerance) {
      return PlattCalibrator{a, b};
    }

    const double det = h11 * h22 - h21 * h21;
    const double da = -(h22 * g1 - h21 * g2) / det;
    const double db = -(-h21 * g1 + h11 * g2) / det;
    const double gd = g1 * da + g2 * db;

    double step = 1.0;
    while (step >= options.min_step) {
      const double na = a + step * da;
      const double nb = b + step * db;
      double nf = 0.0;
      for (std::size_t i = 0; i < scores.size(); ++i) nf += nll_term(target[i], scores[i] * na + nb);
      if (nf < fval + 1e-4 * step * gd) {
        a = na;
        b = nb;
        fval = nf;
        break;
      }
      step /= 2.0;
    }
    // No descent direction left: the current point is as good as it gets.
    if (step < options.min_step) return PlattCalibrator{a, b};
  }
  throw CalibrationFailed("Platt scaling did not converge in " +
                          std::to_string(options.max_iterations) + " iterations");
}

PlattCalibrator platt_calibrate(const Ensemble& ensemble, const Dataset& data,
                                const PlattOptions& options) {
  std::vector<double> scores(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) scores[i] = raw_score(ensemble, data.row(i));
  return fit_platt(scores, data.labels(), options);
}

}  // namespace boostcraft
