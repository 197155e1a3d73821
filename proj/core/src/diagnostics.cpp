#include "boostcraft/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>

#include "boostcraft/error.hpp"
#include "boostcraft/format.hpp"

namespace boostcraft {

void write_training_log_csv(const TrainingLog& log, std::ostream& out) {
  out << "round,alpha,Z,minority_weight_mass,cum_fnr,cum_fpr,balanced_error\n";
  out << "0,0,1," << format_double(log.initial_minority_mass) << ",1,0,0.5\n";
  for (const auto& r : log.rounds) {
    out << r.round << ',' << format_double(r.alpha) << ',' << format_double(r.normalizer) << ','
        << format_double(r.minority_weight_mass) << ',' << format_double(r.cum_fnr) << ','
        << format_double(r.cum_fpr) << ',' << format_double(r.balanced_error) << '\n';
  }
}

namespace {

double parse_field(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw MissingDiagnostics("malformed value '" + std::string(text) + "' on line " + std::to_string(line));
  }
  return v;
}

}  // namespace

TrainingLog read_training_log_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("round,alpha,Z,", 0) != 0) {
    throw MissingDiagnostics("not a training log: missing header");
  }
  TrainingLog log;
  bool seen_initial = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, 7> v{};
    std::size_t k = 0, start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      if (k == v.size()) throw MissingDiagnostics("too many fields on line " + std::to_string(line_no));
      v[k++] = parse_field(std::string_view(line).substr(start, comma - start), line_no);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (k != v.size()) throw MissingDiagnostics("too few fields on line " + std::to_string(line_no));
    if (!seen_initial) {
      if (v[0] != 0.0) throw MissingDiagnostics("training log does not start at round 0");
      log.initial_minority_mass = v[3];
      seen_initial = true;
      continue;
    }
    log.rounds.push_back(RoundRecord{static_cast<std::size_t>(v[0]), v[1], v[2], v[3], v[4], v[5], v[6]});
  }
  if (!seen_initial) throw MissingDiagnostics("training log has no rows");
  return log;
}

std::vector<CurvePoint> diagnostics_curves(std::span<const TrainingLog> logs) {
  std::size_t longest = 0;
  for (const auto& log : logs) longest = std::max(longest, log.rounds.size());
  if (longest == 0) throw MissingDiagnostics("no recorded training rounds");

  std::vector<CurvePoint> curves(longest + 1);
  for (std::size_t t = 0; t <= longest; ++t) curves[t].round = t;
  for (const auto& log : logs) {
    auto& start = curves[0];
    start.minority_weight_mass += log.initial_minority_mass;
    start.balanced_error += 0.5;
    start.runs += 1;
    for (const auto& r : log.rounds) {
      auto& p = curves[r.round];
      p.minority_weight_mass += r.minority_weight_mass;
      p.alpha += r.alpha;
      p.balanced_error += r.balanced_error;
      p.runs += 1;
    }
  }
  for (auto& p : curves) {
    if (p.runs == 0) continue;
    const double k = static_cast<double>(p.runs);
    p.minority_weight_mass /= k;
    p.alpha /= k;
    p.balanced_error /= k;
  }
  return curves;
}

void write_curves_csv(std::span<const CurvePoint> curves, std::ostream& out) {
  out << "round,minority_weight_mass,alpha,balanced_error,runs\n";
  for (const auto& p : curves) {
    out << p.round << ',' << format_double(p.minority_weight_mass) << ',' << format_double(p.alpha)
        << ',' << format_double(p.balanced_error) << ',' << p.runs << '\n';
  }
}

std::vector<double> feature_importance(const Ensemble& ensemble) {
  if (ensemble.empty()) throw EmptyEnsemble("ensemble has no members");
  std::size_t width = ensemble.feature_count;
  for (const auto& m : ensemble.members) width = std::max(width, m.stump.feature_index + 1);
  std::vector<double> importance(width, 0.0);
  double total = 0.0;
  for (const auto& m : ensemble.members) {
    const double a = m.alpha_negative ? 0.5 * (m.alpha + *m.alpha_negative) : m.alpha;
    importance[m.stump.feature_index] += a;
    total += a;
  }
  for (double& v : importance) v /= total;
  return importance;
}

ConfidenceSamples confidence_distribution(const Ensemble& ensemble, const Dataset& data) {
  ConfidenceSamples out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto x = data.row(i);
    const double score = raw_score(ensemble, x);
    double mass = 0.0;
    for (const auto& m : ensemble.members) mass += m.voting_weight(x);
    const double c = static_cast<double>(data.label(i)) * score / mass;
    (data.label(i) == kPositive ? out.positive : out.negative).push_back(c);
  }
  return out;
}

void write_confidence_csv(const ConfidenceSamples& samples, std::ostream& out) {
  out << "class,confidence\n";
  auto emit = [&](std::vector<double> values, const char* cls) {
    std::sort(values.begin(), values.end());
    for (double v : values) out << cls << ',' << format_double(v) << '\n';
  };
  emit(samples.positive, "1");
  emit(samples.negative, "-1");
}

}  // namespace boostcraft
