#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boostcraft/benchmark.hpp"
#include "boostcraft/boosting.hpp"
#include "boostcraft/cross_validation.hpp"
#include "boostcraft/diagnostics.hpp"
#include "boostcraft/error.hpp"
#include "boostcraft/format.hpp"
#include "boostcraft/metrics.hpp"
#include "boostcraft/resample.hpp"
#include "boostcraft/serialization.hpp"
#include "ingest.hpp"

namespace boostcraft::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("BOOSTCRAFT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string_view text(env);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("BOOSTCRAFT_SEED must be an unsigned integer, got '" + std::string(text) + "'");
  }
  return seed;
}

namespace {

struct DataOptions {
  std::string path;
  std::string label;
  std::optional<std::string> positive;
  std::string delimiter = ",";
  bool no_header = false;
};

void add_data_options(CLI::App* cmd, DataOptions& o) {
  cmd->add_option("--data", o.path, "Input CSV file")->required();
  cmd->add_option("--label", o.label, "Label column name or index (default: last column)");
  cmd->add_option("--positive", o.positive, "Raw label value of the positive class (default: rarer value)");
  cmd->add_option("--delimiter", o.delimiter, "Field delimiter; 'tab' for tabs");
  cmd->add_flag("--no-header", o.no_header, "The file has no header row");
}

char parse_delimiter(const std::string& text) {
  if (text == "tab" || text == "\\t") return '\t';
  if (text.size() != 1) throw ConfigError("delimiter must be a single character");
  return text.front();
}

IngestSpec make_spec(const std::string& path, const std::string& label,
                     const std::optional<std::string>& positive, const std::string& delimiter,
                     bool no_header) {
  IngestSpec spec;
  spec.path = path;
  if (!label.empty()) spec.label_column = label;
  spec.positive_label = positive;
  spec.delimiter = parse_delimiter(delimiter);
  spec.has_header = !no_header;
  return spec;
}

Dataset load(const DataOptions& o) {
  return ingest_csv(make_spec(o.path, o.label, o.positive, o.delimiter, o.no_header));
}

StrategyId require_strategy(const std::string& name) {
  const auto id = parse_strategy(name);
  if (!id) throw ConfigError("unknown strategy '" + name + "'");
  return *id;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json metrics_json(const MetricSuite& s) {
  return ordered_json{{"tpr", s.tpr},
                      {"tnr", s.tnr},
                      {"balanced_accuracy", s.balanced_accuracy},
                      {"f1", s.f1},
                      {"gmean", s.gmean},
                      {"auc", optional_number(s.auc)},
                      {"opm", optional_number(s.opm)}};
}

ordered_json grid_json(StrategyId strategy, const GridSearchResult& r) {
  ordered_json grid = ordered_json::array();
  for (const auto& p : r.grid) {
    grid.push_back(ordered_json{{"cost_pos", p.costs.positive},
                                {"cost_neg", p.costs.negative},
                                {"f1", std::isnan(p.f1) ? ordered_json(nullptr) : ordered_json(p.f1)}});
  }
  return ordered_json{{"strategy", std::string(to_string(strategy))},
                      {"best", {{"cost_pos", r.best.positive}, {"cost_neg", r.best.negative}}},
                      {"best_f1", r.best_f1},
                      {"grid", std::move(grid)}};
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string strategy;
  std::size_t rounds = 100;
  DataOptions data;
  std::optional<double> cost_pos;
  std::optional<double> cost_neg;
  bool grid_search = false;
  bool validation_split = false;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string diagnostics;
};

int cmd_train(const TrainArgs& a, std::ostream& out) {
  const StrategyId strategy = require_strategy(a.strategy);
  const Dataset data = load(a.data);
  const std::uint64_t seed = resolve_seed(a.seed);

  StrategyConfig config{strategy, a.rounds, std::nullopt, seed};
  const bool costs_given = a.cost_pos || a.cost_neg;
  if (uses_fixed_costs(strategy)) {
    if (costs_given && a.grid_search) throw ConfigError("pass either --cost-neg or --grid-search, not both");
    if (a.grid_search) {
      const auto result = grid_search_costs(strategy, data, a.rounds, GridSearchOptions{a.validation_split, seed});
      config.fixed_costs = result.best;
      out << "grid search: C+ = " << format_double(result.best.positive)
          << ", C- = " << format_double(result.best.negative) << ", F1 = " << format_double(result.best_f1) << '\n';
    } else if (a.cost_neg) {
      config.fixed_costs = FixedCosts{a.cost_pos.value_or(1.0), *a.cost_neg};
    } else {
      throw ConfigError(std::string(to_string(strategy)) + " needs --cost-neg or --grid-search");
    }
  } else if (costs_given || a.grid_search) {
    throw ConfigError(std::string(to_string(strategy)) + " is parameter-free and takes no costs");
  }

  const TrainingResult result = train(config, data);
  const fs::path model_path = a.out;
  if (model_path.has_parent_path()) fs::create_directories(model_path.parent_path());
  save_ensemble(result.ensemble, model_path);
  fs::path log_path = a.diagnostics;
  if (log_path.empty()) log_path = fs::path(model_path).replace_extension(".diagnostics.csv");
  {
    auto log = open_output(log_path);
    write_training_log_csv(result.log, log);
  }
  const char* reason = result.stop == StopReason::completed         ? "completed"
                       : result.stop == StopReason::perfect_learner ? "perfect weak learner"
                                                                    : "continuation condition failed";
  out << to_string(strategy) << ": " << result.ensemble.size() << " members (" << reason << ")\n";
  out << "model: " << model_path.string() << "\ndiagnostics: " << log_path.string() << '\n';
  return 0;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string model;
  DataOptions data;
  std::string out;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Ensemble ensemble = load_ensemble(a.model);
  const Dataset data = load(a.data);
  if (ensemble.feature_count != 0 && ensemble.feature_count != data.feature_count()) {
    throw DimensionMismatch("model expects " + std::to_string(ensemble.feature_count) + " features, dataset has " +
                            std::to_string(data.feature_count()));
  }
  const auto preds = predict_labels(ensemble, data);
  const auto scores = decision_scores(ensemble, data);
  const std::string text = metrics_json(evaluate(preds, scores, data.labels())).dump(2) + "\n";
  out << text;
  if (!a.out.empty()) open_output(a.out) << text;
  return 0;
}

// ---------------------------------------------------------------- benchmark

struct BenchmarkArgs {
  std::vector<std::string> data;
  std::vector<std::string> labels;
  std::vector<std::string> positives;
  std::string delimiter = ",";
  bool no_header = false;
  std::vector<std::string> methods{"all"};
  std::vector<std::size_t> rounds{25, 50, 100, 200};
  std::size_t repeats = 10;
  std::size_t folds = 5;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 0;
  std::size_t smote_k = 5;
  bool validation_split = false;
  std::string out_dir = ".";
};

const std::string& pick(const std::vector<std::string>& values, std::size_t i, const char* flag) {
  if (values.size() == 1) return values.front();
  if (i < values.size()) return values[i];
  throw ConfigError(std::string("give ") + flag + " once or once per --data");
}

int cmd_benchmark(const BenchmarkArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<BenchmarkDataset> datasets;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const std::string label = a.labels.empty() ? std::string() : pick(a.labels, i, "--label");
    std::optional<std::string> positive;
    if (!a.positives.empty()) positive = pick(a.positives, i, "--positive");
    datasets.push_back(BenchmarkDataset{fs::path(a.data[i]).stem().string(),
                                        ingest_csv(make_spec(a.data[i], label, positive, a.delimiter, a.no_header))});
  }

  BenchmarkConfig config;
  for (const auto& m : a.methods) {
    if (m == "all") {
      for (auto& name : all_method_names()) config.methods.push_back(name);
    } else {
      config.methods.push_back(m);
    }
  }
  config.rounds = a.rounds;
  config.plan = CVPlan{a.repeats, a.folds, resolve_seed(a.seed)};
  config.jobs = a.jobs;
  config.fit.smote_k = a.smote_k;
  config.fit.grid.validation_split = a.validation_split;

  const EvalReport report = run_benchmark(datasets, config);

  const fs::path dir = a.out_dir;
  { auto f = open_output(dir / "report.csv"); write_report_csv(report, f); }
  { auto f = open_output(dir / "summary.json"); write_summary_json(report, f); }
  { auto f = open_output(dir / "ranks.csv"); write_rank_table_csv(report, f); }
  if (!report.significance.empty()) {
    auto f = open_output(dir / "friedman.json");
    write_significance_json(report, f);
  }

  std::size_t failed = 0;
  for (const auto& cell : report.cells) {
    if (cell.metrics) continue;
    ++failed;
    err << "cell failed: " << report.datasets[cell.dataset] << ' ' << report.methods[cell.method]
        << " T=" << report.rounds[cell.rounds_index] << " repeat " << cell.repeat << " fold " << cell.fold << ": "
        << cell.error << '\n';
  }
  out << report.cells.size() - failed << " of " << report.cells.size() << " cells completed; reports in "
      << dir.string() << '\n';
  return failed == report.cells.size() ? 1 : 0;
}

// ---------------------------------------------------------------- grid-search

struct GridArgs {
  std::string strategy;
  std::size_t rounds = 100;
  DataOptions data;
  bool validation_split = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_grid_search(const GridArgs& a, std::ostream& out) {
  const StrategyId strategy = require_strategy(a.strategy);
  const Dataset data = load(a.data);
  const auto result =
      grid_search_costs(strategy, data, a.rounds, GridSearchOptions{a.validation_split, resolve_seed(a.seed)});
  const std::string text = grid_json(strategy, result).dump(2) + "\n";
  out << text;
  if (!a.out.empty()) open_output(a.out) << text;
  return 0;
}

// ---------------------------------------------------------------- resample

struct ResampleArgs {
  std::string method;
  std::size_t k = 5;
  DataOptions data;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_resample(const ResampleArgs& a, std::ostream& out) {
  const auto method = parse_resample_method(a.method);
  if (!method) throw ConfigError("unknown resampling method '" + a.method + "'");
  const Dataset data = load(a.data);
  const Dataset balanced = resample(ResampleConfig{*method, a.k, resolve_seed(a.seed)}, data);
  auto f = open_output(a.out);
  write_canonical_csv(balanced, f);
  out << to_string(*method) << ": " << data.minority_count() << '/' << data.majority_count() << " -> "
      << balanced.minority_count() << '/' << balanced.majority_count() << " (positive/negative)\n";
  return 0;
}

// ---------------------------------------------------------------- diagnostics

struct DiagnosticsArgs {
  std::string model;
  DataOptions data;
  std::vector<std::string> logs;
  std::string out_dir = ".";
};

int cmd_diagnostics(const DiagnosticsArgs& a, std::ostream& out) {
  const fs::path dir = a.out_dir;
  bool wrote = false;
  if (!a.model.empty() || !a.data.path.empty()) {
    if (a.model.empty() || a.data.path.empty()) throw ConfigError("--model and --data go together");
    const Ensemble ensemble = load_ensemble(a.model);
    const Dataset data = load(a.data);
    const auto importance = feature_importance(ensemble);
    {
      auto f = open_output(dir / "importance.csv");
      f << "feature,importance\n";
      for (std::size_t j = 0; j < importance.size(); ++j) {
        const std::string name = j < data.feature_names().size() ? data.feature_names()[j] : "f" + std::to_string(j);
        f << csv_escape(name) << ',' << format_double(importance[j]) << '\n';
      }
    }
    {
      auto f = open_output(dir / "confidence.csv");
      write_confidence_csv(confidence_distribution(ensemble, data), f);
    }
    out << "wrote importance.csv and confidence.csv to " << dir.string() << '\n';
    wrote = true;
  }
  if (!a.logs.empty()) {
    std::vector<TrainingLog> logs;
    for (const auto& path : a.logs) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw ConfigError("cannot open '" + path + "'");
      logs.push_back(read_training_log_csv(in));
    }
    auto f = open_output(dir / "curves.csv");
    write_curves_csv(diagnostics_curves(logs), f);
    out << "wrote curves.csv (" << logs.size() << " logs) to " << dir.string() << '\n';
    wrote = true;
  }
  if (!wrote) throw ConfigError("nothing to do: give --model with --data, or --log");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost-sensitive boosting toolkit", "boostcraft"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "boostcraft 0.3.0");

  auto strategy_help = [] {
    std::string s = "Boosting strategy:";
    for (StrategyId id : kAllStrategies) s += std::string(" ") + std::string(to_string(id));
    return s;
  };

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "Train an ensemble and write the model and its training log");
  train_cmd->add_option("--strategy", train_args.strategy, strategy_help())->required();
  train_cmd->add_option("--t", train_args.rounds, "Boosting rounds")->check(CLI::PositiveNumber);
  add_data_options(train_cmd, train_args.data);
  train_cmd->add_option("--cost-pos", train_args.cost_pos, "Positive-class cost C+ (default 1)");
  train_cmd->add_option("--cost-neg", train_args.cost_neg, "Negative-class cost C-");
  train_cmd->add_flag("--grid-search", train_args.grid_search, "Pick C- from {0.1, ..., 1.0} by training F1");
  train_cmd->add_flag("--validation-split", train_args.validation_split, "Score the grid on an 80/20 hold-out");
  train_cmd->add_option("--seed", train_args.seed, "Seed (default: $BOOSTCRAFT_SEED, else 0)");
  train_cmd->add_option("--out", train_args.out, "Model JSON path")->required();
  train_cmd->add_option("--diagnostics", train_args.diagnostics, "Training log CSV (default: <out>.diagnostics.csv)");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Score a saved model on a dataset");
  eval_cmd->add_option("--model", eval_args.model, "Model JSON path")->required();
  add_data_options(eval_cmd, eval_args.data);
  eval_cmd->add_option("--out", eval_args.out, "Also write the metrics JSON here");

  BenchmarkArgs bench_args;
  auto* bench_cmd = app.add_subcommand("benchmark", "Repeated stratified cross-validation over methods and datasets");
  bench_cmd->add_option("--data", bench_args.data, "Input CSV files")->required();
  bench_cmd->add_option("--label", bench_args.labels, "Label column, once or per dataset");
  bench_cmd->add_option("--positive", bench_args.positives, "Positive label, once or per dataset");
  bench_cmd->add_option("--delimiter", bench_args.delimiter, "Field delimiter; 'tab' for tabs");
  bench_cmd->add_flag("--no-header", bench_args.no_header, "The files have no header row");
  bench_cmd->add_option("--methods", bench_args.methods, "Methods, or 'all'")->delimiter(',');
  bench_cmd->add_option("--t", bench_args.rounds, "Boosting rounds to evaluate")->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeats", bench_args.repeats, "Cross-validation repeats")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--folds", bench_args.folds, "Folds per repeat")->check(CLI::Range(2, 1000));
  bench_cmd->add_option("--seed", bench_args.seed, "Seed (default: $BOOSTCRAFT_SEED, else 0)");
  bench_cmd->add_option("--jobs", bench_args.jobs, "Worker threads (0: one per processor)");
  bench_cmd->add_option("--smote-k", bench_args.smote_k, "SMOTE neighbours")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--validation-split", bench_args.validation_split, "Score cost grids on a hold-out");
  bench_cmd->add_option("--out-dir", bench_args.out_dir, "Output directory");

  GridArgs grid_args;
  auto* grid_cmd = app.add_subcommand("grid-search", "Select the fixed cost pair with the best F1");
  grid_cmd->add_option("--strategy", grid_args.strategy, strategy_help())->required();
  grid_cmd->add_option("--t", grid_args.rounds, "Boosting rounds")->check(CLI::PositiveNumber);
  add_data_options(grid_cmd, grid_args.data);
  grid_cmd->add_flag("--validation-split", grid_args.validation_split, "Score on an 80/20 hold-out");
  grid_cmd->add_option("--seed", grid_args.seed, "Seed (default: $BOOSTCRAFT_SEED, else 0)");
  grid_cmd->add_option("--out", grid_args.out, "Also write the JSON result here");

  ResampleArgs resample_args;
  auto* resample_cmd = app.add_subcommand("resample", "Balance a dataset with ros, rus or smote");
  resample_cmd->add_option("--method", resample_args.method, "ros, rus or smote")->required();
  resample_cmd->add_option("--k", resample_args.k, "SMOTE neighbours")->check(CLI::PositiveNumber);
  add_data_options(resample_cmd, resample_args.data);
  resample_cmd->add_option("--seed", resample_args.seed, "Seed (default: $BOOSTCRAFT_SEED, else 0)");
  resample_cmd->add_option("--out", resample_args.out, "Output CSV path")->required();

  DiagnosticsArgs diag_args;
  auto* diag_cmd = app.add_subcommand("diagnostics", "Feature importance, confidence scores and training curves");
  diag_cmd->add_option("--model", diag_args.model, "Model JSON path");
  diag_cmd->add_option("--data", diag_args.data.path, "Dataset for confidence scores");
  diag_cmd->add_option("--label", diag_args.data.label, "Label column name or index");
  diag_cmd->add_option("--positive", diag_args.data.positive, "Positive label");
  diag_cmd->add_option("--delimiter", diag_args.data.delimiter, "Field delimiter");
  diag_cmd->add_flag("--no-header", diag_args.data.no_header, "The file has no header row");
  diag_cmd->add_option("--log", diag_args.logs, "Training log CSVs to average into curves.csv");
  diag_cmd->add_option("--out-dir", diag_args.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version report success; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*train_cmd) return cmd_train(train_args, out);
    if (*eval_cmd) return cmd_eval(eval_args, out);
    if (*bench_cmd) return cmd_benchmark(bench_args, out, err);
    if (*grid_cmd) return cmd_grid_search(grid_args, out);
    if (*resample_cmd) return cmd_resample(resample_args, out);
    if (*diag_cmd) return cmd_diagnostics(diag_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace boostcraft::cli
