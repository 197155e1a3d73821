#include "boostcraft/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <json.hpp>

#include "boostcraft/error.hpp"
#include "boostcraft/format.hpp"
#include "boostcraft/random.hpp"

namespace boostcraft {

std::optional<MethodSpec> parse_method(std::string_view name) {
  MethodSpec spec;
  spec.name = std::string(name);
  if (const auto id = parse_strategy(name)) {
    spec.kind = MethodKind::strategy;
    spec.strategy = *id;
    return spec;
  }
  if (const auto r = parse_resample_method(name)) {
    spec.kind = MethodKind::data_level;
    spec.resample = *r;
    return spec;
  }
  if (name == "rusboost") {
    spec.kind = MethodKind::rusboost;
    return spec;
  }
  if (name == "smoteboost") {
    spec.kind = MethodKind::smoteboost;
    return spec;
  }
  return std::nullopt;
}

std::vector<std::string> all_method_names() {
  std::vector<std::string> names;
  for (StrategyId id : kAllStrategies) names.emplace_back(to_string(id));
  for (const char* extra : {"ros", "rus", "smote", "smoteboost", "rusboost"}) names.emplace_back(extra);
  return names;
}

FittedModel fit_method(const MethodSpec& method, const Dataset& train_data, std::size_t rounds,
                       std::uint64_t seed, const FitOptions& options) {
  const TrainOptions quiet{.record_diagnostics = false};
  FittedModel out;
  switch (method.kind) {
    case MethodKind::strategy: {
      StrategyConfig config{method.strategy, rounds, std::nullopt, seed};
      if (uses_fixed_costs(method.strategy)) {
        GridSearchOptions grid = options.grid;
        grid.seed = seed;
        config.fixed_costs = grid_search_costs(method.strategy, train_data, rounds, grid).best;
        out.costs = config.fixed_costs;
      }
      out.ensemble = train(config, train_data, quiet).ensemble;
      break;
    }
    case MethodKind::data_level: {
      const Dataset balanced = resample(ResampleConfig{method.resample, options.smote_k, seed}, train_data);
      out.ensemble = train(StrategyConfig{StrategyId::adaboost, rounds, std::nullopt, seed}, balanced, quiet).ensemble;
      out.ensemble.strategy_id = method.name;
      break;
    }
    case MethodKind::rusboost:
      out.ensemble = train_rusboost(train_data, rounds, seed, quiet).ensemble;
      break;
    case MethodKind::smoteboost:
      out.ensemble = train_smoteboost(train_data, rounds, options.smote_k, seed, quiet).ensemble;
      break;
  }
  return out;
}

const Aggregate* EvalReport::find(std::size_t dataset, std::size_t method, std::size_t rounds_index,
                                  std::string_view metric) const {
  for (const auto& a : aggregates) {
    if (a.dataset == dataset && a.method == method && a.rounds_index == rounds_index && a.metric == metric) {
      return &a;
    }
  }
  return nullptr;
}

namespace {

std::vector<std::size_t> control_methods(const std::vector<std::string>& methods) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < methods.size(); ++j) {
    if (methods[j] == "adacc1" || methods[j] == "adacc2") out.push_back(j);
  }
  return out;
}

}  // namespace

EvalReport run_benchmark(const std::vector<BenchmarkDataset>& datasets, const BenchmarkConfig& config) {
  if (datasets.empty()) throw ConfigError("benchmark needs at least one dataset");
  if (config.methods.empty()) throw ConfigError("benchmark needs at least one method");
  if (config.rounds.empty()) throw ConfigError("benchmark needs at least one T value");
  for (std::size_t t : config.rounds) {
    if (t == 0) throw ConfigError("T values must be positive");
  }
  std::vector<MethodSpec> methods;
  for (const auto& name : config.methods) {
    auto spec = parse_method(name);
    if (!spec) throw ConfigError("unknown method '" + name + "'");
    methods.push_back(std::move(*spec));
  }

  EvalReport report;
  for (const auto& d : datasets) report.datasets.push_back(d.name);
  report.methods = config.methods;
  report.rounds = config.rounds;
  report.repeats = config.plan.repeats;
  report.folds = config.plan.folds;

  std::vector<FoldAssignment> assignments;
  for (const auto& d : datasets) assignments.push_back(stratified_folds(config.plan, d.data));

  const std::size_t nd = datasets.size(), nm = methods.size(), nt = config.rounds.size();
  const std::size_t nr = config.plan.repeats, nf = config.plan.folds;
  report.cells.resize(nd * nm * nt * nr * nf);
  for (std::size_t d = 0, k = 0; d < nd; ++d)
    for (std::size_t m = 0; m < nm; ++m)
      for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t r = 0; r < nr; ++r)
          for (std::size_t f = 0; f < nf; ++f, ++k) report.cells[k] = CellResult{d, m, t, r, f, {}, {}, {}};

  auto run_cell = [&](CellResult& cell) {
    const auto& data = datasets[cell.dataset].data;
    const std::uint64_t seed =
        Rng::derive(config.plan.seed, 1 + (cell.dataset * 4099 + cell.repeat) * 4099 + cell.fold);
    try {
      const auto [train_split, test_split] = split(data, assignments[cell.dataset], cell.repeat, cell.fold);
      FittedModel model = fit_method(methods[cell.method], train_split, config.rounds[cell.rounds_index], seed, config.fit);
      const auto preds = predict_labels(model.ensemble, test_split);
      const auto scores = decision_scores(model.ensemble, test_split);
      cell.metrics = evaluate(preds, scores, test_split.labels());
      cell.costs = model.costs;
    } catch (const Error& e) {
      cell.metrics.reset();
      cell.error = e.what();
    }
  };

  std::size_t jobs = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.jobs;
  jobs = std::min(jobs, report.cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < report.cells.size(); k = next++) run_cell(report.cells[k]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  // Aggregates, summed in fixed cell order.
  const std::size_t per_group = nr * nf;
  for (std::size_t g = 0; g < nd * nm * nt; ++g) {
    const CellResult& first = report.cells[g * per_group];
    for (std::string_view metric : kMetricNames) {
      std::vector<double> values;
      for (std::size_t k = 0; k < per_group; ++k) {
        const auto& cell = report.cells[g * per_group + k];
        if (!cell.metrics) continue;
        if (auto v = metric_value(*cell.metrics, metric)) values.push_back(*v);
      }
      if (values.empty()) continue;
      Aggregate a{first.dataset, first.method, first.rounds_index, std::string(metric), 0.0, 0.0, values.size()};
      for (double v : values) a.mean += v;
      a.mean /= static_cast<double>(values.size());
      if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
      }
      report.aggregates.push_back(std::move(a));
    }
  }

  // Rank tables: a method without any successful cell ranks last.
  const auto controls = control_methods(report.methods);
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::string_view metric : kMetricNames) {
      RankTable table{t, std::string(metric), {}};
      for (std::size_t d = 0; d < nd; ++d) {
        std::vector<double> means(nm, -std::numeric_limits<double>::infinity());
        for (std::size_t m = 0; m < nm; ++m) {
          if (const auto* a = report.find(d, m, t, metric)) means[m] = a->mean;
        }
        table.ranks.push_back(average_ranks(means, true));
      }
      if (nm >= 2 && nd >= 2) {
        report.significance.push_back(Significance{t, std::string(metric), friedman_test(table.ranks, controls)});
      }
      report.ranks.push_back(std::move(table));
    }
  }
  return report;
}

void write_report_csv(const EvalReport& report, std::ostream& out) {
  out << "dataset,method,T,repeat,fold,metric,value\n";
  for (const auto& cell : report.cells) {
    if (!cell.metrics) continue;
    const std::string prefix = csv_escape(report.datasets[cell.dataset]) + ',' +
                               csv_escape(report.methods[cell.method]) + ',' +
                               std::to_string(report.rounds[cell.rounds_index]) + ',' +
                               std::to_string(cell.repeat) + ',' + std::to_string(cell.fold) + ',';
    for (std::string_view metric : kMetricNames) {
      if (auto v = metric_value(*cell.metrics, metric)) {
        out << prefix << metric << ',' << format_double(*v) << '\n';
      }
    }
  }
}

namespace {

using nlohmann::ordered_json;

ordered_json friedman_json(const EvalReport& report, const Significance& s) {
  ordered_json j;
  j["T"] = report.rounds[s.rounds_index];
  j["metric"] = s.metric;
  j["statistic"] = s.result.statistic;
  j["p_value"] = s.result.p_value;
  j["mean_ranks"] = ordered_json::object();
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    j["mean_ranks"][report.methods[m]] = s.result.mean_ranks[m];
  }
  ordered_json pairs = ordered_json::array();
  for (const auto& c : s.result.pairwise) {
    pairs.push_back(ordered_json{{"control", report.methods[c.control]},
                                 {"other", report.methods[c.other]},
                                 {"z", c.z},
                                 {"p_value", c.p_value},
                                 {"p_bonferroni", c.p_bonferroni}});
  }
  j["pairwise"] = std::move(pairs);
  return j;
}

}  // namespace

void write_summary_json(const EvalReport& report, std::ostream& out) {
  ordered_json doc;
  doc["datasets"] = report.datasets;
  doc["methods"] = report.methods;
  doc["T"] = report.rounds;
  doc["repeats"] = report.repeats;
  doc["folds"] = report.folds;
  ordered_json aggs = ordered_json::array();
  for (const auto& a : report.aggregates) {
    aggs.push_back(ordered_json{{"dataset", report.datasets[a.dataset]},
                                {"method", report.methods[a.method]},
                                {"T", report.rounds[a.rounds_index]},
                                {"metric", a.metric},
                                {"mean", a.mean},
                                {"std", a.stddev},
                                {"count", a.count}});
  }
  doc["aggregates"] = std::move(aggs);
  ordered_json ranks = ordered_json::array();
  for (const auto& table : report.ranks) {
    ordered_json rows = ordered_json::object();
    for (std::size_t d = 0; d < report.datasets.size(); ++d) {
      ordered_json row = ordered_json::object();
      for (std::size_t m = 0; m < report.methods.size(); ++m) row[report.methods[m]] = table.ranks[d][m];
      rows[report.datasets[d]] = std::move(row);
    }
    ranks.push_back(ordered_json{{"T", report.rounds[table.rounds_index]}, {"metric", table.metric}, {"ranks", std::move(rows)}});
  }
  doc["ranks"] = std::move(ranks);
  ordered_json sig = ordered_json::array();
  for (const auto& s : report.significance) sig.push_back(friedman_json(report, s));
  doc["significance"] = std::move(sig);
  ordered_json failures = ordered_json::array();
  for (const auto& cell : report.cells) {
    if (cell.metrics) continue;
    failures.push_back(ordered_json{{"dataset", report.datasets[cell.dataset]},
                                    {"method", report.methods[cell.method]},
                                    {"T", report.rounds[cell.rounds_index]},
                                    {"repeat", cell.repeat},
                                    {"fold", cell.fold},
                                    {"error", cell.error}});
  }
  doc["failures"] = std::move(failures);
  out << doc.dump(2) << '\n';
}

void write_rank_table_csv(const EvalReport& report, std::ostream& out) {
  out << "T,metric,dataset";
  for (const auto& m : report.methods) out << ',' << csv_escape(m);
  out << '\n';
  for (const auto& table : report.ranks) {
    for (std::size_t d = 0; d < report.datasets.size(); ++d) {
      out << report.rounds[table.rounds_index] << ',' << table.metric << ',' << csv_escape(report.datasets[d]);
      for (double r : table.ranks[d]) out << ',' << format_double(r);
      out << '\n';
    }
  }
}

void write_significance_json(const EvalReport& report, std::ostream& out) {
  ordered_json sig = ordered_json::array();
  for (const auto& s : report.significance) sig.push_back(friedman_json(report, s));
  out << sig.dump(2) << '\n';
}

}  // namespace boostcraft
