#include "ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string_view>

#include "boostcraft/error.hpp"
#include "boostcraft/format.hpp"

namespace boostcraft::cli {

std::vector<std::vector<std::string>> parse_csv(std::istream& in, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;      // inside a quoted section
  bool field_started = false;
  bool any_content = false;  // record has at least one character or delimiter
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    if (any_content) {
      end_field();
      records.push_back(std::move(record));
    }
    record.clear();
    field.clear();
    field_started = false;
    any_content = false;
  };

  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
      any_content = true;
    } else if (c == delimiter) {
      any_content = true;
      end_field();
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get(c);
      ++line;
      end_record();
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      field += c;
      field_started = true;
      any_content = true;
    }
  }
  if (quoted) throw IngestError("unterminated quoted field before line " + std::to_string(line));
  end_record();
  return records;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool is_missing(std::string_view s) {
  return s.empty() || s == "?" || s == "NA" || s == "N/A" || s == "nan" || s == "NaN" || s == "null";
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string describe_column(const std::vector<std::string>& names, std::size_t j) {
  return "column " + std::to_string(j + 1) + " ('" + names[j] + "')";
}

}  // namespace

Dataset ingest_csv(const IngestSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw IngestError("cannot open '" + spec.path.string() + "'");
  return ingest_csv(in, spec);
}

Dataset ingest_csv(std::istream& in, const IngestSpec& spec) {
  auto records = parse_csv(in, spec.delimiter);
  std::vector<std::string> names;
  if (spec.has_header) {
    if (records.empty()) throw IngestError("file has no header");
    names = std::move(records.front());
    records.erase(records.begin());
    for (auto& n : names) n = std::string(trim(n));
  } else if (!records.empty()) {
    for (std::size_t j = 0; j < records.front().size(); ++j) names.push_back("c" + std::to_string(j));
  }
  if (records.empty()) throw IngestError("file has no data rows");
  const std::size_t width = names.size();
  if (width < 2) throw IngestError("need at least one feature column and a label column");
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw IngestError("row " + std::to_string(r + 1) + " has " + std::to_string(records[r].size()) +
                        " fields, expected " + std::to_string(width));
    }
  }

  std::size_t label_col = width - 1;
  if (const auto* name = std::get_if<std::string>(&spec.label_column)) {
    const auto it = std::find(names.begin(), names.end(), *name);
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(name->data(), name->data() + name->size(), index);
    if (it != names.end()) {
      label_col = static_cast<std::size_t>(it - names.begin());
    } else if (!name->empty() && ec == std::errc{} && ptr == name->data() + name->size() && index < width) {
      label_col = index;
    } else {
      throw IngestError("label column '" + *name + "' not found");
    }
  } else if (const auto* index = std::get_if<std::size_t>(&spec.label_column)) {
    if (*index >= width) throw IngestError("label column index " + std::to_string(*index) + " out of range");
    label_col = *index;
  }

  const std::size_t n = records.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < width; ++j) {
      if (is_missing(trim(records[r][j]))) {
        throw IngestError("missing value at row " + std::to_string(r + 1) + ", " + describe_column(names, j));
      }
    }
  }

  // Labels.
  std::vector<std::string> label_values;
  std::map<std::string, std::size_t, std::less<>> label_counts;
  for (const auto& rec : records) {
    const std::string value(trim(rec[label_col]));
    if (label_counts[value]++ == 0) label_values.push_back(value);
  }
  if (label_values.size() != 2) {
    throw IngestError("label column '" + names[label_col] + "' has " + std::to_string(label_values.size()) +
                      " distinct values, expected 2");
  }
  std::string positive;
  if (spec.positive_label) {
    positive = std::string(trim(*spec.positive_label));
    if (!label_counts.contains(positive)) {
      throw IngestError("positive label '" + positive + "' does not occur in column '" + names[label_col] + "'");
    }
  } else {
    const std::size_t a = label_counts[label_values[0]], b = label_counts[label_values[1]];
    if (a == b) throw IngestError("classes are equally frequent; pass the positive label explicitly");
    positive = a < b ? label_values[0] : label_values[1];
  }
  std::vector<Label> labels(n);
  for (std::size_t r = 0; r < n; ++r) {
    labels[r] = trim(records[r][label_col]) == positive ? kPositive : kNegative;
  }

  // Feature columns: numeric pass-through or one-hot expansion.
  struct Column {
    bool categorical = false;
    std::vector<double> numbers;
    std::vector<std::string> levels;
    std::vector<std::size_t> level_of;
  };
  std::vector<std::size_t> feature_cols;
  std::vector<Column> columns;
  std::size_t expanded_width = 0;
  for (std::size_t j = 0; j < width; ++j) {
    if (j == label_col) continue;
    Column col;
    std::size_t numeric = 0;
    std::optional<std::size_t> first_bad;
    col.numbers.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (auto v = parse_number(trim(records[r][j]))) {
        col.numbers[r] = *v;
        ++numeric;
      } else if (!first_bad) {
        first_bad = r;
      }
    }
    if (first_bad && 2 * numeric > n) {
      throw IngestError("non-numeric value '" + std::string(trim(records[*first_bad][j])) + "' at row " +
                        std::to_string(*first_bad + 1) + " of numeric " + describe_column(names, j));
    }
    if (first_bad) {
      col.categorical = true;
      col.numbers.clear();
      std::map<std::string, std::size_t, std::less<>> index;
      for (std::size_t r = 0; r < n; ++r) {
        const std::string value(trim(records[r][j]));
        auto [it, inserted] = index.try_emplace(value, col.levels.size());
        if (inserted) col.levels.push_back(value);
        col.level_of.push_back(it->second);
      }
      expanded_width += col.levels.size();
    } else {
      expanded_width += 1;
    }
    feature_cols.push_back(j);
    columns.push_back(std::move(col));
  }

  std::vector<std::string> feature_names;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const std::string& base = names[feature_cols[c]];
    if (columns[c].categorical) {
      for (const auto& level : columns[c].levels) feature_names.push_back(base + "=" + level);
    } else {
      feature_names.push_back(base);
    }
  }
  std::vector<double> features(n * expanded_width, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double* row = features.data() + r * expanded_width;
    std::size_t offset = 0;
    for (const auto& col : columns) {
      if (col.categorical) {
        row[offset + col.level_of[r]] = 1.0;
        offset += col.levels.size();
      } else {
        row[offset++] = col.numbers[r];
      }
    }
  }
  try {
    return Dataset(std::move(features), expanded_width, std::move(labels), std::move(feature_names));
  } catch (const InvalidDataset& e) {
    throw IngestError(e.what());
  }
}

void write_canonical_csv(const Dataset& data, std::ostream& out) {
  std::vector<std::string> fields(data.feature_names().begin(), data.feature_names().end());
  fields.emplace_back("label");
  write_csv_row(out, fields);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < data.feature_count(); ++j) fields[j] = format_double(data.value(i, j));
    fields.back() = data.label(i) == kPositive ? "1" : "-1";
    write_csv_row(out, fields);
  }
}

}  // namespace boostcraft::cli
