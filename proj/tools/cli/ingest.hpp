#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "boostcraft/dataset.hpp"

namespace boostcraft::cli {

/// Splits RFC-4180 text into records. Quoted fields may contain the
/// delimiter, doubled quotes and line breaks; CRLF and LF both end a record.
/// Blank lines are skipped. Throws IngestError on an unterminated quote.
std::vector<std::vector<std::string>> parse_csv(std::istream& in, char delimiter = ',');

struct IngestSpec {
  std::filesystem::path path;
  /// Column name or zero-based index; a name that matches no header entry
  /// but reads as an integer is taken as an index. Defaults to the last column.
  std::variant<std::monostate, std::string, std::size_t> label_column;
  /// Raw label mapped to +1. Defaults to the rarer of the two values.
  std::optional<std::string> positive_label;
  char delimiter = ',';
  bool has_header = true;
};

/// Reads a CSV into a Dataset. Numeric columns pass through; columns whose
/// values are mostly non-numeric become one indicator per distinct value
/// (first-appearance order) named "column=value". Throws IngestError on
/// missing values, stray text in a numeric column, ragged rows or a label
/// column without exactly two distinct values.
Dataset ingest_csv(const IngestSpec& spec);
Dataset ingest_csv(std::istream& in, const IngestSpec& spec);

/// Canonical numeric form: feature columns, then "label" holding 1 / -1.
/// Ingesting it with the last column as label and positive "1" gives back
/// the same Dataset.
void write_canonical_csv(const Dataset& data, std::ostream& out);

}  // namespace boostcraft::cli
