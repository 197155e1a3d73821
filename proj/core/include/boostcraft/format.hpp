#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace boostcraft {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Quotes a CSV field when it contains the delimiter, a quote or a newline.
std::string csv_escape(std::string_view field, char delimiter = ',');

/// Writes one CSV record terminated by '\n'.
void write_csv_row(std::ostream& out, std::span<const std::string> fields, char delimiter = ',');

}  // namespace boostcraft
