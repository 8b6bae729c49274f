#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ifcalc/errors.hpp"

namespace ifcalc::csv {

/// One data row: trimmed fields plus the 1-based source line number.
struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// A parsed file: header row plus data rows. '#'-prefixed and blank lines are
/// skipped; the first remaining line is the header.
struct File {
  Row header;
  std::vector<Row> rows;
};

File read(std::istream& in);

/// Index of the named header column, or -1 if absent. Matching is exact after
/// whitespace trimming.
int find_column(const File& file, const std::string& name);

/// Parses a decimal number; throws ParseError with the line number otherwise.
double parse_number(const std::string& text, std::size_t line);

/// Formats a value with 12 significant digits; round-trips through
/// parse_number to the identical text.
std::string format_sig(double value);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace ifcalc::csv
