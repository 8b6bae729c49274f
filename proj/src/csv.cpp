#include "ifcalc/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace ifcalc::csv {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

File read(std::istream& in) {
  File file;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    Row row{line_no, split_fields(line)};
    if (!have_header) {
      file.header = std::move(row);
      have_header = true;
    } else {
      file.rows.push_back(std::move(row));
    }
  }
  if (!have_header) {
    throw ParseError("missing header row", line_no == 0 ? 1 : line_no);
  }
  return file;
}

int find_column(const File& file, const std::string& name) {
  for (std::size_t i = 0; i < file.header.fields.size(); ++i) {
    if (file.header.fields[i] == name) return static_cast<int>(i);
  }
  return -1;
}

double parse_number(const std::string& text, std::size_t line) {
  if (text.empty()) throw ParseError("empty numeric field", line);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw ParseError("malformed number '" + text + "'", line);
  }
  return value;
}

std::string format_sig(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

}  // namespace ifcalc::csv
