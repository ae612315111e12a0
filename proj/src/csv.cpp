#include "geomwave/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace geomwave {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::push(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::logic_error("csv row has " + std::to_string(row.size()) +
                           " cells, header has " +
                           std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

namespace {

void write_line(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
  write_line(os, header_);
  for (const auto& row : rows_) write_line(os, row);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  if (text.empty()) throw std::invalid_argument("empty number list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? text.npos
                                                           : comma - start);
    double value = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("bad number '" + std::string(field) +
                                  "' in list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace geomwave
