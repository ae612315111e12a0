#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace geomwave {

/// Round-trip exact text for a double: 17 significant digits, "inf",
/// "-inf" or "nan" for non-finite values. Negative zero prints as "0".
std::string format_number(double value);

/// Comma-delimited table with a header row and LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  template <typename... Cells>
  void add_row(const Cells&... cells) {
    std::vector<std::string> row;
    row.reserve(sizeof...(cells));
    (row.push_back(to_cell(cells)), ...);
    push(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& os) const;
  std::string str() const;

 private:
  template <typename T>
  static std::string to_cell(const T& value) {
    if constexpr (std::is_floating_point_v<T>) {
      return format_number(static_cast<double>(value));
    } else if constexpr (std::is_integral_v<T>) {
      return std::to_string(value);
    } else {
      return std::string(std::string_view(value));
    }
  }

  void push(std::vector<std::string> row);

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Parses "a,b,c" into doubles. Throws std::invalid_argument on empty
/// fields, spaces or trailing garbage.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace geomwave
