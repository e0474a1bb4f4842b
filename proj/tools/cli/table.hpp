#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace geab::cli {

using Cell = std::variant<double, long long, std::string>;

/// Fixed-header table. CSV prints doubles with %.17g; JSON emits an array
/// of records keyed by the header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(const std::string& name);
std::string format_double(double v);
void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);
void write_table(const Table& table, Format format, std::ostream& os);

}  // namespace geab::cli
