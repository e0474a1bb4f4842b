#include "cli/table.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "geab/errors.hpp"

namespace geab::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != header.size()) throw InvalidArgument("table row width does not match header");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InvalidArgument("unknown format '" + name + "' (expected csv or json)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

void write_json(const Table& table, std::ostream& os) {
  // ordered_json keeps the CSV column order
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& key = table.header[i];
      if (const double* d = std::get_if<double>(&row[i])) {
        if (std::isfinite(*d))
          rec[key] = *d;
        else
          rec[key] = format_double(*d);
      } else if (const long long* n = std::get_if<long long>(&row[i])) {
        rec[key] = *n;
      } else {
        rec[key] = std::get<std::string>(row[i]);
      }
    }
    arr.push_back(std::move(rec));
  }
  os << arr.dump(2) << '\n';
}

void write_table(const Table& table, Format format, std::ostream& os) {
  if (format == Format::csv)
    write_csv(table, os);
  else
    write_json(table, os);
}

}  // namespace geab::cli
