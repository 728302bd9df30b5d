#include "weylsim/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weylsim/errors.hpp"

namespace weylsim {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path.string());
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << format_real(row[c]);
    out << '\n';
  }
  if (!out) throw io_error("write failed: " + path.string());
}

void write_json(const Table& table, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw io_error("write failed: " + path.string());
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path.string());
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw io_error("empty CSV: " + path.string());
  table.columns = split_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& field : split_line(line)) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str() || *end != '\0')
        throw io_error("malformed CSV number '" + field + "' in " + path.string());
      row.push_back(v);
    }
    if (row.size() != table.columns.size())
      throw io_error("ragged CSV row in " + path.string());
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace weylsim
