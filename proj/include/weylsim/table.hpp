#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace weylsim {

// Rectangular numeric table with named columns; the common currency of the
// CLI output writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits: enough for exact double round-trips.
std::string format_real(double v);

// CSV with a header row; every real printed via format_real.
void write_csv(const Table& table, const std::filesystem::path& path);

// {"columns": [...], "rows": [[...], ...]}; numbers serialized with
// shortest-round-trip formatting, byte-stable for identical inputs.
void write_json(const Table& table, const std::filesystem::path& path);

// Reads back write_csv output bit-exactly.
Table read_csv(const std::filesystem::path& path);

}  // namespace weylsim
