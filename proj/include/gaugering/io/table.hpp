#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gaugering::io {

inline constexpr int kFormatVersion = 1;

/// A numeric table with a metadata header.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// CSV: '#'-prefixed "key: value" metadata lines, one header row, LF endings.
void write_csv(std::ostream& out, const Table& table);
Table read_csv(std::istream& in);

/// JSON: {"metadata": {...}, "columns": [...], "rows": [[...], ...]}.
void write_table_json(std::ostream& out, const Table& table);

}  // namespace gaugering::io
