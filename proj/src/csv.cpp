#include "gaugering/io/table.hpp"

#include "gaugering/io/config.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gaugering::io {

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      table.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    if (!header) {
      while (std::getline(ss, cell, ',')) table.columns.push_back(cell);
      header = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(parse_double(cell));
    if (row.size() != table.columns.size()) throw std::runtime_error("read_csv: ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_table_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json j;
  j["version"] = kFormatVersion;
  auto& meta = j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) meta[key] = value;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  out << j.dump(1) << '\n';
}

}  // namespace gaugering::io
