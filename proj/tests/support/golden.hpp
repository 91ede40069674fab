#pragma once

// Printed truth tables: first line is the header formula, then one row of
// 0/1 cells per assignment in the printed token layout.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sheffer/parser.hpp"
#include "sheffer/semantics.hpp"

namespace golden {

struct Table {
  std::string formula;
  std::vector<std::vector<int>> rows;
};

inline std::string path(const std::string& relative) {
  return std::string(SHEFFER_GOLDEN_DIR) + "/" + relative;
}

inline std::string read(const std::string& relative) {
  std::ifstream in(path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Table load_table(const std::string& name) {
  std::istringstream in(read("tables/" + name + ".txt"));
  Table t;
  std::getline(in, t.formula);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::vector<int> row;
    int v;
    while (cells >> v) row.push_back(v);
    t.rows.push_back(row);
  }
  return t;
}

/// The library's table for `formula`, projected onto the printed layout.
inline std::vector<std::vector<int>> computed_rows(const std::string& formula) {
  sheffer::Formula f = sheffer::parse(formula);
  sheffer::TruthTable table = sheffer::truth_table(f);
  auto tokens = sheffer::token_layout(f, table);
  std::vector<std::vector<int>> rows(table.row_count());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& tok : tokens) rows[r].push_back(table.columns[tok.column_index].values[r]);
  }
  return rows;
}

}  // namespace golden
