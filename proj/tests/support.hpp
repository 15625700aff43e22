#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "crowns/element.hpp"
#include "crowns/matrix.hpp"

#ifndef CROWNS_TEST_DATA
#define CROWNS_TEST_DATA "tests/data"
#endif

namespace crowns::test {

inline Element a(int pos) { return {1, pos}; }
inline Element b(int pos) { return {2, pos}; }
inline Element x(int row, int pos) { return {row, pos}; }
inline CriticalPair cp(Element lower, Element upper) { return {lower, upper}; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// Bits of a transcribed matrix; lines starting with '#' and blank lines are skipped.
inline BitMatrix load_bits(const std::string& name) {
  std::istringstream in(slurp(std::string(CROWNS_TEST_DATA) + "/" + name));
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cells(line);
    rows.emplace_back();
    for (int v; cells >> v;) rows.back().push_back(v);
  }
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::runtime_error("ragged golden " + name);
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c] != 0);
  }
  return m;
}

}  // namespace crowns::test
