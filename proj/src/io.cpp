#include "crowns/io.hpp"

#include <algorithm>
#include <sstream>

#include "crowns/errors.hpp"
#include "json.hpp"

namespace crowns {

using nlohmann::json;

std::string to_string(ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::Csv: return "csv";
    case ExportFormat::Json: return "json";
    case ExportFormat::MatrixMarket: return "matrixmarket";
    case ExportFormat::Dot: return "dot";
    case ExportFormat::Pretty: return "pretty";
  }
  return "unknown";
}

ExportFormat export_format_from_string(const std::string& text) {
  if (text == "csv") return ExportFormat::Csv;
  if (text == "json") return ExportFormat::Json;
  if (text == "matrixmarket" || text == "mtx") return ExportFormat::MatrixMarket;
  if (text == "dot") return ExportFormat::Dot;
  if (text == "pretty") return ExportFormat::Pretty;
  throw ParameterError("unknown format: " + text);
}

namespace {

std::string quoted(const std::string& id) { return "\"" + id + "\""; }

json element_json(const Element& e) { return json{{"row", e.row}, {"pos", e.pos}}; }

json pair_json(const CriticalPair& cp) {
  return json{{"lowerRow", cp.lower.row},
              {"lowerPos", cp.lower.pos},
              {"upperRow", cp.upper.row},
              {"upperPos", cp.upper.pos}};
}

CriticalPair pair_from_json(const json& j) {
  return CriticalPair{{j.at("lowerRow").get<int>(), j.at("lowerPos").get<int>()},
                      {j.at("upperRow").get<int>(), j.at("upperPos").get<int>()}};
}

json bits_json(const BitMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv(const std::vector<std::string>& labels, const BitMatrix& m) {
  std::ostringstream out;
  for (const auto& l : labels) out << ',' << l;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << labels[r];
    for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << (m.at(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

std::string matrix_market(const BitMatrix& m) {
  std::ostringstream out;
  std::size_t nnz = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = c + 1; r < m.rows(); ++r) nnz += m.at(r, c) ? 1 : 0;
  }
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      if (m.at(r, c)) out << r + 1 << ' ' << c + 1 << '\n';
    }
  }
  return out.str();
}

std::string pretty(const std::vector<std::string>& labels, const BitMatrix& m,
                   std::size_t block_rows) {
  std::ostringstream out;
  out << '#';
  for (const auto& l : labels) out << ' ' << l;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0 && block_rows > 0 && r % block_rows == 0) out << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << (m.at(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

std::string graph_dot(const std::vector<std::string>& nodes, std::span<const IndexEdge> edges) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (const auto& v : nodes) out << "  " << quoted(v) << ";\n";
  std::vector<IndexEdge> sorted(edges.begin(), edges.end());
  for (auto& e : sorted) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [a, b] : sorted) out << "  " << quoted(nodes[a]) << " -- " << quoted(nodes[b]) << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<IndexEdge> upper_edges(const BitMatrix& m) {
  std::vector<IndexEdge> edges;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      if (m.at(r, c)) edges.emplace_back(r, c);
    }
  }
  return edges;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::string export_matrix(const AdjMatrix& m, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::Csv: return csv(m.label_strings(), m.entries);
    case ExportFormat::MatrixMarket: return matrix_market(m.entries);
    case ExportFormat::Pretty: return pretty(m.label_strings(), m.entries, m.block_rows);
    case ExportFormat::Dot: {
      std::vector<std::string> nodes;
      for (const auto& l : m.labels) nodes.push_back(dual_label(l.pair, m.naming()));
      return graph_dot(nodes, upper_edges(m.entries));
    }
    case ExportFormat::Json: {
      json labels = json::array();
      for (const auto& l : m.labels) labels.push_back(pair_json(l.pair));
      json doc{{"params", {{"n", m.params.n}, {"k", m.params.k}, {"l", m.params.layers}}},
               {"regime",
                {{"kind", to_string(m.regime.kind)},
                 {"w", m.regime.w},
                 {"reducedN", m.regime.reduced_n},
                 {"reducedK", m.regime.reduced_k}}},
               {"labels", std::move(labels)},
               {"matrix", bits_json(m.entries)}};
      return doc.dump() + "\n";
    }
  }
  throw ParameterError("unsupported format");
}

ParsedMatrix parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("empty CSV");
  auto header = split(line, ',');
  if (header.empty() || !header[0].empty()) throw ParameterError("CSV header must start with an empty cell");

  ParsedMatrix out;
  for (std::size_t i = 1; i < header.size(); ++i) out.labels.push_back(parse_pair_label(header[i]));
  const std::size_t n = out.labels.size();
  out.entries = BitMatrix(n, n);
  std::size_t r = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (r >= n || cells.size() != n + 1) throw ParameterError("CSV row has the wrong shape");
    if (parse_pair_label(cells[0]) != out.labels[r]) throw ParameterError("CSV row label out of order");
    for (std::size_t c = 0; c < n; ++c) {
      if (cells[c + 1] != "0" && cells[c + 1] != "1") throw ParameterError("CSV cell must be 0 or 1");
      out.entries.set(r, c, cells[c + 1] == "1");
    }
    ++r;
  }
  if (r != n) throw ParameterError("CSV has the wrong number of rows");
  return out;
}

AdjMatrix parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed JSON: ") + e.what());
  }
  try {
    AdjMatrix m;
    const auto& params = doc.at("params");
    m.params = CrownParams{params.at("n").get<int>(), params.at("k").get<int>(),
                           params.at("l").get<int>()};
    m.regime = classify(m.params);
    const auto& regime = doc.at("regime");
    if (regime_kind_from_string(regime.at("kind").get<std::string>()) != m.regime.kind ||
        regime.at("w").get<int>() != m.regime.w ||
        regime.at("reducedN").get<int>() != m.regime.reduced_n ||
        regime.at("reducedK").get<int>() != m.regime.reduced_k) {
      throw ParameterError("regime does not match params");
    }
    const int mod = m.params.modulus();
    for (const auto& l : doc.at("labels")) {
      Label label;
      label.pair = pair_from_json(l);
      label.group = label.pair.lower.row;
      label.upper_pos = label.pair.upper.pos;
      label.offset = wrap(label.pair.lower.pos - (label.upper_pos - m.regime.reach + 1) + 1, mod) - 1;
      m.labels.push_back(label);
    }
    const auto& rows = doc.at("matrix");
    const std::size_t n = m.labels.size();
    if (rows.size() != n) throw ParameterError("matrix and labels disagree in size");
    m.entries = BitMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw ParameterError("matrix is not square");
      for (std::size_t c = 0; c < n; ++c) m.entries.set(r, c, rows[r][c].get<int>() != 0);
    }
    m.block_rows = static_cast<std::size_t>(mod * m.regime.misses());
    return m;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string export_skeleton(const SkeletonGraph& g, Naming naming, ExportFormat fmt) {
  const std::size_t n = g.vertices.size();
  BitMatrix m(n, n);
  for (const auto& [a, b] : g.edges) {
    m.set(a, b);
    m.set(b, a);
  }
  std::vector<std::string> labels;
  std::vector<std::string> duals;
  for (const auto& v : g.vertices) {
    labels.push_back(pair_label(v, naming));
    duals.push_back(dual_label(v, naming));
  }
  switch (fmt) {
    case ExportFormat::Dot: return graph_dot(duals, g.edges);
    case ExportFormat::Csv: return csv(labels, m);
    case ExportFormat::MatrixMarket: return matrix_market(m);
    case ExportFormat::Pretty: {
      std::ostringstream out;
      out << "vertices " << n << '\n';
      for (const auto& d : duals) out << d << '\n';
      out << "edges " << g.edges.size() << '\n';
      for (const auto& [a, b] : upper_edges(m)) out << duals[a] << ' ' << duals[b] << '\n';
      return out.str();
    }
    case ExportFormat::Json: {
      json vertices = json::array();
      for (const auto& v : g.vertices) vertices.push_back(pair_json(v));
      json edges = json::array();
      for (const auto& [a, b] : upper_edges(m)) edges.push_back({a, b});
      return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}}.dump() + "\n";
    }
  }
  throw ParameterError("unsupported format");
}

std::string export_poset(const Poset& p, Naming naming, ExportFormat fmt) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.element(a) < p.element(b); });
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    return std::pair(p.element(a.first), p.element(a.second)) <
           std::pair(p.element(b.first), p.element(b.second));
  });
  auto name = [&](std::size_t i) { return element_name(p.element(i), naming); };

  switch (fmt) {
    case ExportFormat::Dot: {
      std::ostringstream out;
      out << "digraph hasse {\n  rankdir=BT;\n";
      for (auto i : order) out << "  " << quoted(name(i)) << ";\n";
      for (const auto& [lo, hi] : covers) out << "  " << quoted(name(lo)) << " -> " << quoted(name(hi)) << ";\n";
      out << "}\n";
      return out.str();
    }
    case ExportFormat::Pretty: {
      std::ostringstream out;
      for (auto i : order) {
        out << name(i) << " >";
        std::vector<Element> below;
        for (const auto& [lo, hi] : covers) {
          if (hi == i) below.push_back(p.element(lo));
        }
        std::sort(below.begin(), below.end());
        for (const auto& e : below) out << ' ' << element_name(e, naming);
        out << '\n';
      }
      return out.str();
    }
    case ExportFormat::Json: {
      json elements = json::array();
      for (auto i : order) elements.push_back(element_json(p.element(i)));
      json cover_list = json::array();
      for (const auto& [lo, hi] : covers) {
        cover_list.push_back({element_json(p.element(lo)), element_json(p.element(hi))});
      }
      return json{{"elements", std::move(elements)}, {"covers", std::move(cover_list)}}.dump() + "\n";
    }
    case ExportFormat::Csv:
    case ExportFormat::MatrixMarket:
      break;
  }
  throw ParameterError("posets export as dot, pretty or json");
}

std::string export_pairs(std::span<const CriticalPair> pairs, Naming naming, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::Pretty: {
      std::ostringstream out;
      for (const auto& cp : pairs) {
        out << '(' << element_name(cp.lower, naming) << ',' << element_name(cp.upper, naming) << ")\n";
      }
      return out.str();
    }
    case ExportFormat::Csv: {
      std::ostringstream out;
      out << "lower,upper\n";
      for (const auto& cp : pairs) out << element_name(cp.lower, naming) << ',' << element_name(cp.upper, naming) << '\n';
      return out.str();
    }
    case ExportFormat::Json: {
      json list = json::array();
      for (const auto& cp : pairs) list.push_back(pair_json(cp));
      return list.dump() + "\n";
    }
    case ExportFormat::Dot:
    case ExportFormat::MatrixMarket:
      break;
  }
  throw ParameterError("critical pairs export as pretty, csv or json");
}

std::string export_hyperedges(std::span<const CriticalPair> crit, std::span<const Hyperedge> edges,
                              Naming naming, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::Pretty: {
      std::ostringstream out;
      for (const auto& e : edges) {
        out << '{';
        for (std::size_t i = 0; i < e.cycle.size(); ++i) {
          const auto& cp = crit[e.cycle[i]];
          out << (i ? ", " : "") << '(' << element_name(cp.upper, naming) << ','
              << element_name(cp.lower, naming) << ')';
        }
        out << "}\n";
      }
      return out.str();
    }
    case ExportFormat::Json: {
      json list = json::array();
      for (const auto& e : edges) {
        json cycle = json::array();
        for (auto i : e.cycle) cycle.push_back(pair_json(crit[i]));
        list.push_back(json{{"size", e.members.size()}, {"cycle", std::move(cycle)}});
      }
      return list.dump() + "\n";
    }
    case ExportFormat::Csv:
    case ExportFormat::Dot:
    case ExportFormat::MatrixMarket:
      break;
  }
  throw ParameterError("hyperedges export as pretty or json");
}

namespace {

json report_json(const VerifyReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back(json{{"row", m.row_label},
                              {"col", m.col_label},
                              {"formula", m.formula_bit ? 1 : 0},
                              {"oracle", m.oracle_bit ? 1 : 0}});
  }
  return json{{"params", {{"n", r.params.n}, {"k", r.params.k}, {"l", r.params.layers}}},
              {"mode", to_string(r.mode)},
              {"dimension", r.dimension},
              {"dimensionsMatch", r.dimensions_match},
              {"critSetMatch", r.crit_set_match},
              {"strictVsNonstrictCritDelta", r.strict_vs_nonstrict_crit_delta},
              {"mismatchCount", r.mismatches.size()},
              {"mismatches", std::move(mismatches)},
              {"passed", r.passed()}};
}

std::string report_line(const VerifyReport& r) {
  std::ostringstream out;
  out << "n=" << r.params.n << " k=" << r.params.k << " l=" << r.params.layers
      << " mode=" << to_string(r.mode) << " dim=" << r.dimension
      << " crit-set-match=" << (r.crit_set_match ? "yes" : "no")
      << " mismatches=" << r.mismatches.size()
      << " strict-delta=" << r.strict_vs_nonstrict_crit_delta << ' '
      << (r.passed() ? "PASS" : "FAIL");
  return out.str();
}

}  // namespace

std::string export_report(const VerifyReport& report, ExportFormat fmt) {
  if (fmt == ExportFormat::Json) return report_json(report).dump() + "\n";
  if (fmt != ExportFormat::Pretty) throw ParameterError("reports export as pretty or json");
  std::ostringstream out;
  out << report_line(report) << '\n';
  if (!report.mismatches.empty()) {
    out << "diagonal-blocks-only=" << (report.mismatches_confined_to_diagonal_blocks() ? "yes" : "no")
        << '\n';
  }
  for (const auto& m : report.mismatches) {
    out << "  " << m.row_label << ' ' << m.col_label << " formula=" << m.formula_bit
        << " oracle=" << m.oracle_bit << '\n';
  }
  return out.str();
}

std::string export_sweep(const SweepResult& result, ExportFormat fmt) {
  if (fmt == ExportFormat::Json) {
    json reports = json::array();
    for (const auto& r : result.reports) reports.push_back(report_json(r));
    json skipped = json::array();
    for (const auto& p : result.skipped) skipped.push_back({{"n", p.n}, {"k", p.k}, {"l", p.layers}});
    return json{{"reports", std::move(reports)},
                {"skipped", std::move(skipped)},
                {"complete", result.complete()},
                {"allPassed", result.all_passed()}}
               .dump() +
           "\n";
  }
  if (fmt != ExportFormat::Pretty) throw ParameterError("sweeps export as pretty or json");
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : result.reports) {
    out << report_line(r) << '\n';
    failed += r.passed() ? 0 : 1;
  }
  out << "tuples=" << result.reports.size() << " failed=" << failed
      << " skipped=" << result.skipped.size() << (result.complete() ? "" : " INCOMPLETE") << '\n';
  return out.str();
}

}  // namespace crowns
