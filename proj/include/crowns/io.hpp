#pragma once

#include <span>
#include <string>
#include <vector>

#include "crowns/cycles.hpp"
#include "crowns/matrix.hpp"
#include "crowns/poset.hpp"
#include "crowns/verify.hpp"

namespace crowns {

enum class ExportFormat { Csv, Json, MatrixMarket, Dot, Pretty };

std::string to_string(ExportFormat fmt);
/// Accepts csv, json, matrixmarket (or mtx), dot, pretty.
ExportFormat export_format_from_string(const std::string& text);

// Output is deterministic and newline-terminated in every format.
//
//   csv           first row: empty cell then column labels; each further row:
//                 row label then 0/1 cells.
//   json          {"labels":[{lowerPos,lowerRow,upperPos,upperRow}...],
//                  "matrix":[[0,1,...],...], "params":{k,l,n},
//                  "regime":{kind,reducedK,reducedN,w}}
//   matrixmarket  coordinate pattern symmetric, 1-based, strict lower
//                 triangle listed column by column.
//   dot           undirected graph on the duals (skeleton vertices).
//   pretty        "#" label header, then space-separated bits with a blank
//                 line between row blocks.

std::string export_matrix(const AdjMatrix& m, ExportFormat fmt);

/// Labels and entries recovered from CSV.
struct ParsedMatrix {
  std::vector<CriticalPair> labels;
  BitMatrix entries;
};

/// Throws ParameterError on malformed input.
ParsedMatrix parse_csv(const std::string& text);
AdjMatrix parse_json(const std::string& text);

std::string export_skeleton(const SkeletonGraph& g, Naming naming, ExportFormat fmt);

/// dot: Hasse diagram with edges pointing upward; pretty: one line per
/// element listing its lower covers; json: elements and cover pairs.
std::string export_poset(const Poset& p, Naming naming, ExportFormat fmt);

std::string export_pairs(std::span<const CriticalPair> pairs, Naming naming, ExportFormat fmt);

/// Hyperedges are printed as sets of duals, in their witnessing cyclic order.
std::string export_hyperedges(std::span<const CriticalPair> crit,
                              std::span<const Hyperedge> edges, Naming naming,
                              ExportFormat fmt);

std::string export_report(const VerifyReport& report, ExportFormat fmt);
std::string export_sweep(const SweepResult& result, ExportFormat fmt);

}  // namespace crowns
