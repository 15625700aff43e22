#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crowns/crown.hpp"
#include "crowns/cycles.hpp"
#include "crowns/errors.hpp"
#include "crowns/io.hpp"
#include "crowns/matrix.hpp"
#include "crowns/verify.hpp"

namespace py = pybind11;
using namespace crowns;

namespace {

using PyElement = std::pair<int, int>;
using PyPair = std::pair<PyElement, PyElement>;

PyPair to_py(const CriticalPair& c) {
  return {{c.lower.row, c.lower.pos}, {c.upper.row, c.upper.pos}};
}

std::vector<PyPair> to_py(const std::vector<CriticalPair>& pairs) {
  std::vector<PyPair> out;
  out.reserve(pairs.size());
  for (const auto& c : pairs) out.push_back(to_py(c));
  return out;
}

Poset poset_for(int n, int k, int layers, bool permissive) {
  if (layers == 1) return build_crown(n, k, permissive);
  return build_layered_crown(n, k, layers);
}

std::vector<std::vector<int>> rows_of(const BitMatrix& m) {
  std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c) ? 1 : 0;
  }
  return rows;
}

AdjMatrix matrix(int n, int k, int layers, const std::string& method, const std::string& mode) {
  if (method == "oracle") return oracle_matrix(n, k, layers);
  if (method != "formula") throw ParameterError("method must be formula or oracle");
  return layered_matrix(n, k, layers, matrix_mode_from_string(mode));
}

}  // namespace

PYBIND11_MODULE(_crowns, m) {
  m.doc() = "Generalized crowns, critical pairs and skeleton adjacency matrices";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<AdjMatrix>(m, "Matrix")
      .def_property_readonly("dimension", &AdjMatrix::dimension)
      .def_property_readonly("labels", &AdjMatrix::label_strings)
      .def_property_readonly("block_rows", [](const AdjMatrix& a) { return a.block_rows; })
      .def_property_readonly("regime", [](const AdjMatrix& a) { return to_string(a.regime.kind); })
      .def_property_readonly("pairs", [](const AdjMatrix& a) {
        std::vector<PyPair> out;
        for (const auto& l : a.labels) out.push_back(to_py(l.pair));
        return out;
      })
      .def("rows", [](const AdjMatrix& a) { return rows_of(a.entries); })
      .def("export", [](const AdjMatrix& a, const std::string& fmt) {
        return export_matrix(a, export_format_from_string(fmt));
      }, py::arg("fmt") = "pretty")
      .def("__eq__", [](const AdjMatrix& a, const AdjMatrix& b) { return a == b; })
      .def("__repr__", [](const AdjMatrix& a) {
        return "<Matrix n=" + std::to_string(a.params.n) + " k=" + std::to_string(a.params.k) +
               " l=" + std::to_string(a.params.layers) + " dim=" + std::to_string(a.dimension()) + ">";
      });

  m.def("matrix", &matrix, py::arg("n"), py::arg("k"), py::arg("l") = 1, py::arg("method") = "formula",
        py::arg("mode") = "corrected", "Adjacency matrix of the skeleton under canonical labels.");
  m.def("parse_json", &parse_json, py::arg("text"));

  m.def("critical_pairs", [](int n, int k, int l, bool permissive) {
    return to_py(critical_pairs(poset_for(n, k, l, permissive)));
  }, py::arg("n"), py::arg("k"), py::arg("l") = 1, py::arg("permissive") = false,
        "Brute-force critical pairs as ((row, pos), (row, pos)).");
  m.def("crit_pairs_closed_form", [](int n, int k, int l) { return to_py(crit_pairs_closed_form(n, k, l)); },
        py::arg("n"), py::arg("k"), py::arg("l") = 1);

  m.def("skeleton", [](int n, int k, int l, bool permissive) {
    const SkeletonGraph g = skeleton(poset_for(n, k, l, permissive));
    return py::make_tuple(to_py(g.vertices), g.edges);
  }, py::arg("n"), py::arg("k"), py::arg("l") = 1, py::arg("permissive") = false,
        "(vertices, edges) with edges as index pairs into vertices.");

  m.def("hyperedges", [](int n, int k, int l, bool permissive, std::size_t max_len, std::uint64_t budget) {
    const Poset p = poset_for(n, k, l, permissive);
    const auto crit = critical_pairs(p);
    std::vector<std::vector<PyPair>> out;
    for (const auto& e : enumerate_hyperedges(p, crit, {max_len, budget})) {
      std::vector<PyPair> members;
      for (auto i : e.members) members.push_back(to_py(crit[i]));
      out.push_back(std::move(members));
    }
    return out;
  }, py::arg("n"), py::arg("k"), py::arg("l") = 1, py::arg("permissive") = false, py::arg("max_len") = 4,
        py::arg("budget") = 10'000'000);

  m.def("hasse", [](int n, int k, int l, bool permissive, const std::string& fmt) {
    return export_poset(poset_for(n, k, l, permissive), l == 1 ? Naming::Crown : Naming::Layered,
                        export_format_from_string(fmt));
  }, py::arg("n"), py::arg("k"), py::arg("l") = 1, py::arg("permissive") = false, py::arg("fmt") = "dot");

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_property_readonly("passed", &VerifyReport::passed)
      .def_readonly("dimension", &VerifyReport::dimension)
      .def_readonly("crit_set_match", &VerifyReport::crit_set_match)
      .def_readonly("dimensions_match", &VerifyReport::dimensions_match)
      .def_readonly("strict_vs_nonstrict_crit_delta", &VerifyReport::strict_vs_nonstrict_crit_delta)
      .def_property_readonly("mismatch_count", [](const VerifyReport& r) { return r.mismatches.size(); })
      .def_property_readonly("params", [](const VerifyReport& r) {
        return py::make_tuple(r.params.n, r.params.k, r.params.layers);
      })
      .def("mismatches_confined_to_diagonal_blocks", &VerifyReport::mismatches_confined_to_diagonal_blocks)
      .def("export", [](const VerifyReport& r, const std::string& fmt) {
        return export_report(r, export_format_from_string(fmt));
      }, py::arg("fmt") = "pretty");

  m.def("verify", [](int n, int k, int l, const std::string& mode) {
    return verify(n, k, l, matrix_mode_from_string(mode));
  }, py::arg("n"), py::arg("k"), py::arg("l") = 1, py::arg("mode") = "corrected");

  m.def("sweep", [](int n_max, int k_max, int l_max, int sum_max, const std::string& mode, std::uint64_t budget,
                    unsigned jobs) {
    SweepOptions o;
    o.n_max = n_max;
    o.k_max = k_max;
    o.l_max = l_max;
    o.sum_max = sum_max;
    o.mode = matrix_mode_from_string(mode);
    o.budget = budget;
    o.jobs = jobs;
    SweepResult r;
    {
      py::gil_scoped_release release;
      r = sweep(o);
    }
    return py::make_tuple(r.reports, r.complete());
  }, py::arg("n_max") = 10, py::arg("k_max") = 6, py::arg("l_max") = 6, py::arg("sum_max") = 10,
        py::arg("mode") = "corrected", py::arg("budget") = SweepOptions{}.budget, py::arg("jobs") = 1,
        "(reports, complete) for every tuple in range, in tuple order.");
}
