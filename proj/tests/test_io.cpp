#include <sstream>

#include "crowns/crown.hpp"
#include "crowns/cycles.hpp"
#include "crowns/errors.hpp"
#include "crowns/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crowns;
using namespace crowns::test;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("format names") {
  for (auto fmt : {ExportFormat::Csv, ExportFormat::Json, ExportFormat::MatrixMarket, ExportFormat::Dot,
                   ExportFormat::Pretty}) {
    CHECK(export_format_from_string(to_string(fmt)) == fmt);
  }
  CHECK(export_format_from_string("mtx") == ExportFormat::MatrixMarket);
  CHECK_THROWS_AS(export_format_from_string("xml"), ParameterError);
}

TEST_CASE("pretty matrix of S^0_3") {
  CHECK(export_matrix(single_matrix(3, 0), ExportFormat::Pretty) ==
        "# a1b1 a2b2 a3b3\n0 1 1\n1 0 1\n1 1 0\n");
}

TEST_CASE("pretty layered matrix separates row blocks") {
  const auto lines = lines_of(export_matrix(layered_matrix(3, 1, 3), ExportFormat::Pretty));
  CHECK(lines.size() == 10);
  CHECK(lines[0] == "# x1.4|x3.1 x1.1|x3.2 x1.2|x3.3 x1.3|x3.4 x2.4|x4.1 x2.1|x4.2 x2.2|x4.3 x2.3|x4.4");
  CHECK(lines[5].empty());
  CHECK(lines[1] == "0 1 1 1 1 0 0 1");
}

TEST_CASE("matrix market") {
  const std::string text = export_matrix(layered_matrix(3, 1, 3), ExportFormat::MatrixMarket);
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 22);
  CHECK(lines[0] == "%%MatrixMarket matrix coordinate pattern symmetric");
  CHECK(lines[1] == "8 8 20");
  CHECK(lines[2] == "2 1");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    int r = 0;
    int c = 0;
    in >> r >> c;
    CHECK(r > c);
  }
  CHECK(text.back() == '\n');
}

TEST_CASE("csv and json round trip") {
  for (auto [n, k, l] : {std::tuple{3, 0, 1}, std::tuple{6, 1, 1}, std::tuple{3, 1, 5}, std::tuple{5, 1, 3},
                         std::tuple{4, 3, 2}, std::tuple{3, 4, 6}, std::tuple{7, 3, 4}}) {
    CAPTURE(n);
    CAPTURE(k);
    CAPTURE(l);
    const AdjMatrix m = layered_matrix(n, k, l);
    const std::string csv = export_matrix(m, ExportFormat::Csv);
    const ParsedMatrix back = parse_csv(csv);
    CHECK(back.entries == m.entries);
    CHECK(back.labels == canonical_labels(n, k, l).pairs());

    const std::string json = export_matrix(m, ExportFormat::Json);
    CHECK(parse_json(json) == m);
    CHECK(export_matrix(parse_json(json), ExportFormat::Json) == json);
    CHECK(export_matrix(m, ExportFormat::Csv) == csv);
  }
}

TEST_CASE("json layout") {
  CHECK(export_matrix(single_matrix(3, 0), ExportFormat::Json) ==
        "{\"labels\":[{\"lowerPos\":1,\"lowerRow\":1,\"upperPos\":1,\"upperRow\":2},"
        "{\"lowerPos\":2,\"lowerRow\":1,\"upperPos\":2,\"upperRow\":2},"
        "{\"lowerPos\":3,\"lowerRow\":1,\"upperPos\":3,\"upperRow\":2}],"
        "\"matrix\":[[0,1,1],[1,0,1],[1,1,0]],\"params\":{\"k\":0,\"l\":1,\"n\":3},"
        "\"regime\":{\"kind\":\"single-crown\",\"reducedK\":0,\"reducedN\":3,\"w\":1}}\n");
}

TEST_CASE("csv layout") {
  CHECK(export_matrix(single_matrix(3, 0), ExportFormat::Csv) ==
        ",a1b1,a2b2,a3b3\na1b1,0,1,1\na2b2,1,0,1\na3b3,1,1,0\n");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_csv(""), ParameterError);
  CHECK_THROWS_AS(parse_csv("a1b1,a2b2\n"), ParameterError);
  CHECK_THROWS_AS(parse_csv(",a1b1,a2b2\na1b1,0,1\n"), ParameterError);
  CHECK_THROWS_AS(parse_csv(",a1b1\na1b1,2\n"), ParameterError);
  CHECK_THROWS_AS(parse_csv(",a1b1,a2b2\na2b2,0,1\na1b1,1,0\n"), ParameterError);
  CHECK_THROWS_AS(parse_json("{"), ParameterError);
  CHECK_THROWS_AS(parse_json("{\"params\":{\"n\":3}}"), ParameterError);
  std::string json = export_matrix(single_matrix(3, 0), ExportFormat::Json);
  json.replace(json.find("single-crown"), 12, "tall");
  CHECK_THROWS_AS(parse_json(json), ParameterError);
}

TEST_CASE("skeleton dot for S^1_2") {
  const Poset p = build_crown(2, 1, true);
  const std::string dot = export_skeleton(skeleton(p), Naming::Crown, ExportFormat::Dot);
  const auto lines = lines_of(dot);
  CHECK(lines.front() == "graph skeleton {");
  CHECK(lines.back() == "}");
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (const auto& line : lines) {
    if (line.find(" -- ") != std::string::npos) {
      ++edges;
    } else if (line.starts_with("  \"")) {
      ++nodes;
    }
  }
  CHECK(nodes == 6);
  CHECK(edges == 3);
  for (const char* name : {"\"b1a1\"", "\"b2a3\"", "\"b3a1\"", "\"b2a2\"", "\"b1a2\"", "\"b3a3\""}) {
    CHECK(dot.find(name) != std::string::npos);
  }
  CHECK(dot == export_skeleton(skeleton(p), Naming::Crown, ExportFormat::Dot));
}

TEST_CASE("hasse diagram edges point upward") {
  const std::string dot = export_poset(build_crown(3, 0), Naming::Crown, ExportFormat::Dot);
  CHECK(dot.starts_with("digraph hasse {\n  rankdir=BT;\n"));
  CHECK(dot.find("\"a2\" -> \"b1\";") != std::string::npos);
  CHECK(dot.find("\"b1\" -> \"a2\"") == std::string::npos);
  CHECK(dot.find("\"a1\" -> \"b1\"") == std::string::npos);
  CHECK(export_poset(build_crown(3, 0), Naming::Crown, ExportFormat::Pretty) ==
        "a1 >\na2 >\na3 >\nb1 > a2 a3\nb2 > a1 a3\nb3 > a1 a2\n");
  CHECK_THROWS_AS(export_poset(build_crown(3, 0), Naming::Crown, ExportFormat::Csv), ParameterError);
}

TEST_CASE("pair and hyperedge listings") {
  const Poset p = build_crown(2, 1, true);
  const auto crit = critical_pairs(p);
  const auto hyper = enumerate_hyperedges(p, crit, {3, 1'000'000});
  const auto lines = lines_of(export_hyperedges(crit, hyper, Naming::Crown, ExportFormat::Pretty));
  CHECK(lines == std::vector<std::string>{"{(b1,a1), (b2,a3)}", "{(b1,a2), (b3,a3)}",
                                          "{(b2,a2), (b3,a1)}", "{(b1,a1), (b2,a2), (b3,a3)}",
                                          "{(b1,a2), (b3,a1), (b2,a3)}"});
  CHECK(export_pairs(critical_pairs(build_crown(3, 0)), Naming::Crown, ExportFormat::Pretty) ==
        "(a1,b1)\n(a2,b2)\n(a3,b3)\n");
  CHECK(export_pairs(critical_pairs(build_crown(3, 0)), Naming::Crown, ExportFormat::Csv) ==
        "lower,upper\na1,b1\na2,b2\na3,b3\n");
}
