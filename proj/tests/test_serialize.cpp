#include <filesystem>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "trifree/serialize.hpp"
#include "trifree/sweep.hpp"

using namespace trifree;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("trifree_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("params round trip, including infinite t1") {
  for (const Params& p : {derive_params(10000, 0.1), explicit_params(2, 2, 1.0, 1),
                          explicit_params(9, 3, 0.5, 3)}) {
    const Json j = to_json(p);
    CHECK(params_from_json(j) == p);
    CHECK(params_from_json(Json::parse(j.dump())) == p);
  }
  CHECK(to_json(derive_params(1000, 0.1)).contains("conventions"));
}

TEST_CASE("edge list text") {
  const std::vector<Edge> e = {{2, 0}, {0, 1}};
  const SimpleGraph g(4, e);
  const std::string text = edge_list_text(g, 42);
  CHECK(text == "4 2 42\n1 2\n1 3\n");
  std::istringstream in(text);
  std::uint64_t seed = 0;
  CHECK(parse_edge_list(in, &seed) == g);
  CHECK(seed == 42);
  std::istringstream bad("3 2 0\n1 2\n");
  CHECK_THROWS_AS(parse_edge_list(bad), FormatError);
  std::istringstream loop("3 1 0\n2 2\n");
  CHECK_THROWS_AS(parse_edge_list(loop), FormatError);
}

TEST_CASE("graph instance round trip through files") {
  const fs::path dir = scratch("graph");
  const PlacedGraph g = build(derive_params(1000, 0.1), 5);
  for (FileFormat f : {FileFormat::kEdgeList, FileFormat::kJson}) {
    const WrittenFiles w = write_instance(g, dir, f == FileFormat::kJson ? "j" : "e", f);
    const LoadedInstance back = read_instance(w.data.empty() ? w.sidecar : w.data);
    REQUIRE(std::holds_alternative<PlacedGraph>(back));
    CHECK(std::get<PlacedGraph>(back) == g);
    if (!w.data.empty()) CHECK(std::get<PlacedGraph>(read_instance(w.sidecar)) == g);
  }
  const Json side = Json::parse(read_text_file(dir / "e.json"));
  CHECK(side.at("code_version") == kCodeVersion);
  CHECK(side.at("seed") == 5);
  CHECK(params_from_json(side.at("params")) == g.params());
}

TEST_CASE("hypergraph instance round trip through files") {
  const fs::path dir = scratch("hyper");
  const HyperInstance h = build_hyper(explicit_params(40, 7, 0.5, 6), 2);
  for (FileFormat f : {FileFormat::kEdgeList, FileFormat::kJson}) {
    const WrittenFiles w = write_instance(h, dir, f == FileFormat::kJson ? "j" : "e", f);
    const LoadedInstance back = read_instance(w.data.empty() ? w.sidecar : w.data);
    REQUIRE(std::holds_alternative<HyperInstance>(back));
    CHECK(std::get<HyperInstance>(back) == h);
  }
}

TEST_CASE("plain edge list loads without sidecar") {
  const fs::path dir = scratch("plain");
  write_text_file(dir / "g.edges", "3 1 0\n1 3\n");
  const LoadedInstance back = read_instance(dir / "g.edges");
  REQUIRE(std::holds_alternative<SimpleGraph>(back));
  CHECK(std::get<SimpleGraph>(back).adjacent(0, 2));
}

TEST_CASE("errors") {
  const PlacedGraph g = build(explicit_params(9, 3, 0.5, 3), 1);
  CHECK_THROWS_AS(write_instance(g, "/nonexistent/trifree", "x", FileFormat::kEdgeList), IoError);
  CHECK_THROWS_AS(read_instance("/nonexistent/trifree/x.edges"), IoError);
  const fs::path dir = scratch("errors");
  write_text_file(dir / "bad.json", "{not json");
  CHECK_THROWS_AS(read_instance(dir / "bad.json"), FormatError);
  write_text_file(dir / "version.json", R"({"format":"trifree","format_version":9,"kind":"graph"})");
  CHECK_THROWS_AS(read_instance(dir / "version.json"), FormatError);
  write_text_file(dir / "kind.json", R"({"format":"trifree","format_version":1,"kind":"poset"})");
  CHECK_THROWS_AS(read_instance(dir / "kind.json"), FormatError);
  // sidecar whose edge list is missing
  write_text_file(dir / "lonely.json", R"({"format":"trifree","format_version":1,"kind":"graph"})");
  CHECK_THROWS_AS(read_instance(dir / "lonely.json"), IoError);
}

TEST_CASE("serialization is deterministic") {
  const PlacedGraph a = build(derive_params(2000, 0.1), 9);
  const PlacedGraph b = build(derive_params(2000, 0.1), 9);
  CHECK(edge_list_text(a.graph, 9) == edge_list_text(b.graph, 9));
  CHECK(to_json(a, true).dump() == to_json(b, true).dump());
}

}

TEST_SUITE("sweep") {

TEST_CASE("two-point sweep") {
  SweepConfig c;
  c.constructions = {Construction::kOverlay, Construction::kEdgeDeletion, Construction::kProcess};
  c.ns = {200, 300};
  c.seeds = 2;
  c.exact = false;
  c.threads = 3;
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].construction == Construction::kOverlay);
  CHECK(rows[0].n == 200);
  CHECK(rows[1].seed == rows[0].seed + 1);
  CHECK(rows[11].construction == Construction::kProcess);
  for (const auto& r : rows) {
    CHECK(r.triangles == 0);
    CHECK(r.alpha_greedy >= r.max_degree);
    CHECK(r.alpha_ratio == doctest::Approx(r.alpha_greedy / std::sqrt(r.n * std::log(r.n))));
  }
  c.threads = 1;
  CHECK(sweep_csv(run_sweep(c)) == sweep_csv(rows));
}

TEST_CASE("repeated seeds give identical rows") {
  SweepConfig c;
  c.constructions = {Construction::kOverlay};
  c.ns = {250};
  const std::string a = sweep_csv_row(run_cell(c, Construction::kOverlay, 250, 4));
  const std::string b = sweep_csv_row(run_cell(c, Construction::kOverlay, 250, 4));
  CHECK(a == b);
}

TEST_CASE("csv layout") {
  SweepConfig c;
  c.ns = {150};
  c.exact = true;
  c.diagnostics = true;
  const std::string csv = sweep_csv(run_sweep(c));
  std::istringstream in(csv);
  std::string schema, header, row;
  std::getline(in, schema);
  std::getline(in, header);
  std::getline(in, row);
  CHECK(schema == kSweepSchema);
  CHECK(header == sweep_csv_header());
  std::vector<std::string> cells;
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  REQUIRE(cells.size() == 15);
  CHECK(cells[0] == "overlay");
  const double n = std::stod(cells[1]);
  // ratio recomputed from the raw columns
  CHECK(std::stod(cells[8]) == doctest::Approx(std::stod(cells[5]) / std::sqrt(n * std::log(n))));
  CHECK_FALSE(cells[6].empty());
  CHECK_FALSE(cells[14].empty());
  CHECK_THROWS(construction_from_string("nope"));
}

}
