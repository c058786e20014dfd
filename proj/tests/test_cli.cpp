#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "latticestop/cli.hpp"
#include "latticestop/graph.hpp"
#include "latticestop/graph_json.hpp"

using namespace latticestop;
namespace fs = std::filesystem;

namespace {

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("latticestop");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("latticestop_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int value = 0;
    return value;
  }
  fs::path file(const std::string& name) const { return path / name; }
};

}  // namespace

TEST_CASE("graph JSON round-trips byte-exactly") {
  const GraphBundle bundle = gen_lattice({LatticeKind::square, 3, 0, 0});
  const std::string text = graph_to_json(bundle);
  const GraphBundle loaded = graph_from_json(text);
  CHECK(loaded.graph.edges() == bundle.graph.edges());
  CHECK(loaded.cells.cells == bundle.cells.cells);
  CHECK(loaded.kind == "square");
  CHECK(graph_to_json(loaded) == text);
}

TEST_CASE("graph JSON rejects malformed files with a JSON path") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      graph_from_json(text);
      FAIL_CHECK("expected a parse failure for: " << text);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(R"({"kind":"custom","params":{},"n_vertices":3,"edges":[[0,1],[1,0]]})", "/edges");
  expect_error(R"({"kind":"custom","params":{},"n_vertices":3,"edges":[[0,3]]})", "/edges/0");
  expect_error(R"({"kind":"custom","params":{},"n_vertices":3,"edges":[[1,1]]})", "/edges/0");
  expect_error(R"({"kind":"custom","params":{},"n_vertices":3})", "missing");
  expect_error(R"({"kind":"pentagonal","params":{},"n_vertices":1,"edges":[]})", "pentagonal");
  expect_error(R"({"kind":"custom","params":{},"n_vertices":4,"edges":[[0,1]],"cells":[[0,1,2]]})",
               "/cells/0");
  expect_error("not json", "parseable");
}

TEST_CASE("lattice command emits a loadable graph") {
  TempDir tmp;
  const auto out = tmp.file("sq.json");
  REQUIRE(run({"lattice", "--lattice", "square", "--n", "2", "--out", out.string()}) == 0);
  const GraphBundle bundle = load_graph_file(out.string());
  CHECK(bundle.graph.num_vertices() == 4);
  CHECK(bundle.graph.edge_count() == 4);
  CHECK(bundle.kind == "square");
}

TEST_CASE("simulate writes the documented CSV") {
  TempDir tmp;
  const auto out = tmp.file("curve.csv");
  const auto blind = tmp.file("blind.json");
  REQUIRE(run({"simulate", "--lattice", "square", "--n", "2", "--trials", "1", "--seed", "7",
               "--out", out.string(), "--blind-out", blind.string()}) == 0);
  const std::string csv = read_file(out);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,mean,std,ci95,trials");
  std::getline(lines, line);
  CHECK(line.rfind("1,1,", 0) == 0);  // one revealed vertex is one component
  int data_rows = 1;
  while (std::getline(lines, line)) {
    data_rows += !line.empty();
  }
  CHECK(data_rows == 4);

  const auto blind_json = nlohmann::json::parse(read_file(blind));
  CHECK(blind_json["stop_time"].get<int>() >= 1);
  CHECK(blind_json["value"].get<double>() >= 1.0);
}

TEST_CASE("simulate output is byte-identical across runs") {
  TempDir tmp;
  const auto out_a = tmp.file("a.csv");
  const auto out_b = tmp.file("b.csv");
  for (const auto& out : {out_a, out_b}) {
    REQUIRE(run({"simulate", "--lattice", "triangular", "--n", "6", "--trials", "50", "--seed",
                 "123", "--out", out.string(), "--blind-out", (out.string() + ".json")}) == 0);
  }
  CHECK(read_file(out_a) == read_file(out_b));
  CHECK(read_file(out_a.string() + ".json") == read_file(out_b.string() + ".json"));
}

TEST_CASE("simulate emits JSON curves and trajectory dumps on request") {
  TempDir tmp;
  const auto out = tmp.file("curve.json");
  const auto traj = tmp.file("traj.csv");
  REQUIRE(run({"simulate", "--lattice", "square", "--n", "2", "--trials", "4", "--seed", "9",
               "--format", "json", "--out", out.string(), "--trajectory-out", traj.string()}) ==
          0);
  const auto curve = nlohmann::json::parse(read_file(out));
  CHECK(curve["trials"].get<int>() == 4);
  REQUIRE(curve["curve"].is_array());
  CHECK(curve["curve"].size() == 4);
  CHECK(curve["curve"][0]["mean"].get<double>() == 1.0);

  const std::string traj_csv = read_file(traj);
  CHECK(traj_csv.rfind("t,count\n1,1\n", 0) == 0);
}

TEST_CASE("percolate can dump the first occupancy") {
  TempDir tmp;
  const auto occ = tmp.file("occ.txt");
  REQUIRE(run({"percolate", "--lattice", "square", "--n", "3", "--p", "0.5", "--trials", "10",
               "--seed", "21", "--out", tmp.file("p.json").string(), "--occupancy-out",
               occ.string()}) == 0);
  const std::string line = read_file(occ);
  REQUIRE(line.size() == 10);  // nine flags plus newline
  CHECK(line.back() == '\n');
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    CHECK((line[i] == '0' || line[i] == '1'));
  }
}

TEST_CASE("percolate and oracle commands") {
  TempDir tmp;
  const auto graph = tmp.file("c4.json");
  REQUIRE(run({"lattice", "--lattice", "square", "--n", "2", "--out", graph.string()}) == 0);

  const auto perc = tmp.file("perc.json");
  REQUIRE(run({"percolate", "--graph", graph.string(), "--p", "0.5", "--trials", "200", "--seed",
               "5", "--out", perc.string()}) == 0);
  const auto perc_json = nlohmann::json::parse(read_file(perc));
  CHECK(perc_json["mean"].get<double>() >= 0.0);
  CHECK(perc_json["trials"].get<int>() == 200);

  const auto oracle_out = tmp.file("oracle.json");
  REQUIRE(run({"oracle", "--graph", graph.string(), "--out", oracle_out.string()}) == 0);
  const auto oracle_json = nlohmann::json::parse(read_file(oracle_out));
  CHECK(oracle_json["exact_curve"] ==
        nlohmann::json::array({"1", "4/3", "1", "1"}));
  CHECK(oracle_json["blind"]["t"].get<int>() == 2);
  CHECK(oracle_json["blind"]["value"].get<std::string>() == "4/3");
  CHECK(oracle_json["full_value"].get<std::string>() == "4/3");
}

TEST_CASE("oracle size guard surfaces as a nonzero exit") {
  TempDir tmp;
  const auto graph = tmp.file("big.json");
  GraphBundle big;
  big.kind = "custom";
  big.graph = Graph(25, {});
  std::ofstream(graph, std::ios::binary) << graph_to_json(big);
  CHECK(run({"oracle", "--graph", graph.string()}) == 1);
}

TEST_CASE("bounds command emits raw and table values") {
  TempDir tmp;
  const auto out = tmp.file("bounds.json");
  REQUIRE(run({"bounds", "--lattice", "square", "--assert", "--out", out.string()}) == 0);
  const auto j = nlohmann::json::parse(read_file(out));
  CHECK(j["lattice"] == "square");
  CHECK(j["lower"].get<double>() > 0.12953);
  CHECK(j["upper"].get<double>() < 0.13268);
  CHECK(j["table"]["lower"].get<double>() == doctest::Approx(0.12953));
  CHECK(j["table"]["upper"].get<double>() == doctest::Approx(0.13268));

  const auto all_out = tmp.file("all.json");
  REQUIRE(run({"bounds", "--out", all_out.string()}) == 0);
  const auto all = nlohmann::json::parse(read_file(all_out));
  REQUIRE(all.is_array());
  CHECK(all.size() == 3);
}

TEST_CASE("coupling, concentration, and gap commands") {
  TempDir tmp;
  const auto coupling_out = tmp.file("coupling.json");
  REQUIRE(run({"coupling-check", "--lattice", "square", "--n", "6", "--trials", "200", "--seed",
               "9", "--assert", "--out", coupling_out.string()}) == 0);
  const auto coupling = nlohmann::json::parse(read_file(coupling_out));
  CHECK(coupling["violations"].get<int>() == 0);

  const auto conc_out = tmp.file("conc.json");
  REQUIRE(run({"concentration", "--lattice", "square", "--n", "20", "--p", "0.27", "--trials",
               "100", "--seed", "3", "--assert", "--out", conc_out.string()}) == 0);
  const auto conc = nlohmann::json::parse(read_file(conc_out));
  CHECK(conc["passes"].get<bool>());

  const auto gap_out = tmp.file("gap.json");
  REQUIRE(run({"gap", "--n", "1000000", "--max-degree", "4", "--out", gap_out.string()}) == 0);
  const auto gap = nlohmann::json::parse(read_file(gap_out));
  CHECK(gap["epsilon"].get<double>() == doctest::Approx(0.3577708764));
}

TEST_CASE("report verdict passes on a small square lattice") {
  TempDir tmp;
  const auto out = tmp.file("report.json");
  REQUIRE(run({"report", "--lattice", "square", "--n", "100", "--trials", "60", "--seed", "11",
               "--assert", "--out", out.string()}) == 0);
  const auto j = nlohmann::json::parse(read_file(out));
  CHECK(j["verdict"]["pass"].get<bool>());
  CHECK(j["coupling_violations"].get<int>() == 0);
  CHECK(j["curve_summary"]["max_mean_per_vertex"].get<double>() > 0.1);
}

TEST_CASE("bad invocations exit nonzero") {
  CHECK(run({"frobnicate"}) != 0);
  CHECK(run({"simulate", "--lattice", "square", "--n", "4", "--trials", "5"}) != 0);  // no seed
  CHECK(run({"simulate", "--trials", "5", "--seed", "1"}) != 0);  // no graph source
  CHECK(run({"percolate", "--lattice", "square", "--n", "4", "--p", "2.0", "--trials", "10",
             "--seed", "1"}) != 0);
  CHECK(run({"oracle", "--graph", "/nonexistent/graph.json"}) == 1);
  CHECK(run({"lattice", "--lattice", "square", "--n", "1"}) == 1);
}
