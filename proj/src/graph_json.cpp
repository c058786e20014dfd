#include "latticestop/graph_json.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace latticestop {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error("graph JSON: " + path + ": " + what);
}

std::int64_t require_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    fail(path, "expected an integer");
  }
  return j.get<std::int64_t>();
}

}  // namespace

std::string graph_to_json(const GraphBundle& bundle) {
  Json j;
  j["kind"] = bundle.kind;
  j["params"] = Json::object();
  for (const auto& [key, value] : bundle.params) {
    j["params"][key] = value;
  }
  j["n_vertices"] = bundle.graph.num_vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : bundle.graph.edges()) {
    edges.push_back(Json::array({u, v}));
  }
  j["edges"] = std::move(edges);
  Json cells = Json::array();
  for (const auto& cell : bundle.cells.cells) {
    cells.push_back(Json(cell));
  }
  j["cells"] = std::move(cells);
  return j.dump() + "\n";
}

void save_graph_json(std::ostream& out, const GraphBundle& bundle) {
  out << graph_to_json(bundle);
}

GraphBundle graph_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("graph JSON: not parseable: ") + e.what());
  }
  if (!j.is_object()) {
    fail("/", "expected an object");
  }
  for (const char* key : {"kind", "params", "n_vertices", "edges"}) {
    if (!j.contains(key)) {
      fail("/", std::string("missing required key '") + key + "'");
    }
  }

  GraphBundle bundle;
  if (!j["kind"].is_string()) {
    fail("/kind", "expected a string");
  }
  bundle.kind = j["kind"].get<std::string>();
  if (bundle.kind != "custom") {
    try {
      lattice_kind_from_string(bundle.kind);
    } catch (const std::invalid_argument& e) {
      fail("/kind", e.what());
    }
  }

  if (!j["params"].is_object()) {
    fail("/params", "expected an object");
  }
  for (const auto& [key, value] : j["params"].items()) {
    bundle.params.emplace_back(key, require_int(value, "/params/" + key));
  }

  const std::int64_t n = require_int(j["n_vertices"], "/n_vertices");
  if (n < 0) {
    fail("/n_vertices", "must be non-negative");
  }

  if (!j["edges"].is_array()) {
    fail("/edges", "expected an array");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(j["edges"].size());
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const Json& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2) {
      fail(path, "expected a pair [u, v]");
    }
    const std::int64_t u = require_int(e[0], path + "/0");
    const std::int64_t v = require_int(e[1], path + "/1");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(path, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      fail(path, "self-loop");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    bundle.graph = Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    fail("/edges", e.what());
  }

  if (j.contains("cells")) {
    if (!j["cells"].is_array()) {
      fail("/cells", "expected an array");
    }
    for (std::size_t i = 0; i < j["cells"].size(); ++i) {
      const std::string path = "/cells/" + std::to_string(i);
      const Json& c = j["cells"][i];
      if (!c.is_array() || c.size() < 3) {
        fail(path, "expected an array of at least 3 vertex indices");
      }
      Cell cell;
      cell.reserve(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) {
        const std::int64_t v = require_int(c[k], path + "/" + std::to_string(k));
        if (v < 0 || v >= n) {
          fail(path + "/" + std::to_string(k), "vertex index out of range");
        }
        cell.push_back(static_cast<int>(v));
      }
      for (std::size_t k = 0; k < cell.size(); ++k) {
        if (!bundle.graph.has_edge(cell[k], cell[(k + 1) % cell.size()])) {
          fail(path, "cell vertices do not form a cycle in the graph");
        }
      }
      bundle.cells.cells.push_back(std::move(cell));
    }
  }
  return bundle;
}

GraphBundle load_graph_json(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

GraphBundle load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open graph file: " + path);
  }
  return load_graph_json(in);
}

}  // namespace latticestop
