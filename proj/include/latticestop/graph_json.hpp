#pragma once

#include <iosfwd>
#include <string>

#include "latticestop/graph.hpp"

namespace latticestop {

// Canonical single-line JSON:
//   {"kind":...,"params":{...},"n_vertices":N,"edges":[[u,v],...],"cells":[[...],...]}
// with u < v and edges sorted lexicographically, terminated by one LF. The
// encoding is byte-stable: save(load(save(b))) == save(b).
std::string graph_to_json(const GraphBundle& bundle);
void save_graph_json(std::ostream& out, const GraphBundle& bundle);

// Parses and validates; error messages carry the JSON path of the offending
// element (e.g. "/edges/3"). Throws std::runtime_error.
GraphBundle graph_from_json(const std::string& text);
GraphBundle load_graph_json(std::istream& in);
GraphBundle load_graph_file(const std::string& path);

}  // namespace latticestop
