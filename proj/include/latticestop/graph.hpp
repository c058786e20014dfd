#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latticestop {

enum class LatticeKind { square, triangular, hexagonal };

std::string to_string(LatticeKind kind);
// Throws std::invalid_argument for anything but "square"/"triangular"/"hexagonal".
LatticeKind lattice_kind_from_string(const std::string& s);

struct LatticeSpec {
  LatticeKind kind = LatticeKind::square;
  int n = 0;     // side length, square/triangular (n >= 2)
  int rows = 0;  // hexagon rows, hexagonal (>= 1)
  int cols = 0;  // hexagon columns, hexagonal (>= 1)

  void validate() const;  // throws std::invalid_argument
};

// Finite simple undirected graph, immutable once built. Adjacency lists are
// sorted ascending; the edge list is canonical (u < v, lexicographic).
class Graph {
 public:
  Graph() = default;

  // Accepts edges in any order/orientation; canonicalizes and validates.
  // Throws std::invalid_argument on self-loops, duplicates, or out-of-range
  // endpoints.
  Graph(std::size_t num_vertices, std::vector<std::pair<int, int>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  int max_degree_ = 0;
};

// One elementary inner face, as vertex indices in cycle order.
using Cell = std::vector<int>;

struct CellList {
  std::vector<Cell> cells;
};

// Which vertices are currently open. One flag per vertex.
struct Occupancy {
  std::vector<std::uint8_t> open;

  std::size_t size() const { return open.size(); }
  std::size_t open_count() const;
  bool is_open(int v) const { return open[static_cast<std::size_t>(v)] != 0; }
  // "0"/"1" characters, vertex order; the on-disk dump format.
  std::string bitstring() const;
};

struct PatternCounts {
  std::int64_t isolated_vertices = 0;  // open, no open neighbor
  std::int64_t isolated_edges = 0;     // open edge forming a whole component
  std::int64_t empty_cells = 0;        // cell with every vertex open
};

// A generated or loaded graph together with its cell metadata and the
// parameters used to build it (used verbatim by the JSON format).
struct GraphBundle {
  std::string kind;  // "square" | "triangular" | "hexagonal" | "custom"
  std::vector<std::pair<std::string, std::int64_t>> params;
  Graph graph;
  CellList cells;
};

// Builds the requested lattice. Vertex indexing is row-major in all cases:
//   square/triangular: vertex (row r, col c) = r*n + c, r,c in [0, n).
//     square  : N = n^2, E = 2n(n-1), cells = (n-1)^2 unit squares.
//     triangular: square grid plus the (r, c+1)--(r+1, c) diagonal of every
//       unit cell, E = 2n(n-1) + (n-1)^2, cells = 2(n-1)^2 triangles.
//   hexagonal: brick-wall embedding. Hexagon (i, j), i in [0, rows),
//     j in [0, cols), is the 6-cycle of brick corners with lower-left corner
//     (x0, y0) = (2j + i%2, i). Vertices are the distinct corners indexed
//     row-major by (y, x); N = (rows+1)(2*cols+2) - 2,
//     E = 4*cols + (rows-1)(2*cols+1) + rows*(cols+1), cells = rows*cols.
GraphBundle gen_lattice(const LatticeSpec& spec);

struct DegreeStats {
  int max_degree = 0;
  std::map<int, std::size_t> histogram;  // degree -> number of vertices
};

DegreeStats graph_stats(const Graph& graph);

// Occupancy-dependent structural counts; see PatternCounts.
// Throws std::invalid_argument if the occupancy length does not match.
PatternCounts count_patterns(const Graph& graph, const CellList& cells, const Occupancy& occ);

}  // namespace latticestop
