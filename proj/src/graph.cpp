#include "latticestop/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latticestop {

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::square:
      return "square";
    case LatticeKind::triangular:
      return "triangular";
    case LatticeKind::hexagonal:
      return "hexagonal";
  }
  throw std::logic_error("unreachable lattice kind");
}

LatticeKind lattice_kind_from_string(const std::string& s) {
  if (s == "square") return LatticeKind::square;
  if (s == "triangular") return LatticeKind::triangular;
  if (s == "hexagonal") return LatticeKind::hexagonal;
  throw std::invalid_argument("unknown lattice kind: '" + s + "'");
}

void LatticeSpec::validate() const {
  switch (kind) {
    case LatticeKind::square:
    case LatticeKind::triangular:
      if (n < 2) {
        throw std::invalid_argument("lattice side must be >= 2, got " + std::to_string(n));
      }
      return;
    case LatticeKind::hexagonal:
      if (rows < 1 || cols < 1) {
        throw std::invalid_argument("hexagon rows/cols must be >= 1, got rows=" +
                                    std::to_string(rows) + " cols=" + std::to_string(cols));
      }
      return;
  }
  throw std::invalid_argument("invalid lattice kind");
}

Graph::Graph(std::size_t num_vertices, std::vector<std::pair<int, int>> edges) : n_(num_vertices) {
  const auto limit = static_cast<long long>(num_vertices);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= limit || v >= limit) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") with " + std::to_string(num_vertices) +
                                  " vertices");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) {
      std::swap(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    max_degree_ = std::max<int>(max_degree_, static_cast<int>(nb.size()));
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
    return false;
  }
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Occupancy::open_count() const {
  std::size_t count = 0;
  for (const auto flag : open) {
    count += flag != 0;
  }
  return count;
}

std::string Occupancy::bitstring() const {
  std::string s(open.size(), '0');
  for (std::size_t i = 0; i < open.size(); ++i) {
    if (open[i] != 0) {
      s[i] = '1';
    }
  }
  return s;
}

namespace {

GraphBundle gen_grid(const LatticeSpec& spec) {
  const int n = spec.n;
  const bool diagonals = spec.kind == LatticeKind::triangular;
  const auto id = [n](int r, int c) { return r * n + c; };

  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < n) edges.emplace_back(id(r, c), id(r + 1, c));
      if (diagonals && r + 1 < n && c + 1 < n) {
        edges.emplace_back(id(r, c + 1), id(r + 1, c));
      }
    }
  }

  CellList cells;
  for (int r = 0; r + 1 < n; ++r) {
    for (int c = 0; c + 1 < n; ++c) {
      if (diagonals) {
        cells.cells.push_back({id(r, c), id(r, c + 1), id(r + 1, c)});
        cells.cells.push_back({id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
      } else {
        cells.cells.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
      }
    }
  }

  GraphBundle bundle;
  bundle.kind = to_string(spec.kind);
  bundle.params = {{"n", n}};
  bundle.graph = Graph(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), std::move(edges));
  bundle.cells = std::move(cells);
  return bundle;
}

GraphBundle gen_hexagonal(const LatticeSpec& spec) {
  const int rows = spec.rows;
  const int cols = spec.cols;

  // Brick corners, indexed row-major by (y, x). A brick in hexagon row i is
  // two units wide and shifted right by one when i is odd, so the occupied x
  // range of line y depends only on which brick rows touch it.
  std::map<std::pair<int, int>, int> index;  // (y, x) -> vertex id
  for (int y = 0; y <= rows; ++y) {
    int xlo = 2 * cols + 2;
    int xhi = -1;
    for (const int brick_row : {y - 1, y}) {
      if (brick_row < 0 || brick_row >= rows) continue;
      xlo = std::min(xlo, brick_row % 2);
      xhi = std::max(xhi, 2 * cols + brick_row % 2);
    }
    for (int x = xlo; x <= xhi; ++x) {
      const int id = static_cast<int>(index.size());
      index.emplace(std::make_pair(y, x), id);
    }
  }

  std::set<std::pair<int, int>> edge_set;
  CellList cells;
  const auto at = [&index](int x, int y) { return index.at({y, x}); };
  const auto add_edge = [&edge_set](int u, int v) {
    edge_set.emplace(std::min(u, v), std::max(u, v));
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int x0 = 2 * j + i % 2;
      const int y0 = i;
      const int a = at(x0, y0);
      const int b = at(x0 + 1, y0);
      const int c = at(x0 + 2, y0);
      const int d = at(x0 + 2, y0 + 1);
      const int e = at(x0 + 1, y0 + 1);
      const int f = at(x0, y0 + 1);
      add_edge(a, b);
      add_edge(b, c);
      add_edge(c, d);
      add_edge(d, e);
      add_edge(e, f);
      add_edge(f, a);
      cells.cells.push_back({a, b, c, d, e, f});
    }
  }

  GraphBundle bundle;
  bundle.kind = to_string(spec.kind);
  bundle.params = {{"rows", rows}, {"cols", cols}};
  bundle.graph = Graph(index.size(),
                       std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
  bundle.cells = std::move(cells);
  return bundle;
}

}  // namespace

GraphBundle gen_lattice(const LatticeSpec& spec) {
  spec.validate();
  if (spec.kind == LatticeKind::hexagonal) {
    return gen_hexagonal(spec);
  }
  return gen_grid(spec);
}

DegreeStats graph_stats(const Graph& graph) {
  DegreeStats stats;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const int d = graph.degree(static_cast<int>(v));
    ++stats.histogram[d];
    stats.max_degree = std::max(stats.max_degree, d);
  }
  return stats;
}

PatternCounts count_patterns(const Graph& graph, const CellList& cells, const Occupancy& occ) {
  if (occ.size() != graph.num_vertices()) {
    throw std::invalid_argument("occupancy length " + std::to_string(occ.size()) +
                                " does not match graph with " +
                                std::to_string(graph.num_vertices()) + " vertices");
  }

  // Open-neighbor counts via one pass over edges.
  std::vector<int> open_nb(graph.num_vertices(), 0);
  for (const auto& [u, v] : graph.edges()) {
    if (occ.is_open(u) && occ.is_open(v)) {
      ++open_nb[static_cast<std::size_t>(u)];
      ++open_nb[static_cast<std::size_t>(v)];
    }
  }

  PatternCounts counts;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    if (occ.open[v] != 0 && open_nb[v] == 0) {
      ++counts.isolated_vertices;
    }
  }
  for (const auto& [u, v] : graph.edges()) {
    if (occ.is_open(u) && occ.is_open(v) && open_nb[static_cast<std::size_t>(u)] == 1 &&
        open_nb[static_cast<std::size_t>(v)] == 1) {
      ++counts.isolated_edges;
    }
  }
  for (const auto& cell : cells.cells) {
    bool all_open = true;
    for (const int v : cell) {
      if (!occ.is_open(v)) {
        all_open = false;
        break;
      }
    }
    counts.empty_cells += all_open;
  }
  return counts;
}

}  // namespace latticestop
