#pragma once

#include <random>
#include <utility>
#include <vector>

#include "latticestop/graph.hpp"
#include "latticestop/rng.hpp"

namespace testutil {

// 4-cycle 0-1-3-2-0 (the 2x2 grid).
inline latticestop::Graph c4() { return latticestop::Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Path 0-1-2.
inline latticestop::Graph p3() { return latticestop::Graph(3, {{0, 1}, {1, 2}}); }

// Two disjoint edges 0-1 and 2-3.
inline latticestop::Graph two_k2() { return latticestop::Graph(4, {{0, 1}, {2, 3}}); }

inline latticestop::Graph k2() { return latticestop::Graph(2, {{0, 1}}); }

// Erdos-Renyi style graph with each edge present independently.
inline latticestop::Graph random_graph(std::size_t n, double edge_prob, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (latticestop::uniform53(rng) < edge_prob) {
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  return latticestop::Graph(n, std::move(edges));
}

}  // namespace testutil
