#include "latticestop/reveal.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "latticestop/dsu.hpp"
#include "latticestop/rng.hpp"

namespace latticestop {

Permutation sample_permutation(std::size_t n, std::mt19937_64& rng) {
  if (n < 1) {
    throw std::invalid_argument("permutation length must be >= 1");
  }
  Permutation perm;
  perm.order.resize(n);
  std::iota(perm.order.begin(), perm.order.end(), 0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(perm.order[i], perm.order[j]);
  }
  return perm;
}

namespace {

void check_bijection(const Graph& graph, const Permutation& perm) {
  if (perm.order.size() != graph.num_vertices()) {
    throw std::invalid_argument("permutation length does not match vertex count");
  }
  std::vector<std::uint8_t> seen(graph.num_vertices(), 0);
  for (const int v : perm.order) {
    if (v < 0 || static_cast<std::size_t>(v) >= graph.num_vertices() ||
        seen[static_cast<std::size_t>(v)] != 0) {
      throw std::invalid_argument("permutation is not a bijection on the vertex set");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Trajectory trajectory(const Graph& graph, const Permutation& perm) {
  check_bijection(graph, perm);
  DsuState dsu(graph.num_vertices());
  Trajectory traj;
  traj.counts.reserve(graph.num_vertices());
  for (const int v : perm.order) {
    dsu.activate(v);
    for (const int u : graph.neighbors(v)) {
      if (dsu.active(u)) {
        dsu.merge(u, v);
      }
    }
    // One step changes the count by at most +1 and at least 1 - deg(v).
    assert(traj.counts.empty() ||
           (dsu.components() <= static_cast<std::size_t>(traj.counts.back()) + 1 &&
            static_cast<std::int64_t>(dsu.components()) >=
                static_cast<std::int64_t>(traj.counts.back()) + 1 - graph.degree(v)));
    traj.counts.push_back(static_cast<std::int32_t>(dsu.components()));
  }
  return traj;
}

std::size_t count_components(const Graph& graph, const Occupancy& occ) {
  if (occ.size() != graph.num_vertices()) {
    throw std::invalid_argument("occupancy length does not match vertex count");
  }
  DsuState dsu(graph.num_vertices());
  for (std::size_t v = 0; v < occ.size(); ++v) {
    if (occ.open[v] != 0) {
      dsu.activate(static_cast<int>(v));
    }
  }
  for (const auto& [u, v] : graph.edges()) {
    if (occ.is_open(u) && occ.is_open(v)) {
      dsu.merge(u, v);
    }
  }
  return dsu.components();
}

std::pair<Occupancy, std::size_t> percolation_sample(const Graph& graph, double p,
                                                     std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("occupation probability must be in [0, 1]");
  }
  Occupancy occ;
  occ.open.resize(graph.num_vertices());
  for (auto& flag : occ.open) {
    flag = uniform53(rng) < p ? 1 : 0;
  }
  const std::size_t count = count_components(graph, occ);
  return {std::move(occ), count};
}

CoupledSample::CoupledSample(const Graph& graph, std::mt19937_64& rng) {
  omega_.omega.resize(graph.num_vertices());
  for (auto& w : omega_.omega) {
    w = uniform53(rng);
  }
  finish_init(graph);
}

CoupledSample::CoupledSample(const Graph& graph, ArrivalTimes omega) : omega_(std::move(omega)) {
  if (omega_.omega.size() != graph.num_vertices()) {
    throw std::invalid_argument("arrival-time vector length does not match vertex count");
  }
  for (const double w : omega_.omega) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("arrival times must lie in [0, 1]");
    }
  }
  finish_init(graph);
}

void CoupledSample::finish_init(const Graph& graph) {
  const std::size_t n = omega_.omega.size();
  perm_.order.resize(n);
  std::iota(perm_.order.begin(), perm_.order.end(), 0);
  // Ties broken by vertex index so replays are well defined.
  std::sort(perm_.order.begin(), perm_.order.end(), [this](int a, int b) {
    const double wa = omega_.omega[static_cast<std::size_t>(a)];
    const double wb = omega_.omega[static_cast<std::size_t>(b)];
    return wa != wb ? wa < wb : a < b;
  });
  sorted_omega_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted_omega_[i] = omega_.omega[static_cast<std::size_t>(perm_.order[i])];
  }
  traj_ = trajectory(graph, perm_);
}

std::size_t CoupledSample::open_count_at(double p) const {
  const auto it = std::upper_bound(sorted_omega_.begin(), sorted_omega_.end(), p);
  return static_cast<std::size_t>(it - sorted_omega_.begin());
}

Occupancy CoupledSample::occupancy_at(double p) const {
  Occupancy occ;
  occ.open.resize(omega_.omega.size());
  for (std::size_t v = 0; v < occ.open.size(); ++v) {
    occ.open[v] = omega_.omega[v] <= p ? 1 : 0;
  }
  return occ;
}

std::size_t CoupledSample::components_at(double p) const {
  const std::size_t k = open_count_at(p);
  // The threshold-p occupancy is exactly the first k arrivals.
  return k == 0 ? 0 : static_cast<std::size_t>(traj_.counts[k - 1]);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,count\n";
  for (std::size_t t = 0; t < traj.counts.size(); ++t) {
    out << t + 1 << ',' << traj.counts[t] << '\n';
  }
}

}  // namespace latticestop
