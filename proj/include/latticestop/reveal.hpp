#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "latticestop/graph.hpp"

namespace latticestop {

// A reveal order: bijection on {0..N-1}.
struct Permutation {
  std::vector<int> order;
};

// One arrival time per vertex, each in [0, 1). Sorting arrival times (ties
// broken by vertex index) yields the reveal order; thresholding them at p
// yields the site-percolation occupancy, so one draw serves both models.
struct ArrivalTimes {
  std::vector<double> omega;
};

// counts[t-1] = number of components among the first t revealed vertices.
struct Trajectory {
  std::vector<std::int32_t> counts;
};

// Uniform over all n! orders (Fisher-Yates over an unbiased bounded draw).
Permutation sample_permutation(std::size_t n, std::mt19937_64& rng);

// Full component-count trajectory in one union-find pass: activate vertices
// in reveal order, merging with already-active neighbors.
// Throws std::invalid_argument unless perm is a bijection on the vertex set.
Trajectory trajectory(const Graph& graph, const Permutation& perm);

// One-shot component count of the subgraph induced by the open vertices.
// Throws std::invalid_argument on occupancy length mismatch.
std::size_t count_components(const Graph& graph, const Occupancy& occ);

// Independent Bernoulli(p) occupancy and its component count.
// Throws std::invalid_argument unless p is in [0, 1].
std::pair<Occupancy, std::size_t> percolation_sample(const Graph& graph, double p,
                                                     std::mt19937_64& rng);

// One arrival-time draw exposing both coupled views: the reveal process at
// any prefix length t and the percolation occupancy at any threshold p.
// Because the occupancy at threshold p is exactly the first V_p arrivals,
// component counts at any p are read off the single trajectory.
class CoupledSample {
 public:
  CoupledSample(const Graph& graph, std::mt19937_64& rng);
  // Deterministic variant for tests and replay; omega entries must be in [0, 1].
  CoupledSample(const Graph& graph, ArrivalTimes omega);

  const ArrivalTimes& arrival_times() const { return omega_; }
  const Permutation& permutation() const { return perm_; }
  const Trajectory& reveal_trajectory() const { return traj_; }
  std::span<const std::int32_t> trajectory_prefix(std::size_t t) const {
    return std::span<const std::int32_t>(traj_.counts).first(t);
  }

  // Number of vertices with arrival time <= p.
  std::size_t open_count_at(double p) const;
  // Occupancy {v : omega_v <= p}.
  Occupancy occupancy_at(double p) const;
  // Component count of the occupancy at threshold p.
  std::size_t components_at(double p) const;

 private:
  void finish_init(const Graph& graph);

  ArrivalTimes omega_;
  Permutation perm_;
  std::vector<double> sorted_omega_;
  Trajectory traj_;
};

// "t,count" rows for t = 1..N, LF line endings.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace latticestop
