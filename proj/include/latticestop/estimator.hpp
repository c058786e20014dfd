#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "latticestop/graph.hpp"
#include "latticestop/reveal.hpp"

namespace latticestop {

// Per-time-step Monte Carlo statistics of the reveal trajectory. Index t-1
// carries the step-t values. All entries are pure functions of
// (graph, trials, master_seed): trials accumulate integer sums, so thread
// scheduling cannot perturb the result.
struct CurveEstimate {
  std::vector<double> mean;
  std::vector<double> sample_std;
  std::vector<double> ci95_halfwidth;  // 1.96 * sample_std / sqrt(trials)
  std::uint64_t trials = 0;

  std::size_t size() const { return mean.size(); }
};

struct BlindPolicy {
  std::size_t stop_time = 1;  // smallest t attaining the curve maximum
  double value = 0.0;         // curve mean at stop_time
};

// Additive-gap certificate: with max degree D on N vertices, the smallest
// epsilon whose degree cap (epsilon^2/32)sqrt(N) admits D, along with the
// additive bound epsilon*N it buys.
struct GapCertificate {
  double epsilon = 0.0;
  double degree_cap = 0.0;      // (epsilon^2/32) * sqrt(N)
  double additive_bound = 0.0;  // epsilon * N
  std::string note;
};

// Empirical spread of the percolation component count against the
// bounded-difference budget sqrt(sum_j max(deg(v_j), 1)^2).
struct ConcentrationReport {
  double p = 0.0;
  double empirical_mean = 0.0;
  double empirical_std = 0.0;
  double lipschitz_budget = 0.0;
  bool passes = false;  // empirical_std <= lipschitz_budget / 2
  std::uint64_t trials = 0;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct FullPlayResult {
  std::int64_t payoff = 0;
  std::size_t stop_time = 0;
};

// Averages `trials` independent reveal trajectories.
// Throws std::invalid_argument when trials == 0.
CurveEstimate estimate_curve(const Graph& graph, std::uint64_t trials, std::uint64_t master_seed);

// Smallest argmax of the curve mean. Throws on an empty curve.
BlindPolicy blind_policy(const CurveEstimate& curve);

// Reveals one random order and pays the component count at the fixed stop.
std::int64_t play_blind(const Graph& graph, const BlindPolicy& policy, std::mt19937_64& rng);

// Adapted threshold rule: stop at the first t whose running component count
// reaches the curve maximum, and no later than the curve argmax. Decisions at
// time t use only the revealed prefix.
FullPlayResult play_full_heuristic(const Graph& graph, const CurveEstimate& curve,
                                   std::mt19937_64& rng);

// Sample mean/std of the percolation component count.
// Throws std::invalid_argument unless p is in [0, 1] and trials >= 2.
MeanStd percolation_mean(const Graph& graph, double p, std::uint64_t trials, std::uint64_t seed);

// Checks both directions of the coupled-sample inequality
//   |reveal count at t - percolation count at t/N| <= D * |V_{t/N} - t|
// on every sample and every t in t_grid; returns the number of violations
// (always zero: the inequality is deterministic per sample).
std::uint64_t coupling_check(const Graph& graph, std::uint64_t trials,
                             const std::vector<std::size_t>& t_grid, std::uint64_t seed);

// Throws std::invalid_argument unless trials >= 30 and p is in [0, 1].
ConcentrationReport concentration_report(const Graph& graph, double p, std::uint64_t trials,
                                         std::uint64_t seed);

// Throws std::invalid_argument when n == 0 or max_degree < 0.
GapCertificate gap_certificate(std::uint64_t n, double max_degree);

// "t,mean,std,ci95,trials" rows, shortest round-trip float formatting,
// LF line endings, '.' decimal separator.
void write_curve_csv(std::ostream& out, const CurveEstimate& curve);

// Worker count for trial-parallel loops: hardware concurrency capped by the
// LATTICESTOP_THREADS environment variable (>= 1).
unsigned thread_budget();

}  // namespace latticestop
