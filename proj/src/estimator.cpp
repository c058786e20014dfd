#include "latticestop/estimator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "latticestop/dsu.hpp"
#include "latticestop/rng.hpp"

namespace latticestop {

unsigned thread_budget() {
  unsigned budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LATTICESTOP_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) {
      budget = std::min<unsigned>(budget, static_cast<unsigned>(parsed));
    }
  }
  return budget;
}

namespace {

unsigned worker_count(std::uint64_t trials) {
  return static_cast<unsigned>(
      std::min<std::uint64_t>(thread_budget(), std::max<std::uint64_t>(trials, 1)));
}

// Runs body(trial_index, worker_slot) for every trial, striding trials across
// `workers` threads. Each worker writes only to its own slot; callers size
// their accumulators with the same worker count and merge afterwards.
// Per-trial randomness comes from trial_rng(seed, trial), so results do not
// depend on the worker count.
template <typename Body>
void for_each_trial(std::uint64_t trials, unsigned workers, const Body& body) {
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      body(t, 0u);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([w, workers, trials, &body] {
      for (std::uint64_t t = w; t < trials; t += workers) {
        body(t, w);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

double sample_std_from_sums(std::uint64_t trials, std::uint64_t sum, std::uint64_t sum_sq) {
  if (trials < 2) {
    return 0.0;
  }
  // trials * sum_sq - sum^2 needs 128 bits for large runs.
  const unsigned __int128 lhs =
      static_cast<unsigned __int128>(trials) * static_cast<unsigned __int128>(sum_sq);
  const unsigned __int128 rhs =
      static_cast<unsigned __int128>(sum) * static_cast<unsigned __int128>(sum);
  const double numer = lhs >= rhs ? static_cast<double>(lhs - rhs) : 0.0;
  const double denom = static_cast<double>(trials) * static_cast<double>(trials - 1);
  return std::sqrt(numer / denom);
}

void append_double(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

CurveEstimate estimate_curve(const Graph& graph, std::uint64_t trials, std::uint64_t master_seed) {
  if (trials == 0) {
    throw std::invalid_argument("estimate_curve requires trials >= 1");
  }
  const std::size_t n = graph.num_vertices();
  const unsigned workers = worker_count(trials);
  std::vector<std::vector<std::uint64_t>> sums(workers, std::vector<std::uint64_t>(n, 0));
  std::vector<std::vector<std::uint64_t>> sq_sums(workers, std::vector<std::uint64_t>(n, 0));

  for_each_trial(trials, workers, [&](std::uint64_t trial, unsigned slot) {
    auto rng = trial_rng(master_seed, trial);
    const Permutation perm = sample_permutation(n, rng);
    const Trajectory traj = trajectory(graph, perm);
    auto& sum = sums[slot];
    auto& sq = sq_sums[slot];
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::uint64_t>(traj.counts[i]);
      sum[i] += c;
      sq[i] += c * c;
    }
  });

  for (unsigned w = 1; w < workers; ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      sums[0][i] += sums[w][i];
      sq_sums[0][i] += sq_sums[w][i];
    }
  }

  CurveEstimate curve;
  curve.trials = trials;
  curve.mean.resize(n);
  curve.sample_std.resize(n);
  curve.ci95_halfwidth.resize(n);
  const double sqrt_trials = std::sqrt(static_cast<double>(trials));
  for (std::size_t i = 0; i < n; ++i) {
    curve.mean[i] = static_cast<double>(sums[0][i]) / static_cast<double>(trials);
    curve.sample_std[i] = sample_std_from_sums(trials, sums[0][i], sq_sums[0][i]);
    curve.ci95_halfwidth[i] = 1.96 * curve.sample_std[i] / sqrt_trials;
  }
  return curve;
}

BlindPolicy blind_policy(const CurveEstimate& curve) {
  if (curve.size() == 0) {
    throw std::invalid_argument("blind_policy requires a nonempty curve");
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < curve.size(); ++t) {
    if (curve.mean[t] > curve.mean[best]) {
      best = t;
    }
  }
  return {best + 1, curve.mean[best]};
}

std::int64_t play_blind(const Graph& graph, const BlindPolicy& policy, std::mt19937_64& rng) {
  if (policy.stop_time < 1 || policy.stop_time > graph.num_vertices()) {
    throw std::invalid_argument("blind stop time out of range");
  }
  const Permutation perm = sample_permutation(graph.num_vertices(), rng);
  DsuState dsu(graph.num_vertices());
  for (std::size_t t = 0; t < policy.stop_time; ++t) {
    const int v = perm.order[t];
    dsu.activate(v);
    for (const int u : graph.neighbors(v)) {
      if (dsu.active(u)) {
        dsu.merge(u, v);
      }
    }
  }
  return static_cast<std::int64_t>(dsu.components());
}

FullPlayResult play_full_heuristic(const Graph& graph, const CurveEstimate& curve,
                                   std::mt19937_64& rng) {
  if (curve.size() != graph.num_vertices()) {
    throw std::invalid_argument("curve does not match the graph");
  }
  const BlindPolicy fallback = blind_policy(curve);
  const double threshold = fallback.value;

  const Permutation perm = sample_permutation(graph.num_vertices(), rng);
  DsuState dsu(graph.num_vertices());
  for (std::size_t t = 1; t <= graph.num_vertices(); ++t) {
    const int v = perm.order[t - 1];
    dsu.activate(v);
    for (const int u : graph.neighbors(v)) {
      if (dsu.active(u)) {
        dsu.merge(u, v);
      }
    }
    const auto count = static_cast<std::int64_t>(dsu.components());
    if (static_cast<double>(count) >= threshold || t == fallback.stop_time) {
      return {count, t};
    }
  }
  return {static_cast<std::int64_t>(dsu.components()), graph.num_vertices()};
}

MeanStd percolation_mean(const Graph& graph, double p, std::uint64_t trials, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("occupation probability must be in [0, 1]");
  }
  if (trials < 2) {
    throw std::invalid_argument("percolation_mean requires trials >= 2");
  }
  const unsigned workers = worker_count(trials);
  std::vector<std::uint64_t> sums(workers, 0);
  std::vector<std::uint64_t> sq_sums(workers, 0);
  for_each_trial(trials, workers, [&](std::uint64_t trial, unsigned slot) {
    auto rng = trial_rng(seed, trial);
    const std::uint64_t count = percolation_sample(graph, p, rng).second;
    sums[slot] += count;
    sq_sums[slot] += count * count;
  });
  for (unsigned w = 1; w < workers; ++w) {
    sums[0] += sums[w];
    sq_sums[0] += sq_sums[w];
  }
  return {static_cast<double>(sums[0]) / static_cast<double>(trials),
          sample_std_from_sums(trials, sums[0], sq_sums[0])};
}

std::uint64_t coupling_check(const Graph& graph, std::uint64_t trials,
                             const std::vector<std::size_t>& t_grid, std::uint64_t seed) {
  const std::size_t n = graph.num_vertices();
  for (const std::size_t t : t_grid) {
    if (t < 1 || t > n) {
      throw std::invalid_argument("t_grid entries must lie in [1, N]");
    }
  }
  // Adding one vertex moves the count by at most max(deg, 1): an isolated
  // vertex still adds a component, so degree zero does not mean zero slack.
  const auto max_deg = std::max<std::int64_t>(1, graph.max_degree());
  const unsigned workers = worker_count(trials);
  std::vector<std::uint64_t> violations(workers, 0);
  for_each_trial(trials, workers, [&](std::uint64_t trial, unsigned slot) {
    auto rng = trial_rng(seed, trial);
    const CoupledSample sample(graph, rng);
    const auto& counts = sample.reveal_trajectory().counts;
    for (const std::size_t t : t_grid) {
      const double p = static_cast<double>(t) / static_cast<double>(n);
      const std::size_t open = sample.open_count_at(p);
      const std::int64_t reveal_count = counts[t - 1];
      const std::int64_t perc_count = open == 0 ? 0 : counts[open - 1];
      const std::int64_t slack =
          max_deg * std::abs(static_cast<std::int64_t>(open) - static_cast<std::int64_t>(t));
      violations[slot] += reveal_count > perc_count + slack;
      violations[slot] += perc_count > reveal_count + slack;
    }
  });
  std::uint64_t total = 0;
  for (const auto v : violations) {
    total += v;
  }
  return total;
}

ConcentrationReport concentration_report(const Graph& graph, double p, std::uint64_t trials,
                                         std::uint64_t seed) {
  if (trials < 30) {
    throw std::invalid_argument("concentration_report requires trials >= 30");
  }
  ConcentrationReport report;
  report.p = p;
  report.trials = trials;
  const MeanStd stats = percolation_mean(graph, p, trials, seed);
  report.empirical_mean = stats.mean;
  report.empirical_std = stats.std;
  // Changing one vertex moves the count by at most max(deg, 1).
  std::uint64_t budget_sq = 0;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const auto b = static_cast<std::uint64_t>(std::max(graph.degree(static_cast<int>(v)), 1));
    budget_sq += b * b;
  }
  report.lipschitz_budget = std::sqrt(static_cast<double>(budget_sq));
  report.passes = report.empirical_std <= report.lipschitz_budget / 2.0;
  return report;
}

GapCertificate gap_certificate(std::uint64_t n, double max_degree) {
  if (n == 0) {
    throw std::invalid_argument("gap_certificate requires n >= 1");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("gap_certificate requires max_degree >= 0");
  }
  GapCertificate cert;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  cert.epsilon = std::sqrt(32.0 * max_degree / sqrt_n);
  cert.degree_cap = cert.epsilon * cert.epsilon / 32.0 * sqrt_n;
  cert.additive_bound = cert.epsilon * static_cast<double>(n);
  if (max_degree == 0) {
    cert.note = "degree 0: every reveal adds a component, gap is zero";
  } else if (cert.epsilon >= 1.0) {
    cert.note = "vacuous: the additive bound meets or exceeds N at this degree/size";
  } else {
    cert.note = "holds for sufficiently large N; the size threshold is not quantified";
  }
  return cert;
}

void write_curve_csv(std::ostream& out, const CurveEstimate& curve) {
  std::string line;
  out << "t,mean,std,ci95,trials\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    line.clear();
    line += std::to_string(i + 1);
    line += ',';
    append_double(line, curve.mean[i]);
    line += ',';
    append_double(line, curve.sample_std[i]);
    line += ',';
    append_double(line, curve.ci95_halfwidth[i]);
    line += ',';
    line += std::to_string(curve.trials);
    line += '\n';
    out << line;
  }
}

}  // namespace latticestop
