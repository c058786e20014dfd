#include "latticestop/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latticestop/bounds.hpp"
#include "latticestop/estimator.hpp"
#include "latticestop/graph.hpp"
#include "latticestop/graph_json.hpp"
#include "latticestop/oracle.hpp"
#include "latticestop/reveal.hpp"
#include "latticestop/rng.hpp"

namespace latticestop {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAssertFailed = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << content;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

// Shared --lattice/--n/--rows/--cols/--graph options.
struct GraphSource {
  std::string lattice;
  int n = 0;
  int rows = 0;
  int cols = 0;
  std::string graph_path;
};

void add_graph_source(CLI::App* cmd, GraphSource& src, bool lattice_only = false) {
  cmd->add_option("--lattice", src.lattice, "Lattice kind")
      ->check(CLI::IsMember({"square", "triangular", "hexagonal"}));
  cmd->add_option("--n", src.n, "Side length (square/triangular)");
  cmd->add_option("--rows", src.rows, "Hexagon rows (hexagonal)");
  cmd->add_option("--cols", src.cols, "Hexagon columns (hexagonal)");
  if (!lattice_only) {
    cmd->add_option("--graph", src.graph_path, "Graph JSON file");
  }
}

GraphBundle resolve_graph(const GraphSource& src) {
  if (!src.lattice.empty() && !src.graph_path.empty()) {
    throw std::invalid_argument("pass either --lattice or --graph, not both");
  }
  if (!src.graph_path.empty()) {
    return load_graph_file(src.graph_path);
  }
  if (src.lattice.empty()) {
    throw std::invalid_argument("a graph is required: pass --lattice or --graph");
  }
  LatticeSpec spec;
  spec.kind = lattice_kind_from_string(src.lattice);
  spec.n = src.n;
  spec.rows = src.rows;
  spec.cols = src.cols;
  return gen_lattice(spec);
}

Json graph_summary(const GraphBundle& bundle) {
  Json params = Json::object();
  for (const auto& [key, value] : bundle.params) {
    params[key] = value;
  }
  return Json{{"kind", bundle.kind},
              {"params", std::move(params)},
              {"n_vertices", bundle.graph.num_vertices()},
              {"edge_count", bundle.graph.edge_count()},
              {"max_degree", bundle.graph.max_degree()}};
}

Json bounds_json(const LatticeBoundsResult& row) {
  return Json{{"lattice", to_string(row.lattice)},
              {"p_max", row.lower_max.argmax},
              {"lower", row.lower_max.value},
              {"p_max_upper", row.upper_max.argmax},
              {"upper", row.upper_max.value},
              {"gap", row.upper_max.value - row.lower_max.value},
              {"table",
               Json{{"lower", row.table_lower},
                    {"upper", row.table_upper},
                    {"gap", row.table_gap}}}};
}

bool bounds_row_ok(const LatticeBoundsResult& row) {
  const BoundsEntry entry = bound_polys(row.lattice);
  return row.lower_max.value > entry.reference_lower &&
         row.upper_max.value < entry.reference_upper &&
         row.lower_max.argmax >= entry.p_max_window.first &&
         row.lower_max.argmax <= entry.p_max_window.second &&
         row.upper_max.argmax >= entry.p_max_upper_window.first &&
         row.upper_max.argmax <= entry.p_max_upper_window.second;
}

Json concentration_json(const ConcentrationReport& report) {
  return Json{{"p", report.p},
              {"trials", report.trials},
              {"empirical_mean", report.empirical_mean},
              {"empirical_std", report.empirical_std},
              {"lipschitz_budget", report.lipschitz_budget},
              {"passes", report.passes}};
}

Json gap_json(std::uint64_t n, double max_degree, const GapCertificate& cert) {
  return Json{{"n", n},
              {"max_degree", max_degree},
              {"epsilon", cert.epsilon},
              {"degree_cap", cert.degree_cap},
              {"additive_bound", cert.additive_bound},
              {"note", cert.note}};
}

std::vector<std::size_t> default_t_grid(std::size_t n, std::size_t points) {
  std::vector<std::size_t> grid;
  points = std::min(points, n);
  for (std::size_t i = 1; i <= points; ++i) {
    grid.push_back(std::max<std::size_t>(1, i * n / points));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

int cmd_lattice(const GraphSource& src, const std::string& out) {
  GraphSource lattice_only = src;
  lattice_only.graph_path.clear();
  const GraphBundle bundle = resolve_graph(lattice_only);
  write_output(out, graph_to_json(bundle));
  return kExitOk;
}

struct SimulateOpts {
  GraphSource src;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::string blind_out;
  std::string trajectory_out;
};

int cmd_simulate(const SimulateOpts& opt) {
  const GraphBundle bundle = resolve_graph(opt.src);
  const CurveEstimate curve = estimate_curve(bundle.graph, opt.trials, opt.seed);
  const BlindPolicy policy = blind_policy(curve);

  std::string curve_text;
  if (opt.format == "csv") {
    std::ostringstream os;
    write_curve_csv(os, curve);
    curve_text = os.str();
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < curve.size(); ++i) {
      rows.push_back(Json{{"t", i + 1},
                          {"mean", curve.mean[i]},
                          {"std", curve.sample_std[i]},
                          {"ci95", curve.ci95_halfwidth[i]}});
    }
    curve_text = dump(Json{{"trials", curve.trials}, {"curve", std::move(rows)}});
  }
  write_output(opt.out, curve_text);

  if (!opt.trajectory_out.empty()) {
    auto rng = trial_rng(opt.seed, 0);
    const Permutation perm = sample_permutation(bundle.graph.num_vertices(), rng);
    std::ostringstream os;
    write_trajectory_csv(os, trajectory(bundle.graph, perm));
    write_output(opt.trajectory_out, os.str());
  }

  const Json blind{{"stop_time", policy.stop_time}, {"value", policy.value}};
  if (!opt.blind_out.empty()) {
    write_output(opt.blind_out, dump(blind));
  } else if (!opt.out.empty() && opt.out != "-") {
    // Curve went to a file, so stdout is free for the policy summary.
    std::cout << dump(blind);
  }
  return kExitOk;
}

struct PercolateOpts {
  GraphSource src;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string occupancy_out;
};

int cmd_percolate(const PercolateOpts& opt) {
  const GraphBundle bundle = resolve_graph(opt.src);
  const MeanStd stats = percolation_mean(bundle.graph, opt.p, opt.trials, opt.seed);
  const Json j{{"p", opt.p},
               {"trials", opt.trials},
               {"mean", stats.mean},
               {"std", stats.std},
               {"mean_per_vertex",
                stats.mean / static_cast<double>(std::max<std::size_t>(1, bundle.graph.num_vertices()))}};
  write_output(opt.out, dump(j));
  if (!opt.occupancy_out.empty()) {
    auto rng = trial_rng(opt.seed, 0);
    const auto [occ, count] = percolation_sample(bundle.graph, opt.p, rng);
    write_output(opt.occupancy_out, occ.bitstring() + "\n");
  }
  return kExitOk;
}

int cmd_bounds(const std::string& lattice, const std::string& out, bool assert_mode) {
  std::vector<LatticeBoundsResult> rows;
  if (lattice.empty()) {
    rows = bounds_table();
  } else {
    rows.push_back(evaluate_bounds(lattice_kind_from_string(lattice)));
  }
  bool ok = true;
  Json result = Json::array();
  for (const auto& row : rows) {
    result.push_back(bounds_json(row));
    ok = ok && bounds_row_ok(row);
  }
  write_output(out, rows.size() == 1 ? dump(result[0]) : dump(result));
  if (assert_mode && !ok) {
    std::cerr << "bounds assertion failed: computed maxima left the reference brackets\n";
    return kExitAssertFailed;
  }
  return kExitOk;
}

int cmd_oracle(const std::string& graph_path, const std::string& out) {
  const GraphBundle bundle = load_graph_file(graph_path);
  const ExactCurve curve = exact_curve(bundle.graph);
  const GameValue game = full_info_value(bundle.graph);
  const PercolationPolynomial poly = exact_percolation_polynomial(bundle.graph);

  Json curve_json = Json::array();
  for (const auto& v : curve.values) {
    curve_json.push_back(rational_to_string(v));
  }
  Json poly_json = Json::array();
  for (const auto& c : poly.coeffs) {
    poly_json.push_back(rational_to_string(c));
  }
  const Json j{{"exact_curve", std::move(curve_json)},
               {"blind",
                Json{{"t", game.blind_stop}, {"value", rational_to_string(game.blind_value)}}},
               {"full_value", rational_to_string(game.full_value)},
               {"percolation_poly", std::move(poly_json)}};
  write_output(out, dump(j));
  return kExitOk;
}

struct CouplingOpts {
  GraphSource src;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> t_grid;
  std::size_t t_points = 10;
  std::string out;
  bool assert_mode = false;
};

int cmd_coupling(const CouplingOpts& opt) {
  const GraphBundle bundle = resolve_graph(opt.src);
  const std::vector<std::size_t> grid =
      opt.t_grid.empty() ? default_t_grid(bundle.graph.num_vertices(), opt.t_points) : opt.t_grid;
  const std::uint64_t violations = coupling_check(bundle.graph, opt.trials, grid, opt.seed);
  const Json j{{"trials", opt.trials}, {"t_grid", grid}, {"violations", violations}};
  write_output(opt.out, dump(j));
  if (opt.assert_mode && violations != 0) {
    std::cerr << "coupling assertion failed: " << violations << " violations\n";
    return kExitAssertFailed;
  }
  return kExitOk;
}

struct ConcentrationOpts {
  GraphSource src;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool assert_mode = false;
};

int cmd_concentration(const ConcentrationOpts& opt) {
  const GraphBundle bundle = resolve_graph(opt.src);
  const ConcentrationReport report = concentration_report(bundle.graph, opt.p, opt.trials, opt.seed);
  write_output(opt.out, dump(concentration_json(report)));
  if (opt.assert_mode && !report.passes) {
    std::cerr << "concentration assertion failed: empirical std " << report.empirical_std
              << " exceeds half the budget " << report.lipschitz_budget / 2 << "\n";
    return kExitAssertFailed;
  }
  return kExitOk;
}

struct GapOpts {
  std::uint64_t n = 0;
  double max_degree = -1.0;
  std::string graph_path;
  std::string out;
};

int cmd_gap(const GapOpts& opt) {
  std::uint64_t n = opt.n;
  double max_degree = opt.max_degree;
  if (!opt.graph_path.empty()) {
    const GraphBundle bundle = load_graph_file(opt.graph_path);
    n = bundle.graph.num_vertices();
    max_degree = bundle.graph.max_degree();
  } else if (n == 0 || max_degree < 0) {
    throw std::invalid_argument("pass --graph, or both --n and --max-degree");
  }
  const GapCertificate cert = gap_certificate(n, max_degree);
  write_output(opt.out, dump(gap_json(n, max_degree, cert)));
  return kExitOk;
}

struct ReportOpts {
  GraphSource src;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<double> p;
  double slack = 0.005;
  std::string out;
  bool assert_mode = false;
};

int cmd_report(const ReportOpts& opt) {
  if (opt.src.lattice.empty()) {
    throw std::invalid_argument("report requires --lattice (bounds exist only for lattices)");
  }
  const GraphBundle bundle = resolve_graph(opt.src);
  const LatticeKind kind = lattice_kind_from_string(bundle.kind);
  const LatticeBoundsResult bounds = evaluate_bounds(kind);
  const double n_vertices = static_cast<double>(bundle.graph.num_vertices());

  const CurveEstimate curve = estimate_curve(bundle.graph, opt.trials, opt.seed);
  const BlindPolicy policy = blind_policy(curve);
  const double max_per_vertex = policy.value / n_vertices;

  const std::vector<std::size_t> grid = default_t_grid(bundle.graph.num_vertices(), 10);
  const std::uint64_t violations =
      coupling_check(bundle.graph, opt.trials, grid, splitmix64(opt.seed) ^ 1);

  const double p = opt.p.value_or(bounds.lower_max.argmax);
  const ConcentrationReport conc =
      concentration_report(bundle.graph, p, std::max<std::uint64_t>(opt.trials, 30),
                           splitmix64(opt.seed) ^ 2);

  const GapCertificate cert =
      gap_certificate(bundle.graph.num_vertices(), bundle.graph.max_degree());

  const double window_lo = bounds.lower_max.value - opt.slack;
  const double window_hi = bounds.upper_max.value + opt.slack;
  const bool containment = max_per_vertex > window_lo && max_per_vertex < window_hi;
  const bool pass = containment && violations == 0 && conc.passes;

  const Json j{{"graph", graph_summary(bundle)},
               {"curve_summary",
                Json{{"trials", curve.trials},
                     {"max_mean", policy.value},
                     {"argmax_t", policy.stop_time},
                     {"max_mean_per_vertex", max_per_vertex}}},
               {"blind", Json{{"stop_time", policy.stop_time}, {"value", policy.value}}},
               {"coupling_violations", violations},
               {"concentration", concentration_json(conc)},
               {"gap_certificate",
                gap_json(bundle.graph.num_vertices(), bundle.graph.max_degree(), cert)},
               {"bounds", bounds_json(bounds)},
               {"verdict",
                Json{{"slack", opt.slack},
                     {"window", Json::array({window_lo, window_hi})},
                     {"containment", containment},
                     {"coupling_ok", violations == 0},
                     {"concentration_ok", conc.passes},
                     {"pass", pass}}}};
  write_output(opt.out, dump(j));
  if (opt.assert_mode && !pass) {
    std::cerr << "report verdict failed (containment=" << containment
              << ", coupling violations=" << violations << ", concentration=" << conc.passes
              << ")\n";
    return kExitAssertFailed;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Component-count stopping game on lattices: simulation, exact oracles, bounds"};
  app.require_subcommand(1);

  // lattice
  GraphSource lattice_src;
  std::string lattice_out;
  auto* lattice_cmd = app.add_subcommand("lattice", "Generate a lattice graph as JSON");
  add_graph_source(lattice_cmd, lattice_src, /*lattice_only=*/true);
  lattice_cmd->add_option("--out", lattice_out, "Output path (default stdout)");

  // simulate
  SimulateOpts sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo reveal curve and blind policy");
  add_graph_source(sim_cmd, sim.src);
  sim_cmd->add_option("--trials", sim.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim.seed, "Master seed")->required();
  sim_cmd->add_option("--out", sim.out, "Curve output path (default stdout)");
  sim_cmd->add_option("--format", sim.format, "Curve format")->check(CLI::IsMember({"csv", "json"}));
  sim_cmd->add_option("--blind-out", sim.blind_out, "Blind policy JSON path");
  sim_cmd->add_option("--trajectory-out", sim.trajectory_out, "Trial-0 trajectory CSV path");

  // percolate
  PercolateOpts perc;
  auto* perc_cmd = app.add_subcommand("percolate", "Percolation component-count mean/std");
  add_graph_source(perc_cmd, perc.src);
  perc_cmd->add_option("--p", perc.p, "Occupation probability")->required()->check(CLI::Range(0.0, 1.0));
  perc_cmd->add_option("--trials", perc.trials, "Number of samples")->required()->check(CLI::PositiveNumber);
  perc_cmd->add_option("--seed", perc.seed, "Master seed")->required();
  perc_cmd->add_option("--out", perc.out, "Output path (default stdout)");
  perc_cmd->add_option("--occupancy-out", perc.occupancy_out, "Sample-0 occupancy bitstring path");

  // bounds
  std::string bounds_lattice;
  std::string bounds_out;
  bool bounds_assert = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lattice bound polynomials maximized");
  bounds_cmd->add_option("--lattice", bounds_lattice, "Single lattice (default: all)")
      ->check(CLI::IsMember({"square", "triangular", "hexagonal"}));
  bounds_cmd->add_option("--out", bounds_out, "Output path (default stdout)");
  bounds_cmd->add_flag("--assert", bounds_assert, "Exit nonzero unless brackets hold");

  // oracle
  std::string oracle_graph;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact curve/game values (small graphs)");
  oracle_cmd->add_option("--graph", oracle_graph, "Graph JSON file")->required();
  oracle_cmd->add_option("--out", oracle_out, "Output path (default stdout)");

  // coupling-check
  CouplingOpts coupling;
  auto* coupling_cmd = app.add_subcommand("coupling-check", "Verify the coupled-sample inequality");
  add_graph_source(coupling_cmd, coupling.src);
  coupling_cmd->add_option("--trials", coupling.trials, "Number of samples")->required()->check(CLI::PositiveNumber);
  coupling_cmd->add_option("--seed", coupling.seed, "Master seed")->required();
  coupling_cmd->add_option("--t-grid", coupling.t_grid, "Explicit t values");
  coupling_cmd->add_option("--t-points", coupling.t_points, "Evenly spaced t count (default 10)");
  coupling_cmd->add_option("--out", coupling.out, "Output path (default stdout)");
  coupling_cmd->add_flag("--assert", coupling.assert_mode, "Exit nonzero on violations");

  // concentration
  ConcentrationOpts conc;
  auto* conc_cmd = app.add_subcommand("concentration", "Empirical spread vs Lipschitz budget");
  add_graph_source(conc_cmd, conc.src);
  conc_cmd->add_option("--p", conc.p, "Occupation probability")->required()->check(CLI::Range(0.0, 1.0));
  conc_cmd->add_option("--trials", conc.trials, "Number of samples")->required()->check(CLI::PositiveNumber);
  conc_cmd->add_option("--seed", conc.seed, "Master seed")->required();
  conc_cmd->add_option("--out", conc.out, "Output path (default stdout)");
  conc_cmd->add_flag("--assert", conc.assert_mode, "Exit nonzero unless the check passes");

  // gap
  GapOpts gap;
  auto* gap_cmd = app.add_subcommand("gap", "Blind-vs-full additive gap certificate");
  gap_cmd->add_option("--n", gap.n, "Vertex count");
  gap_cmd->add_option("--max-degree", gap.max_degree, "Maximum degree");
  gap_cmd->add_option("--graph", gap.graph_path, "Graph JSON file (overrides --n/--max-degree)");
  gap_cmd->add_option("--out", gap.out, "Output path (default stdout)");

  // report
  ReportOpts report;
  auto* report_cmd = app.add_subcommand("report", "Composite run compared against the bounds");
  add_graph_source(report_cmd, report.src, /*lattice_only=*/true);
  report_cmd->add_option("--trials", report.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  report_cmd->add_option("--seed", report.seed, "Master seed")->required();
  double report_p = -1.0;
  auto* report_p_opt = report_cmd->add_option("--p", report_p, "Concentration probability")
                           ->check(CLI::Range(0.0, 1.0));
  report_cmd->add_option("--slack", report.slack, "Containment slack")->check(CLI::Range(0.0, 0.1));
  report_cmd->add_option("--out", report.out, "Output path (default stdout)");
  report_cmd->add_flag("--assert", report.assert_mode, "Exit nonzero unless the verdict passes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (lattice_cmd->parsed()) return cmd_lattice(lattice_src, lattice_out);
    if (sim_cmd->parsed()) return cmd_simulate(sim);
    if (perc_cmd->parsed()) return cmd_percolate(perc);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_lattice, bounds_out, bounds_assert);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_graph, oracle_out);
    if (coupling_cmd->parsed()) return cmd_coupling(coupling);
    if (conc_cmd->parsed()) return cmd_concentration(conc);
    if (gap_cmd->parsed()) return cmd_gap(gap);
    if (report_cmd->parsed()) {
      if (report_p_opt->count() > 0) {
        report.p = report_p;
      }
      return cmd_report(report);
    }
    std::cerr << "error: no command selected\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace latticestop
