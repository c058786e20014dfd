#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "latticestop/estimator.hpp"
#include "latticestop/oracle.hpp"
#include "latticestop/polynomial.hpp"
#include "latticestop/reveal.hpp"
#include "latticestop/rng.hpp"
#include "test_util.hpp"

using namespace latticestop;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) {
    out.push_back(rational_from_string(v));
  }
  return out;
}

}  // namespace

TEST_CASE("exact_curve on hand-enumerated graphs") {
  CHECK(exact_curve(testutil::c4()).values == rationals({"1", "4/3", "1", "1"}));
  CHECK(exact_curve(testutil::two_k2()).values == rationals({"1", "5/3", "2", "2"}));
  CHECK(exact_curve(testutil::p3()).values == rationals({"1", "4/3", "1"}));
}

TEST_CASE("exact_curve size guard") {
  const Graph too_big(25, {});
  CHECK_THROWS_AS(exact_curve(too_big), std::invalid_argument);
  CHECK_THROWS_AS(full_info_value(too_big), std::invalid_argument);
  CHECK_THROWS_AS(exact_percolation_polynomial(too_big), std::invalid_argument);
}

TEST_CASE("full_info_value on tiny graphs") {
  const GameValue lonely = full_info_value(Graph(1, {}));
  CHECK(lonely.blind_value == 1);
  CHECK(lonely.full_value == 1);
  CHECK(lonely.blind_stop == 1);

  const GameValue cycle = full_info_value(testutil::c4());
  CHECK(cycle.blind_stop == 2);
  CHECK(cycle.blind_value == Rational(4, 3));
  CHECK(cycle.full_value == Rational(4, 3));

  const GameValue pair = full_info_value(testutil::two_k2());
  CHECK(pair.blind_stop == 3);
  CHECK(pair.blind_value == 2);
  CHECK(pair.full_value == 2);
}

namespace {

// Independent reference for the adaptive value: top-down recursion with a
// plain map memo, structurally unlike the production level-by-level pass.
Rational naive_game_value(const Graph& g, std::uint32_t state,
                          std::map<std::uint32_t, Rational>& memo) {
  const auto n = static_cast<unsigned>(g.num_vertices());
  if (const auto it = memo.find(state); it != memo.end()) {
    return it->second;
  }
  Occupancy occ;
  occ.open.resize(n);
  for (unsigned v = 0; v < n; ++v) {
    occ.open[v] = (state >> v) & 1u;
  }
  const Rational stay(static_cast<unsigned>(count_components(g, occ)));
  Rational result;
  if (state + 1 == (1u << n)) {
    result = stay;
  } else {
    Rational go = 0;
    unsigned missing = 0;
    for (unsigned v = 0; v < n; ++v) {
      if (((state >> v) & 1u) == 0) {
        ++missing;
        go += naive_game_value(g, state | (1u << v), memo);
      }
    }
    go /= missing;
    result = state == 0 ? go : std::max(stay, go);
  }
  memo.emplace(state, result);
  return result;
}

}  // namespace

TEST_CASE("full_info_value agrees with a naive recursive solver") {
  auto rng = trial_rng(8086, 0);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, 9));
    const Graph g = testutil::random_graph(n, 0.35, rng);
    std::map<std::uint32_t, Rational> memo;
    const Rational expected = naive_game_value(g, 0, memo);
    REQUIRE(full_info_value(g).full_value == expected);
  }
}

TEST_CASE("adaptive play never loses to blind play (exact)") {
  auto rng = trial_rng(314, 0);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, 12));
    const Graph g = testutil::random_graph(n, 0.3, rng);
    const GameValue game = full_info_value(g);
    REQUIRE(game.full_value >= game.blind_value);

    // The blind value is the best point on the exact curve.
    Rational curve_max = 0;
    for (const auto& v : exact_curve(g).values) {
      curve_max = std::max(curve_max, v);
    }
    REQUIRE(game.blind_value == curve_max);

    // Both values are bounded by the best component count over any subset.
    Rational best_comp = 0;
    Occupancy occ;
    occ.open.assign(n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      for (std::size_t v = 0; v < n; ++v) {
        occ.open[v] = (mask >> v) & 1u;
      }
      best_comp = std::max(best_comp, Rational(static_cast<unsigned>(count_components(g, occ))));
    }
    REQUIRE(game.blind_value <= best_comp);
    REQUIRE(game.full_value <= best_comp);
  }
}

TEST_CASE("exact percolation polynomials of tiny graphs") {
  CHECK(exact_percolation_polynomial(Graph(1, {})).coeffs == rationals({"0", "1"}));
  CHECK(exact_percolation_polynomial(testutil::k2()).coeffs == rationals({"0", "2", "-1"}));

  // 4-cycle: 4p(1-p)^3 + 8p^2(1-p)^2 + 4p^3(1-p) + p^4, expanded through an
  // independent route.
  RationalPolynomial expected = RationalPolynomial::monomial(4, 1) * RationalPolynomial::one_minus_x_pow(3);
  expected += RationalPolynomial::monomial(8, 2) * RationalPolynomial::one_minus_x_pow(2);
  expected += RationalPolynomial::monomial(4, 3) * RationalPolynomial::one_minus_x_pow(1);
  expected += RationalPolynomial::monomial(1, 4);
  const PercolationPolynomial poly = exact_percolation_polynomial(testutil::c4());
  const RationalPolynomial actual{std::vector<Rational>(poly.coeffs.begin(), poly.coeffs.end())};
  CHECK(actual == expected);
}

TEST_CASE("percolation polynomial endpoints") {
  auto rng = trial_rng(1234, 0);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, 10));
    const Graph g = testutil::random_graph(n, 0.4, rng);
    const PercolationPolynomial poly = exact_percolation_polynomial(g);
    CHECK(eval_polynomial(poly, Rational(0)) == 0);
    Occupancy all;
    all.open.assign(n, 1);
    CHECK(eval_polynomial(poly, Rational(1)) ==
          Rational(static_cast<unsigned>(count_components(g, all))));
  }
}

TEST_CASE("expected percolation count never beats the reveal curve by D*sqrt(N)/2") {
  auto rng = trial_rng(2024, 0);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, 10));
    const Graph g = testutil::random_graph(n, 0.35, rng);
    const ExactCurve curve = exact_curve(g);
    const PercolationPolynomial poly = exact_percolation_polynomial(g);
    const auto deg = static_cast<unsigned>(g.max_degree());
    for (std::size_t t = 1; t <= n; ++t) {
      const Rational at_p = eval_polynomial(poly, Rational(static_cast<unsigned>(t), static_cast<unsigned>(n)));
      const Rational excess = at_p - curve.values[t - 1];
      if (excess <= 0) {
        continue;
      }
      // excess <= (D/2) sqrt(N), compared exactly via squares.
      REQUIRE(4 * excess * excess <= Rational(deg * deg * static_cast<unsigned>(n)));
    }
  }
}

TEST_CASE("maximal percolation mean never beats the blind value by D*sqrt(N)/2") {
  auto rng = trial_rng(2025, 0);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, 10));
    const Graph g = testutil::random_graph(n, 0.35, rng);
    const GameValue game = full_info_value(g);
    const PercolationPolynomial poly = exact_percolation_polynomial(g);
    const auto deg = static_cast<unsigned>(g.max_degree());
    Rational best = 0;
    for (std::size_t t = 1; t <= n; ++t) {
      best = std::max(best, eval_polynomial(
                                poly, Rational(static_cast<unsigned>(t), static_cast<unsigned>(n))));
    }
    const Rational excess = best - game.blind_value;
    if (excess > 0) {
      REQUIRE(4 * excess * excess <= Rational(deg * deg * static_cast<unsigned>(n)));
    }
  }
}

TEST_CASE("binomial mean absolute deviation") {
  CHECK(binomial_mad(1, Rational(1, 2)) == Rational(1, 2));
  CHECK(binomial_mad(4, Rational(1, 2)) == Rational(3, 4));
  CHECK(binomial_mad(17, Rational(0)) == 0);
  CHECK(binomial_mad(0, Rational(1, 3)) == 0);
  CHECK_THROWS_AS(binomial_mad(4, Rational(2)), std::invalid_argument);
}

TEST_CASE("MAD bound sqrt(n)/2 holds exactly for n <= 64") {
  for (unsigned n = 1; n <= 64; ++n) {
    for (unsigned tenths = 1; tenths <= 9; ++tenths) {
      const Rational mad = binomial_mad(n, Rational(tenths, 10));
      REQUIRE(4 * mad * mad <= Rational(n));
    }
  }
}

TEST_CASE("Monte Carlo curve agrees with the exact curve within 4 standard errors") {
  auto rng = trial_rng(555, 0);
  std::vector<Graph> graphs = {testutil::c4(), testutil::p3(), testutil::two_k2()};
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform_below(rng, 7));
    graphs.push_back(testutil::random_graph(n, 0.4, rng));
  }
  const std::uint64_t trials = 100000;
  std::uint64_t seed = 9000;
  for (const Graph& g : graphs) {
    const ExactCurve exact = exact_curve(g);
    const CurveEstimate estimate = estimate_curve(g, trials, seed++);
    for (std::size_t t = 0; t < g.num_vertices(); ++t) {
      const double expected = rational_to_double(exact.values[t]);
      const double se = estimate.sample_std[t] / std::sqrt(static_cast<double>(trials));
      REQUIRE(std::abs(estimate.mean[t] - expected) <= 4 * se + 1e-12);
    }
  }
}

TEST_CASE("rational string round trips") {
  CHECK(rational_to_string(Rational(4, 3)) == "4/3");
  CHECK(rational_to_string(Rational(2)) == "2");
  CHECK(rational_from_string("4/3") == Rational(4, 3));
  CHECK(rational_from_string("-7/2") == Rational(-7, 2));
  CHECK(rational_from_string("12") == Rational(12));
  CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}
