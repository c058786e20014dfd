#pragma once

#include <cstddef>
#include <vector>

#include "latticestop/graph.hpp"
#include "latticestop/rational.hpp"

namespace latticestop {

// Hard cap for the subset-enumeration oracles (2^N states).
inline constexpr std::size_t kOracleMaxVertices = 24;

// values[t-1] = exact expected component count after t reveals.
struct ExactCurve {
  std::vector<Rational> values;
};

struct GameValue {
  Rational blind_value;    // max over t of the exact curve
  std::size_t blind_stop;  // smallest maximizing t
  Rational full_value;     // optimal adaptive value, >= blind_value
};

// coeffs[k] = coefficient of p^k in the exact expected component count of the
// Bernoulli(p) occupancy.
struct PercolationPolynomial {
  std::vector<Rational> coeffs;
};

// Averages the component count over all C(N, t) equally likely t-subsets.
// Throws std::invalid_argument when N exceeds kOracleMaxVertices.
ExactCurve exact_curve(const Graph& graph);

// Backward induction over all subsets: the player must reveal at least one
// vertex, may stop at any t >= 1, and at state S either keeps comp(S) or
// continues with a uniformly random unrevealed vertex.
GameValue full_info_value(const Graph& graph);

PercolationPolynomial exact_percolation_polynomial(const Graph& graph);

Rational eval_polynomial(const PercolationPolynomial& poly, const Rational& p);

// Exact mean absolute deviation of a Binomial(n, p) variable.
// Throws std::invalid_argument unless p is in [0, 1].
Rational binomial_mad(unsigned n, const Rational& p);

}  // namespace latticestop
