#pragma once

#include <utility>
#include <vector>

#include "latticestop/graph.hpp"
#include "latticestop/polynomial.hpp"

namespace latticestop {

// Per-vertex lower/upper envelopes for the maximal expected component count
// of each lattice, with the published reference values they must bracket.
struct BoundsEntry {
  LatticeKind lattice = LatticeKind::square;
  RationalPolynomial lower;  // f: E[components]/N >= f(p) + o(1)
  RationalPolynomial upper;  // g: E[components]/N <= g(p) + o(1)
  double reference_lower = 0.0;
  double reference_upper = 0.0;
  std::pair<double, double> p_max_window;        // where f peaks
  std::pair<double, double> p_max_upper_window;  // where g peaks
};

// Exact-coefficient bound polynomials. The square pair is transcribed as the
// explicit coefficient lists; the triangular and hexagonal polynomials are
// expanded programmatically from their c * p^a * (1-p)^b census terms.
BoundsEntry bound_polys(LatticeKind lattice);

struct LatticeBoundsResult {
  LatticeKind lattice = LatticeKind::square;
  MaxResult lower_max;  // max of f on [0, 1]
  MaxResult upper_max;  // max of g on [0, 1]
  // Conservative 5-decimal table values: lower truncated toward zero, upper
  // rounded up, so '[table_lower, table_upper]' certifies containment.
  double table_lower = 0.0;
  double table_upper = 0.0;
  double table_gap = 0.0;
};

LatticeBoundsResult evaluate_bounds(LatticeKind lattice);

// One row per lattice: square, triangular, hexagonal.
std::vector<LatticeBoundsResult> bounds_table();

}  // namespace latticestop
