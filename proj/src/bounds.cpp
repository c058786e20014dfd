#include "latticestop/bounds.hpp"

#include <initializer_list>
#include <stdexcept>

namespace latticestop {

namespace {

struct CensusTerm {
  Rational coeff;
  unsigned p_pow;
  unsigned q_pow;  // power of (1 - p)
};

RationalPolynomial expand_terms(const Rational& prefactor,
                                std::initializer_list<CensusTerm> terms) {
  RationalPolynomial poly;
  for (const auto& term : terms) {
    poly += RationalPolynomial::monomial(term.coeff, term.p_pow) *
            RationalPolynomial::one_minus_x_pow(term.q_pow);
  }
  return poly.scaled(prefactor);
}

RationalPolynomial square_lower() {
  return RationalPolynomial(
      {0, 1, -2, 0, 1, 0, 0, 0, 1, -1, 2, -4, 2, -4, 2});
}

RationalPolynomial square_upper() {
  return RationalPolynomial({0, 1, -2, 0, 1, 0,
                             Rational(43, 2), Rational(-165, 2), Rational(535, 4),
                             -112, Rational(81, 2), Rational(17, 2), Rational(-29, 2),
                             Rational(11, 2), Rational(-3, 4)});
}

RationalPolynomial triangular_lower() {
  // p - 3p^2 + 2p^3 + p^6(1-p)
  return expand_terms(1, {{1, 1, 0}, {-3, 2, 0}, {2, 3, 0}, {1, 6, 1}});
}

RationalPolynomial triangular_upper() {
  return expand_terms(Rational(1, 2), {{1, 1, 0},
                                       {-2, 2, 0},
                                       {2, 2, 8},
                                       {1, 1, 6},
                                       {1, 3, 0},
                                       {1, 3, 9},
                                       {3, 3, 10},
                                       {1, 4, 10},
                                       {2, 4, 11},
                                       {1, 5, 11}});
}

RationalPolynomial hexagonal_lower() {
  // p - (3/2)p^2 + (1/2)p^6 + p^12(1-p)
  return expand_terms(1, {{1, 1, 0}, {Rational(-3, 2), 2, 0}, {Rational(1, 2), 6, 0}, {1, 12, 1}});
}

RationalPolynomial hexagonal_upper() {
  return expand_terms(Rational(1, 2), {{1, 1, 0},
                                       {Rational(-9, 8), 2, 0},
                                       {Rational(9, 8), 2, 4},
                                       {1, 1, 3},
                                       {Rational(3, 2), 3, 5},
                                       {Rational(1, 8), 6, 0},
                                       {Rational(1, 8), 6, 6},
                                       {Rational(1, 4), 4, 6},
                                       {Rational(3, 2), 4, 6}});
}

// floor(value * scale) as an exact integer.
BigInt floor_scaled(const Rational& value, const BigInt& scale) {
  const Rational scaled = value * Rational(scale);
  const BigInt num = boost::multiprecision::numerator(scaled);
  const BigInt den = boost::multiprecision::denominator(scaled);
  BigInt q = num / den;
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

}  // namespace

BoundsEntry bound_polys(LatticeKind lattice) {
  BoundsEntry entry;
  entry.lattice = lattice;
  switch (lattice) {
    case LatticeKind::square:
      entry.lower = square_lower();
      entry.upper = square_upper();
      entry.reference_lower = 0.12953;
      entry.reference_upper = 0.13268;
      entry.p_max_window = {0.26, 0.28};
      entry.p_max_upper_window = {0.28, 0.30};
      return entry;
    case LatticeKind::triangular:
      entry.lower = triangular_lower();
      entry.upper = triangular_upper();
      entry.reference_lower = 0.09629;
      entry.reference_upper = 0.10107;
      entry.p_max_window = {0.20, 0.22};
      entry.p_max_upper_window = {0.23, 0.25};
      return entry;
    case LatticeKind::hexagonal:
      entry.lower = hexagonal_lower();
      entry.upper = hexagonal_upper();
      entry.reference_lower = 0.16738;
      entry.reference_upper = 0.17144;
      entry.p_max_window = {0.33, 0.35};
      entry.p_max_upper_window = {0.35, 0.37};
      return entry;
  }
  throw std::invalid_argument("unknown lattice");
}

LatticeBoundsResult evaluate_bounds(LatticeKind lattice) {
  const BoundsEntry entry = bound_polys(lattice);
  LatticeBoundsResult result;
  result.lattice = lattice;
  result.lower_max = maximize_poly(entry.lower, Rational(0), Rational(1));
  result.upper_max = maximize_poly(entry.upper, Rational(0), Rational(1));
  // Truncate the lower value, round the upper value up, and take the gap on
  // the same 1e-5 grid, all in exact integer arithmetic.
  const BigInt scale = 100000;
  const BigInt lower_scaled = floor_scaled(result.lower_max.value_exact, scale);
  const BigInt upper_scaled = -floor_scaled(-result.upper_max.value_exact, scale);
  result.table_lower = lower_scaled.convert_to<double>() / 1e5;
  result.table_upper = upper_scaled.convert_to<double>() / 1e5;
  result.table_gap = (upper_scaled - lower_scaled).convert_to<double>() / 1e5;
  return result;
}

std::vector<LatticeBoundsResult> bounds_table() {
  return {evaluate_bounds(LatticeKind::square), evaluate_bounds(LatticeKind::triangular),
          evaluate_bounds(LatticeKind::hexagonal)};
}

}  // namespace latticestop
