#pragma once

#include <cstddef>
#include <vector>

#include "latticestop/rational.hpp"

namespace latticestop {

// Univariate polynomial with exact rational coefficients, indexed by power.
// Trailing zero coefficients are trimmed on construction.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial monomial(Rational coefficient, unsigned power);
  // (1 - x)^k with exact binomial coefficients.
  static RationalPolynomial one_minus_x_pow(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero beyond the stored degree.
  Rational coeff(std::size_t power) const;

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;
  RationalPolynomial derivative() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    a += b;
    return a;
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial scaled(const Rational& factor) const;

  bool operator==(const RationalPolynomial& other) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct MaxResult {
  double argmax = 0.0;
  double value = 0.0;
  double bracket_width = 0.0;
  Rational argmax_exact;
  Rational value_exact;
};

// Global maximum of `poly` over [lo, hi]: the exact derivative is sampled on
// a uniform grid, every sign change is bisected down to `bracket_tol`, and
// the best of {bracket midpoints, exact grid zeros, endpoints} is selected by
// exact rational comparison. All sign evaluations are exact (integer-scaled
// Horner), so no critical point visible at the grid resolution is missed.
MaxResult maximize_poly(const RationalPolynomial& poly, const Rational& lo, const Rational& hi,
                        unsigned grid_intervals = 10000, double bracket_tol = 1e-12);

}  // namespace latticestop
