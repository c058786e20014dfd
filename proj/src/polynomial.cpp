#include "latticestop/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace latticestop {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

RationalPolynomial RationalPolynomial::monomial(Rational coefficient, unsigned power) {
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = std::move(coefficient);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::one_minus_x_pow(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    c[j] = Rational(binomial(k, j));
    if (j % 2 == 1) {
      c[j] = -c[j];
    }
  }
  return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double RationalPolynomial::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + rational_to_double(*it);
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    c[k - 1] = coeffs_[k] * Rational(static_cast<unsigned>(k));
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] += other.coeffs_[k];
  }
  trim();
  return *this;
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + b.scaled(Rational(-1));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::scaled(const Rational& factor) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) {
    v *= factor;
  }
  return RationalPolynomial(std::move(c));
}

namespace {

// Integer-rescaled coefficients: c_i * lcm(denominators). Sign evaluations of
// the original polynomial at rationals reduce to pure integer Horner.
std::vector<BigInt> integer_scaled(const RationalPolynomial& poly) {
  BigInt lcm = 1;
  for (const auto& c : poly.coeffs()) {
    const BigInt den = boost::multiprecision::denominator(c);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  std::vector<BigInt> scaled;
  scaled.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) {
    scaled.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
  }
  return scaled;
}

// Sign of sum_i scaled[i] * x^i at x = a/b (b > 0): evaluates
// sum_i scaled[i] a^i b^(d-i) by Horner with precomputed powers of b.
int sign_at(const std::vector<BigInt>& scaled, const Rational& x) {
  if (scaled.empty()) {
    return 0;
  }
  const BigInt a = boost::multiprecision::numerator(x);
  const BigInt b = boost::multiprecision::denominator(x);
  const std::size_t d = scaled.size() - 1;
  std::vector<BigInt> b_pow(d + 1);
  b_pow[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    b_pow[i] = b_pow[i - 1] * b;
  }
  BigInt acc = scaled[d];
  for (std::size_t i = d; i > 0; --i) {
    acc = acc * a + scaled[i - 1] * b_pow[d - i + 1];
  }
  return acc.sign();
}

}  // namespace

MaxResult maximize_poly(const RationalPolynomial& poly, const Rational& lo, const Rational& hi,
                        unsigned grid_intervals, double bracket_tol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("maximize_poly requires lo < hi");
  }
  if (grid_intervals == 0) {
    throw std::invalid_argument("maximize_poly requires a nonempty grid");
  }

  struct Candidate {
    Rational x;
    double bracket_width;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({lo, 0.0});
  candidates.push_back({hi, 0.0});

  const RationalPolynomial deriv = poly.derivative();
  if (!deriv.is_zero()) {
    const std::vector<BigInt> scaled = integer_scaled(deriv);
    const Rational step = (hi - lo) / Rational(grid_intervals);

    Rational x_prev = lo;
    int s_prev = sign_at(scaled, x_prev);
    if (s_prev == 0) {
      candidates.push_back({x_prev, 0.0});
    }
    for (unsigned k = 1; k <= grid_intervals; ++k) {
      const Rational x_cur = (k == grid_intervals) ? hi : lo + step * Rational(k);
      const int s_cur = sign_at(scaled, x_cur);
      if (s_cur == 0) {
        candidates.push_back({x_cur, 0.0});
      } else if (s_prev != 0 && s_cur != s_prev) {
        // Bisect the sign change down to the requested bracket width.
        Rational a = x_prev;
        Rational b = x_cur;
        int sa = s_prev;
        while (rational_to_double(b - a) > bracket_tol) {
          const Rational mid = (a + b) / 2;
          const int sm = sign_at(scaled, mid);
          if (sm == 0) {
            a = mid;
            b = mid;
            break;
          }
          if (sm == sa) {
            a = mid;
          } else {
            b = mid;
          }
        }
        candidates.push_back({(a + b) / 2, rational_to_double(b - a)});
      }
      x_prev = x_cur;
      s_prev = s_cur;
    }
  }

  const Candidate* best = nullptr;
  Rational best_value;
  for (const auto& cand : candidates) {
    const Rational value = poly.eval(cand.x);
    if (best == nullptr || value > best_value ||
        (value == best_value && cand.x < best->x)) {
      best = &cand;
      best_value = value;
    }
  }

  MaxResult result;
  result.argmax_exact = best->x;
  result.value_exact = best_value;
  result.argmax = rational_to_double(best->x);
  result.value = rational_to_double(best_value);
  result.bracket_width = best->bracket_width;
  return result;
}

}  // namespace latticestop
