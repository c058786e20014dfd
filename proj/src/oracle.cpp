#include "latticestop/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latticestop {

namespace {

unsigned guarded_size(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n > kOracleMaxVertices) {
    throw std::invalid_argument("graph too large for the exact oracle: " + std::to_string(n) +
                                " vertices, limit " + std::to_string(kOracleMaxVertices));
  }
  if (n == 0) {
    throw std::invalid_argument("exact oracle requires at least one vertex");
  }
  return static_cast<unsigned>(n);
}

std::vector<std::uint32_t> adjacency_masks(const Graph& graph) {
  std::vector<std::uint32_t> masks(graph.num_vertices(), 0);
  for (const auto& [u, v] : graph.edges()) {
    masks[static_cast<std::size_t>(u)] |= 1u << v;
    masks[static_cast<std::size_t>(v)] |= 1u << u;
  }
  return masks;
}

// Component count of the subgraph induced by `mask`, by bitmask flood fill.
int component_count_mask(std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
  int comps = 0;
  std::uint32_t rest = mask;
  while (rest != 0) {
    ++comps;
    std::uint32_t comp = 0;
    std::uint32_t frontier = rest & (~rest + 1);
    while (frontier != 0) {
      comp |= frontier;
      std::uint32_t grown = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        grown |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      }
      frontier = grown & mask & ~comp;
    }
    rest &= ~comp;
  }
  return comps;
}

// Sum of component counts over all subsets of each size.
std::vector<std::uint64_t> component_sums_by_size(unsigned n,
                                                  const std::vector<std::uint32_t>& adj) {
  std::vector<std::uint64_t> sums(n + 1, 0);
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    sums[static_cast<std::size_t>(std::popcount(mask))] +=
        static_cast<std::uint64_t>(component_count_mask(mask, adj));
  }
  return sums;
}

// C(i, j) for i, j <= n as plain 64-bit values (n <= 24 keeps these tiny).
std::vector<std::vector<std::uint64_t>> small_binomials(unsigned n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) {
      c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
  }
  return c;
}

// Next bitmask with the same popcount (Gosper).
std::uint32_t next_same_popcount(std::uint32_t v) {
  const std::uint32_t c = v & (~v + 1);
  const std::uint32_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

ExactCurve exact_curve(const Graph& graph) {
  const unsigned n = guarded_size(graph);
  const auto sums = component_sums_by_size(n, adjacency_masks(graph));
  ExactCurve curve;
  curve.values.reserve(n);
  for (unsigned t = 1; t <= n; ++t) {
    curve.values.emplace_back(BigInt(sums[t]), binomial(n, t));
  }
  return curve;
}

GameValue full_info_value(const Graph& graph) {
  const unsigned n = guarded_size(graph);
  const auto adj = adjacency_masks(graph);
  const auto binom = small_binomials(n);

  // Work level by level over subset sizes t = N..1, holding one level at a
  // time. States of size t are indexed by colexicographic rank, which for a
  // fixed popcount coincides with numeric bitmask order, so the Gosper
  // enumeration fills each level sequentially.
  //
  // Values are kept as integers scaled by (N - t)!:
  //   num(S) = max(comp(S) * (N-t)!,  sum over v not in S of num(S + v)),
  // which makes the continuation average a plain sum.
  std::vector<BigInt> next_level;
  std::vector<std::uint64_t> superset_rank(n, 0);
  for (unsigned t = n; t >= 1; --t) {
    const std::uint64_t level_count = binom[n][t];
    std::vector<BigInt> level(level_count);
    const BigInt stay_scale = factorial(n - t);
    std::vector<int> bits(t);
    std::vector<std::uint64_t> prefix(t + 1), suffix(t + 1);
    std::uint32_t mask = (1u << t) - 1;
    for (std::uint64_t rank = 0; rank < level_count; ++rank) {
      BigInt value = component_count_mask(mask, adj) * stay_scale;
      if (t < n) {
        // Colex rank of S is sum_j C(p_j, j) over its ascending bits p_j.
        // Inserting v after i existing bits shifts the later terms by one:
        //   rank(S + v) = prefix[i] + C(v, i+1) + suffix[i].
        unsigned idx = 0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
          bits[idx++] = std::countr_zero(m);
        }
        prefix[0] = 0;
        for (unsigned j = 0; j < t; ++j) {
          prefix[j + 1] = prefix[j] + binom[static_cast<unsigned>(bits[j])][j + 1];
        }
        suffix[t] = 0;
        for (unsigned j = t; j > 0; --j) {
          suffix[j - 1] = suffix[j] + binom[static_cast<unsigned>(bits[j - 1])][j + 1];
        }
        unsigned below = 0;
        unsigned count = 0;
        for (int v = 0; v < static_cast<int>(n); ++v) {
          if ((mask >> v) & 1u) {
            ++below;
            continue;
          }
          superset_rank[count++] =
              prefix[below] + binom[static_cast<unsigned>(v)][below + 1] + suffix[below];
        }
        BigInt go = 0;
        for (unsigned i = 0; i < count; ++i) {
          go += next_level[superset_rank[i]];
        }
        if (go > value) {
          value = std::move(go);
        }
      }
      level[rank] = std::move(value);
      if (rank + 1 < level_count) {
        mask = next_same_popcount(mask);
      }
    }
    next_level = std::move(level);
  }

  // Empty board: the player is forced to reveal one uniformly random vertex.
  // Singleton {v} has colex rank v, so next_level is indexed by vertex.
  BigInt start_sum = 0;
  for (const auto& num : next_level) {
    start_sum += num;
  }

  GameValue result;
  result.full_value = Rational(start_sum, factorial(n));

  const ExactCurve curve = exact_curve(graph);
  std::size_t best_t = 0;
  for (std::size_t t = 1; t < curve.values.size(); ++t) {
    if (curve.values[t] > curve.values[best_t]) {
      best_t = t;
    }
  }
  result.blind_stop = best_t + 1;
  result.blind_value = curve.values[best_t];
  return result;
}

PercolationPolynomial exact_percolation_polynomial(const Graph& graph) {
  const unsigned n = guarded_size(graph);
  const auto sums = component_sums_by_size(n, adjacency_masks(graph));

  // sum_k A_k p^k (1-p)^(N-k) expanded; coefficient of p^j is
  // sum_k A_k (-1)^(j-k) C(N-k, j-k). All coefficients are integers.
  PercolationPolynomial poly;
  poly.coeffs.assign(n + 1, Rational(0));
  for (unsigned j = 0; j <= n; ++j) {
    BigInt c = 0;
    for (unsigned k = 1; k <= j; ++k) {
      const BigInt term = BigInt(sums[k]) * binomial(n - k, j - k);
      if ((j - k) % 2 == 0) {
        c += term;
      } else {
        c -= term;
      }
    }
    poly.coeffs[j] = Rational(c);
  }
  return poly;
}

Rational eval_polynomial(const PercolationPolynomial& poly, const Rational& p) {
  Rational acc = 0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
    acc = acc * p + *it;
  }
  return acc;
}

Rational binomial_mad(unsigned n, const Rational& p) {
  if (p < 0 || p > 1) {
    throw std::invalid_argument("probability must be in [0, 1]");
  }
  if (n == 0) {
    return Rational(0);
  }
  const Rational q = Rational(1) - p;
  std::vector<Rational> p_pow(n + 1), q_pow(n + 1);
  p_pow[0] = 1;
  q_pow[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    p_pow[k] = p_pow[k - 1] * p;
    q_pow[k] = q_pow[k - 1] * q;
  }
  const Rational mean = Rational(n) * p;
  Rational mad = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational dev = Rational(k) - mean;
    mad += Rational(binomial(n, k)) * p_pow[k] * q_pow[n - k] * (dev < 0 ? -dev : dev);
  }
  return mad;
}

}  // namespace latticestop
