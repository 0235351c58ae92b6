#pragma once

// Cheap bounds on the extremes of D over all n! arrangements: upper bounds on
// D_max by the degree method and the edges method, and upper/lower bounds on
// D_min (the minimum linear arrangement cost).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"
#include "linarr/moments.hpp"

namespace linarr {

/// Every edge is at most n - 1 long.
inline std::uint64_t naive_max(std::uint64_t n, std::uint64_t m) {
  return n == 0 ? 0 : m * (n - 1) * (n - 1);
}

/// Degree method: each vertex's incident lengths are at most those obtained by
/// putting it at one end with its neighbours as far away as possible.
/// Equals m(n - 1/2) - (sum of squared degrees)/4.
inline ExactScalar upper_dm(std::uint64_t n, std::uint64_t m, std::uint64_t sum_k2) {
  if (m == 0) return 0;
  return ratio(BigInt(m) * (2 * n - 1), 2) - ratio(sum_k2, 4);
}

inline ExactScalar upper_dm(const Graph& g) {
  return upper_dm(g.vertex_count(), g.edge_count(), sum_k2(g));
}

/// F(d0): how many edges fit with length in [d0, n-1].
inline std::uint64_t f_of_d0(std::uint64_t n, std::uint64_t d0) {
  require(d0 <= n, "d0 = " + std::to_string(d0) + " outside [0, n]");
  return (n - d0) * (n - d0 + 1) / 2;
}

/// Smallest d0 with F(d0) <= m, by binary search on the non-increasing F.
inline std::uint64_t d_star(std::uint64_t n, std::uint64_t m) {
  require(m <= choose2(n), "m exceeds C(n,2)");
  std::uint64_t lo = 0, hi = n;  // F(n) = 0 <= m
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (f_of_d0(n, mid) <= m) hi = mid; else lo = mid + 1;
  }
  return lo;
}

/// Edges method: D of the graph packing the longest possible edges.
/// (m - F(d*))(d* - 1) + (n - d*)(n^2 + (n+3)d* - 2d*^2 - 1)/6.
inline std::uint64_t upper_em(std::uint64_t n, std::uint64_t m) {
  const std::uint64_t d = d_star(n, m);
  if (d == 0) return 0;  // only when n = 0
  const std::uint64_t packed = (n - d) * (n * n + (n + 3) * d - 2 * d * d - 1) / 6;
  return (m - f_of_d0(n, d)) * (d - 1) + packed;
}

inline ExactScalar upper_combined(const Graph& g) {
  return std::min(upper_dm(g), ExactScalar(upper_em(g.vertex_count(), g.edge_count())));
}

/// D_min >= D(K_n) - (edges-method bound on the complement), floored at m.
inline std::uint64_t minla_lower(std::uint64_t n, std::uint64_t m) {
  require(m <= choose2(n), "m exceeds C(n,2)");
  const std::uint64_t complement = upper_em(n, choose2(n) - m);
  const std::uint64_t total = complete_graph_d(n);
  const std::uint64_t bound = total > complement ? total - complement : 0;
  return std::max(bound, m);
}

/// Bhatia-Davis: D_min <= E[D] - V[D] / (D_max - E[D]). Any surrogate above
/// D_max keeps the bound valid.
inline ExactScalar bhatia_davis_minla_upper(const Graph& g, const ExactScalar& dmax_surrogate) {
  const ExactScalar e = expected_d(g);
  require(dmax_surrogate > e, "D_max surrogate " + to_string(dmax_surrogate) +
                                  " must exceed E[D] = " + to_string(e));
  return e - variance_d(g) / (dmax_surrogate - e);
}

/// Sharma et al.: V <= (D_max - D_min)^2 / 4 - (W / 2V)^2, hence
/// D_min <= D_max - 2 sqrt(V + (W / 2V)^2), with W the third central moment
/// of D. Empty when V = 0.
inline std::optional<double> sharma_minla_upper(double dmax_surrogate, double variance,
                                                double third_central) {
  if (!(variance > 0)) return std::nullopt;
  const double skew_term = third_central / (2 * variance);
  const double radicand = variance + skew_term * skew_term;
  if (radicand < 0) return std::nullopt;
  return dmax_surrogate - 2 * std::sqrt(radicand);
}

struct BoundsReport {
  std::uint64_t naive_max = 0;
  ExactScalar upper_dm;
  std::uint64_t upper_em = 0;
  ExactScalar upper;
  std::uint64_t d_star = 0;
  std::uint64_t f_dstar = 0;
  std::uint64_t minla_lower = 0;
  std::optional<ExactScalar> bhatia_davis_minla_upper;  // absent when upper <= E[D]
};

inline BoundsReport bounds_report(const Graph& g) {
  const std::uint64_t n = g.vertex_count(), m = g.edge_count();
  BoundsReport r;
  r.naive_max = naive_max(n, m);
  r.upper_dm = upper_dm(g);
  r.upper_em = upper_em(n, m);
  r.upper = std::min(r.upper_dm, ExactScalar(r.upper_em));
  r.d_star = d_star(n, m);
  r.f_dstar = f_of_d0(n, r.d_star);
  r.minla_lower = minla_lower(n, m);
  if (r.upper > expected_d(g)) r.bhatia_davis_minla_upper = bhatia_davis_minla_upper(g, r.upper);
  return r;
}

}  // namespace linarr
