#pragma once

// Closed-form moments of D over uniformly random linear arrangements.
//
// E[D] = (n+1)m/3 and, writing S for the sum of squared degrees,
//
//   E[D^2] = (n+1)/45 * [ m(m(5n+4) + 2(n-1)) + (n-4)S/4 ]
//   V[D]   = (n+1)/45 * [ m(2(n-1) - m)       + (n-4)S/4 ]
//
// Both follow from E[D^2] = f0*E0 + f1*E1 + f2*E2, where f_phi counts ordered
// edge pairs sharing phi vertices and E_phi is the expected product of their
// lengths. Everything here is exact rational arithmetic and valid for n, m >= 0.

#include <cstdint>
#include <string>

#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"

namespace linarr {

inline ExactScalar expected_d(std::uint64_t n, std::uint64_t m) {
  require(m <= choose2(n), "m = " + std::to_string(m) + " exceeds C(n,2) for n = " +
                               std::to_string(n));
  return ratio(BigInt(n + 1) * m, 3);
}

inline ExactScalar expected_d(const Graph& g) {
  return expected_d(g.vertex_count(), g.edge_count());
}

/// Expected product of the lengths of two edges sharing phi vertices.
/// Defined for n >= 4 - phi.
inline ExactScalar e_phi(std::uint64_t n, int phi) {
  require(phi >= 0 && phi <= 2, "phi must be 0, 1 or 2");
  require(n >= static_cast<std::uint64_t>(4 - phi),
          "E_" + std::to_string(phi) + " needs n >= " + std::to_string(4 - phi));
  const BigInt nn = n;
  switch (phi) {
    case 0: return ratio((nn + 1) * (5 * nn + 4), 45);
    case 1: return ratio((nn + 1) * (7 * nn + 4), 60);
    default: return ratio(nn * (nn + 1), 6);
  }
}

struct FCounts {
  BigInt f0;  // ordered pairs of distinct, independent edges
  BigInt f1;  // ordered pairs of distinct edges sharing a vertex
  BigInt f2;  // an edge paired with itself
};

inline FCounts f_counts(std::uint64_t m, std::uint64_t q) {
  FCounts f;
  f.f2 = m;
  f.f0 = BigInt(2) * q;
  f.f1 = BigInt(m) * (m == 0 ? 0 : m - 1) - f.f0;
  return f;
}

inline FCounts f_counts(const Graph& g) {
  return f_counts(g.edge_count(), independent_pairs(g).q);
}

namespace detail {

inline ExactScalar degree_term(std::uint64_t n, const ExactScalar& sum_k2) {
  return ExactScalar(BigInt(static_cast<std::int64_t>(n) - 4)) * sum_k2 / 4;
}

}  // namespace detail

/// E[D^2] from (n, m, sum of squared degrees). The degree sum may be an
/// expectation over an ensemble, hence rational.
inline ExactScalar second_moment_d(std::uint64_t n, std::uint64_t m, const ExactScalar& sum_k2) {
  const BigInt nn = n, mm = m;
  const ExactScalar bracket =
      ExactScalar(mm * (mm * (5 * nn + 4) + 2 * (nn - 1))) + detail::degree_term(n, sum_k2);
  return ratio(nn + 1, 45) * bracket;
}

inline ExactScalar second_moment_d(const Graph& g) {
  return second_moment_d(g.vertex_count(), g.edge_count(), ExactScalar(sum_k2(g)));
}

inline ExactScalar variance_d(std::uint64_t n, std::uint64_t m, const ExactScalar& sum_k2) {
  const BigInt nn = n, mm = m;
  const ExactScalar bracket =
      ExactScalar(mm * (2 * (nn - 1) - mm)) + detail::degree_term(n, sum_k2);
  return ratio(nn + 1, 45) * bracket;
}

inline ExactScalar variance_d(const Graph& g) {
  return variance_d(g.vertex_count(), g.edge_count(), ExactScalar(sum_k2(g)));
}

/// Necessary conditions on the squared-degree sum of a tree on n vertices:
/// even, and between the path's 4n-6 and the star's n(n-1).
inline bool tree_consistent_sum_k2(std::uint64_t n, std::uint64_t sum_k2) {
  if (n == 0) return false;
  if (n == 1) return sum_k2 == 0;
  return sum_k2 % 2 == 0 && sum_k2 >= 4 * n - 6 && sum_k2 <= n * (n - 1);
}

struct TreeMoments {
  ExactScalar e_d2;
  ExactScalar var_d;
};

inline TreeMoments tree_moments(std::uint64_t n, std::uint64_t sum_k2) {
  require(tree_consistent_sum_k2(n, sum_k2),
          "sum of squared degrees " + std::to_string(sum_k2) +
              " is inconsistent with a tree on " + std::to_string(n) + " vertices");
  const BigInt nn = n;
  const ExactScalar degree = detail::degree_term(n, ExactScalar(sum_k2));
  const ExactScalar scale = ratio(nn + 1, 45);
  return TreeMoments{
      scale * (ExactScalar((nn - 1) * (nn - 1) * (5 * nn + 6)) + degree),
      scale * (ExactScalar((nn - 1) * (nn - 1)) + degree),
  };
}

struct SpecialRow {
  ExactScalar e_d;
  ExactScalar e_d2;
  ExactScalar var_d;
};

/// Smallest n for which every entry of a special graph's row holds.
inline std::uint64_t special_table_min_n(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::single_edge:
    case SpecialKind::linear_tree: return 2;
    case SpecialKind::star_tree: return 1;
    default: return 0;
  }
}

/// Tabulated closed forms for the special graphs, independent of the general
/// formulas above.
inline SpecialRow special_table(SpecialKind kind, std::uint64_t n) {
  require(n >= special_table_min_n(kind),
          to_string(kind) + " row needs n >= " + std::to_string(special_table_min_n(kind)));
  const BigInt nn = n;
  switch (kind) {
    case SpecialKind::empty:
      return {0, 0, 0};
    case SpecialKind::single_edge:
      return {ratio(nn + 1, 3), ratio(nn * (nn + 1), 6), ratio((nn + 1) * (nn - 2), 18)};
    case SpecialKind::linear_tree:
      return {ratio(nn * nn - 1, 3),
              ratio((nn + 1) * (10 * nn * nn * nn - 6 * nn * nn - 25 * nn + 24), 90),
              ratio((nn + 1) * (nn - 2) * (4 * nn - 7), 90)};
    case SpecialKind::star_tree:
      return {ratio(nn * nn - 1, 3), ratio((nn * nn - 1) * (7 * nn * nn - 8), 60),
              ratio((nn * nn - 1) * (nn * nn - 4), 180)};
    case SpecialKind::complete: {
      const ExactScalar d = ratio((nn * nn - 1) * nn, 6);
      return {d, d * d, 0};
    }
  }
  return {};
}

/// <k^2> of the path and of the star on n vertices.
inline ExactScalar linear_tree_k2(std::uint64_t n) { return ratio(BigInt(4) * n - 6, n); }
inline ExactScalar star_tree_k2(std::uint64_t n) { return ExactScalar(BigInt(n) - 1); }

/// Hubiness: <k^2> of a tree rescaled so the path maps to 0 and the star to 1.
inline ExactScalar hubiness(std::uint64_t n, std::uint64_t sum_k2) {
  require(n >= 4, "hubiness needs n >= 4 (path and star coincide below)");
  require(tree_consistent_sum_k2(n, sum_k2),
          "sum of squared degrees " + std::to_string(sum_k2) +
              " is inconsistent with a tree on " + std::to_string(n) + " vertices");
  const ExactScalar k2 = ratio(sum_k2, n);
  const ExactScalar lo = linear_tree_k2(n);
  return (k2 - lo) / (star_tree_k2(n) - lo);
}

struct MomentsReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sum_k2 = 0;
  std::uint64_t q = 0;
  FCounts f;
  ExactScalar e_d;
  ExactScalar e_d2;
  ExactScalar var_d;
};

inline MomentsReport moments_report(const Graph& g) {
  MomentsReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.sum_k2 = sum_k2(g);
  r.q = independent_pairs(g).q;
  r.f = f_counts(r.m, r.q);
  r.e_d = expected_d(r.n, r.m);
  r.e_d2 = second_moment_d(r.n, r.m, ExactScalar(r.sum_k2));
  r.var_d = variance_d(r.n, r.m, ExactScalar(r.sum_k2));
  return r;
}

}  // namespace linarr
