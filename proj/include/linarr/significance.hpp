#pragma once

// Is an observed D unusually small for its graph? z-scores against the random
// arrangement null model, distribution-free tail bounds, and Monte Carlo
// estimates (p-values, central moments).

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linarr/bounds.hpp"
#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"
#include "linarr/moments.hpp"
#include "linarr/random.hpp"
#include "linarr/stats.hpp"

namespace linarr {

/// sign * sqrt(square), kept exact as the signed square.
struct SignedRoot {
  int sign = 0;  // -1, 0 or +1
  ExactScalar square;

  double to_double() const { return sign * std::sqrt(linarr::to_double(square)); }
  SignedRoot operator-() const { return {-sign, square}; }
};

/// (observed - expected) / sqrt(variance) as a signed root.
inline SignedRoot standardized(const ExactScalar& observed, const ExactScalar& expected,
                               const ExactScalar& variance) {
  if (variance == 0) {
    throw Error(ErrorKind::undefined_statistic,
                "z-score undefined: V[D] = 0 (D is the same under every arrangement)");
  }
  const ExactScalar diff = observed - expected;
  return {diff > 0 ? 1 : (diff < 0 ? -1 : 0), diff * diff / variance};
}

struct ZScore {
  std::uint64_t d_observed = 0;
  ExactScalar e_d;
  ExactScalar var_d;
  SignedRoot z;
};

inline ZScore zscore(const Graph& g, std::uint64_t d_observed) {
  ZScore r;
  r.d_observed = d_observed;
  r.e_d = expected_d(g);
  r.var_d = variance_d(g);
  r.z = standardized(ExactScalar(d_observed), r.e_d, r.var_d);
  return r;
}

/// One-sided Chebyshev: P(D_rla <= D) <= 1 / (1 + c^2) for c = -z > 0.
/// Vacuous (1) when c <= 0.
inline ExactScalar cantelli_bound(const SignedRoot& c) {
  if (c.sign <= 0) return 1;
  return 1 / (1 + c.square);
}

/// Tail bound assuming D_rla is symmetric and unimodal:
/// 2 / (9c^2) for c >= 2/3, else 1/2. Vacuous (1) when c <= 0.
inline ExactScalar unimodal_bound(const SignedRoot& c) {
  if (c.sign <= 0) return 1;
  if (c.square >= ratio(4, 9)) return 2 / (9 * c.square);
  return ratio(1, 2);
}

/// Fraction of random arrangements with D <= d_observed (ties count).
/// add_one applies (k + 1) / (R + 1) smoothing.
inline double mc_pvalue(const Graph& g, std::uint64_t d_observed, const McOptions& mc,
                        bool add_one = false) {
  require(mc.replicas >= 1, "Monte Carlo p-value needs R >= 1");
  std::uint64_t hits = 0;
  for_each_replica<std::uint8_t>(
      mc.replicas, mc.seed, mc.workers,
      [&](std::size_t, Rng& rng) -> std::uint8_t {
        return sum_edge_lengths(g, random_arrangement(g.vertex_count(), rng)) <= d_observed;
      },
      [&](std::uint8_t hit) { hits += hit; });
  if (add_one) return static_cast<double>(hits + 1) / static_cast<double>(mc.replicas + 1);
  return static_cast<double>(hits) / static_cast<double>(mc.replicas);
}

struct MomentEstimate {
  double value = 0;
  double std_error = 0;  // reported for order 2 only; 0 otherwise
  std::size_t replicas = 0;
};

/// Sample central moment of D over random arrangements. Order 2 and 3 use
/// the unbiased estimators; order 4 is the plain sample moment.
inline MomentEstimate mc_central_moment(const Graph& g, int order, const McOptions& mc) {
  require(order >= 2 && order <= 4, "central moment order must be 2, 3 or 4");
  require(mc.replicas >= static_cast<std::size_t>(order),
          "need at least " + std::to_string(order) + " replicas");
  MomentAccumulator acc;
  for_each_replica<std::uint64_t>(
      mc.replicas, mc.seed, mc.workers,
      [&](std::size_t, Rng& rng) {
        return sum_edge_lengths(g, random_arrangement(g.vertex_count(), rng));
      },
      [&](std::uint64_t d) { acc.add(static_cast<double>(d)); });
  switch (order) {
    case 2: return {acc.variance(), acc.stderr_variance(), mc.replicas};
    case 3: return {acc.third_central(), 0, mc.replicas};
    default: return {acc.central_moment(4), 0, mc.replicas};
  }
}

struct SharmaEstimate {
  std::optional<double> bound;  // absent when V = 0
  double w_estimate = 0;
  bool approximate = true;  // W is a Monte Carlo estimate
};

/// Sharma-type D_min upper bound with W estimated by Monte Carlo.
inline SharmaEstimate sharma_minla_upper_mc(const Graph& g, double dmax_surrogate,
                                            const McOptions& mc) {
  SharmaEstimate r;
  const double v = to_double(variance_d(g));
  if (!(v > 0)) return r;
  r.w_estimate = mc_central_moment(g, 3, mc).value;
  r.bound = sharma_minla_upper(dmax_surrogate, v, r.w_estimate);
  return r;
}

struct SignificanceReport {
  ZScore z;
  SignedRoot c_star;
  ExactScalar cantelli;
  ExactScalar unimodal;  // assumes a symmetric unimodal D_rla
  std::optional<double> mc_p;
  std::size_t mc_replicas = 0;
};

inline SignificanceReport significance(const Graph& g, std::uint64_t d_observed,
                                       const std::optional<McOptions>& mc = std::nullopt) {
  SignificanceReport r;
  r.z = zscore(g, d_observed);
  r.c_star = -r.z.z;
  r.cantelli = cantelli_bound(r.c_star);
  r.unimodal = unimodal_bound(r.c_star);
  if (mc) {
    r.mc_p = mc_pvalue(g, d_observed, *mc);
    r.mc_replicas = mc->replicas;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Collections (e.g. treebanks)

struct NetworkSummary {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sum_k2 = 0;
  std::uint64_t d = 0;

  static NetworkSummary of(const Graph& g, const LinearArrangement& a) {
    return {g.vertex_count(), g.edge_count(), linarr::sum_k2(g), sum_edge_lengths(g, a)};
  }
};

struct CollectionStats {
  std::uint64_t networks = 0;  // T
  std::uint64_t vertices = 0;  // N
  std::uint64_t edges = 0;     // M
  std::uint64_t total_d = 0;
  ExactScalar mean_d;
  std::optional<double> mean_z;
  std::vector<std::size_t> skipped;  // members with V = 0, excluded from mean_z
};

enum class ZNormalization { by_edges, by_networks };
enum class ZeroVariancePolicy { skip, fail };

/// Mean edge length sum(D) / M and mean z-score sum(z) / M (or / T).
inline CollectionStats collection_stats(std::span<const NetworkSummary> members,
                                        ZNormalization norm = ZNormalization::by_edges,
                                        ZeroVariancePolicy policy = ZeroVariancePolicy::skip) {
  CollectionStats s;
  s.networks = members.size();
  double z_sum = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const NetworkSummary& x = members[i];
    s.vertices += x.n;
    s.edges += x.m;
    s.total_d += x.d;
    const ExactScalar v = variance_d(x.n, x.m, ExactScalar(x.sum_k2));
    if (v == 0) {
      if (policy == ZeroVariancePolicy::fail) {
        throw Error(ErrorKind::undefined_statistic,
                    "network " + std::to_string(i + 1) + " has V[D] = 0; z-score undefined");
      }
      s.skipped.push_back(i);
      continue;
    }
    z_sum += standardized(ExactScalar(x.d), expected_d(x.n, x.m), v).to_double();
  }
  require(s.edges > 0, "mean edge length needs at least one edge in the collection");
  s.mean_d = ratio(s.total_d, s.edges);
  const double denom = norm == ZNormalization::by_edges ? static_cast<double>(s.edges)
                                                        : static_cast<double>(s.networks);
  s.mean_z = z_sum / denom;
  return s;
}

}  // namespace linarr
