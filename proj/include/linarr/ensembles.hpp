#pragma once

// Arrangement statistics averaged over random-graph ensembles: Erdos-Renyi
// G(n,m), Gilbert G(n,pi) and uniformly random labelled trees. Exact values
// use big-integer binomials; Monte Carlo curves follow the replica contract
// in random.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"
#include "linarr/moments.hpp"
#include "linarr/random.hpp"
#include "linarr/stats.hpp"

namespace linarr {

inline void check_gnm(std::uint64_t n, std::uint64_t m) {
  require(m <= choose2(n), "G(n,m) needs m <= C(n,2): n = " + std::to_string(n) +
                               ", m = " + std::to_string(m));
}

/// Probability that a given vertex of a G(n,m) graph has degree k.
inline ExactScalar gnm_degree_pmf(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  check_gnm(n, m);
  require(n >= 1 && k <= n - 1, "degree k must lie in [0, n-1]");
  const auto others = static_cast<std::int64_t>(choose2(n - 1));
  return ratio(binomial(n - 1, k) * binomial(others, static_cast<std::int64_t>(m) - static_cast<std::int64_t>(k)),
               binomial(choose2(n), m));
}

/// E[<k^2>] over G(n,m), by summing k^2 p(k). No closed form is used.
inline ExactScalar gnm_expected_k2(std::uint64_t n, std::uint64_t m) {
  check_gnm(n, m);
  if (n == 0 || m == 0) return 0;
  const std::uint64_t others = choose2(n - 1);
  const std::uint64_t k_max = std::min(n - 1, m);

  // Walk k downwards so j = m - k walks upwards and C(others, j) updates in place.
  std::uint64_t j = m - k_max;
  BigInt c_others = binomial(others, j);
  BigInt c_vertex = binomial(n - 1, k_max);
  BigInt total = 0;
  for (std::uint64_t k = k_max;; --k, ++j) {
    if (j > others) break;
    total += c_vertex * c_others * k * k;
    if (k == 0) break;
    c_vertex = c_vertex * k / (n - k);  // C(n-1, k-1)
    c_others = c_others * (others - j) / (j + 1);
  }
  return ratio(total, binomial(choose2(n), m));
}

/// E_{n,m}[V[D]], exact.
inline ExactScalar gnm_expected_variance_exact(std::uint64_t n, std::uint64_t m) {
  check_gnm(n, m);
  if (n == 0) return 0;
  return variance_d(n, m, ExactScalar(n) * gnm_expected_k2(n, m));
}

inline ExactScalar density(std::uint64_t n, std::uint64_t m) {
  check_gnm(n, m);
  return n < 2 ? ExactScalar(0) : ratio(m, choose2(n));
}

/// <k^2> of G(n, pi): (n-1)pi((n-2)pi + 1).
inline ExactScalar gnp_expected_k2(std::uint64_t n, const ExactScalar& pi) {
  require(pi >= 0 && pi <= 1, "pi must lie in [0, 1]");
  if (n < 2) return 0;
  return ExactScalar(n - 1) * pi * (ExactScalar(n - 2) * pi + 1);
}

/// E_{n,m}[<k^2>] approximated by G(n, pi) with pi = m / C(n,2).
inline ExactScalar binomial_k2(std::uint64_t n, std::uint64_t m) {
  return gnp_expected_k2(n, density(n, m));
}

/// Closed-form E_{n,m}[V[D]] under the binomial degree approximation.
inline ExactScalar gnm_expected_variance_binomial(std::uint64_t n, std::uint64_t m) {
  check_gnm(n, m);
  if (n < 2) return 0;
  const BigInt nn = n, mm = m;
  return ratio((nn + 1) * mm, 45) *
         (ratio((8 - 5 * nn) * mm, nn * (nn - 1)) + 2 * (ratio(5 * nn, 4) - 2));
}

/// Closed-form E_{n,m}[E[D^2]] under the binomial degree approximation.
inline ExactScalar gnm_expected_second_moment_binomial(std::uint64_t n, std::uint64_t m) {
  check_gnm(n, m);
  if (n < 2) return 0;
  const BigInt nn = n, mm = m;
  return ratio(mm * (nn + 1), 90) *
         (ratio(2 * mm * (5 * nn * (nn * nn - 2) + 8), nn * (nn - 1)) + ExactScalar(5 * nn - 8));
}

/// Edge count at which the binomial-approximated variance peaks.
inline ExactScalar gnm_mstar(std::uint64_t n) {
  require(n >= 2, "m* needs n >= 2");
  return ratio(BigInt(n) * (n - 1), 4);
}

/// <k^2> under a Poisson degree approximation with mean 2m/n.
inline ExactScalar poisson_k2(std::uint64_t n, std::uint64_t m) {
  require(n >= 1, "Poisson approximation needs n >= 1");
  const ExactScalar lambda = ratio(BigInt(2) * m, n);
  return lambda * (1 + lambda);
}

inline ExactScalar gnm_expected_variance_poisson(std::uint64_t n, std::uint64_t m) {
  check_gnm(n, m);
  if (n == 0) return 0;
  return variance_d(n, m, ExactScalar(n) * poisson_k2(n, m));
}

/// All C(n,2) edges in lexicographic order.
inline std::vector<std::pair<Vertex, Vertex>> complete_edge_list(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(choose2(n));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return edges;
}

/// Uniform G(n,m) graph: the first m entries of a shuffled complete edge list.
inline Graph gen_gnm(std::size_t n, std::size_t m, Rng& rng) {
  check_gnm(n, m);
  auto edges = complete_edge_list(n);
  shuffle(edges, rng);
  edges.resize(m);
  return Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

inline Graph gen_gnm(std::size_t n, std::size_t m, RngSeed seed) {
  Rng rng = seed.replica(0);
  return gen_gnm(n, m, rng);
}

/// G(n, pi): each vertex pair linked independently with probability pi.
inline Graph gen_gnp(std::size_t n, double pi, Rng& rng) {
  require(pi >= 0.0 && pi <= 1.0, "pi must lie in [0, 1]");
  std::bernoulli_distribution coin(pi);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

/// Labelled tree on n >= 2 vertices from its Pruefer code (length n - 2,
/// entries in 1..n). Linear time.
inline Graph prufer_decode(std::size_t n, std::span<const Vertex> code) {
  require(n >= 2, "Pruefer decoding needs n >= 2");
  require(code.size() == n - 2, "Pruefer code for n = " + std::to_string(n) +
                                    " must have length " + std::to_string(n - 2));
  std::vector<std::uint32_t> degree(n + 1, 1);
  for (Vertex x : code) {
    require(x >= 1 && x <= n, "Pruefer code entry " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex x : code) {
    edges.emplace_back(leaf, x);
    degree[leaf] = 0;
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      do ++ptr; while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, static_cast<Vertex>(n));
  return Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

/// Uniformly random labelled tree via a uniformly random Pruefer code.
inline Graph gen_random_tree(std::size_t n, Rng& rng) {
  require(n >= 1, "a tree needs n >= 1");
  if (n == 1) return Graph::build(1, {});
  std::vector<Vertex> code(n - 2);
  for (Vertex& x : code) x = static_cast<Vertex>(1 + uniform_below(rng, n));
  return prufer_decode(n, code);
}

inline Graph gen_random_tree(std::size_t n, RngSeed seed) {
  Rng rng = seed.replica(0);
  return gen_random_tree(n, rng);
}

/// E_rlt[<k^2>] over uniformly random labelled trees: (1 - 1/n)(5 - 6/n).
inline ExactScalar rlt_expected_k2(std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const BigInt nn = n;
  return ratio((nn - 1) * (5 * nn - 6), nn * nn);
}

/// E_rlt[V[D]], obtained by feeding rlt_expected_k2 into the tree variance.
/// Equals (n+1)(n-1)(n-2)(3n-4) / (60n).
inline ExactScalar rlt_expected_variance(std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const BigInt nn = n;
  return ratio(nn + 1, 45) *
         (ExactScalar((nn - 1) * (nn - 1)) + ratio(nn - 4, 4) * ExactScalar(nn) * rlt_expected_k2(n));
}

/// The published polynomial (n+1)(n-1)(13n^2 - 54n + 48) / (360n). It does
/// not match exhaustive enumeration (5/12 instead of 1 at n = 4); kept only
/// for the diagnostic comparison.
inline ExactScalar rlt_expected_variance_printed(std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const BigInt nn = n;
  return ratio((nn + 1) * (nn - 1) * (13 * nn * nn - 54 * nn + 48), 360 * nn);
}

/// E_rlt[E[D^2]] = (n+2)(n+1)(n-1)(4n-3)(5n-4) / (180n).
inline ExactScalar rlt_expected_second_moment(std::uint64_t n) {
  require(n >= 1, "n must be >= 1");
  const BigInt nn = n;
  return ratio((nn + 2) * (nn + 1) * (nn - 1) * (4 * nn - 3) * (5 * nn - 4), 180 * nn);
}

// ---------------------------------------------------------------------------
// Curves

enum class Statistic { mean, second_moment, variance };
enum class Approximation { none, binomial, poisson };

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t replicas = 0;
};

struct CurveRow {
  double parameter = 0;
  ExactScalar exact;
  std::optional<ExactScalar> approx;
  std::optional<McEstimate> mc;
  std::vector<std::pair<std::string, ExactScalar>> references;  // extra named columns
};

struct EnsembleCurve {
  std::vector<CurveRow> rows;
};

namespace detail {

inline McEstimate estimate(const MomentAccumulator& of_d, const MomentAccumulator& of_d2,
                           Statistic statistic) {
  switch (statistic) {
    case Statistic::mean:
      return {of_d.mean(), of_d.stderr_mean(), of_d.count()};
    case Statistic::second_moment:
      return {of_d2.mean(), of_d2.stderr_mean(), of_d2.count()};
    case Statistic::variance:
      return {of_d.variance(), of_d.stderr_variance(), of_d.count()};
  }
  return {};
}

inline void check_mc(const McOptions& mc, Statistic statistic) {
  require(mc.replicas >= 1, "Monte Carlo needs at least one replica");
  require(statistic != Statistic::variance || mc.replicas >= 2,
          "a sample variance needs at least 2 replicas");
}

}  // namespace detail

/// Exact value of a statistic averaged over G(n,m).
inline ExactScalar gnm_exact(std::uint64_t n, std::uint64_t m, Statistic statistic) {
  switch (statistic) {
    case Statistic::mean: return expected_d(n, m);
    case Statistic::second_moment: {
      const ExactScalar e = expected_d(n, m);
      return gnm_expected_variance_exact(n, m) + e * e;
    }
    case Statistic::variance: return gnm_expected_variance_exact(n, m);
  }
  return 0;
}

inline std::optional<ExactScalar> gnm_approx(std::uint64_t n, std::uint64_t m, Statistic statistic,
                                             Approximation approximation) {
  if (approximation == Approximation::none || statistic == Statistic::mean) return std::nullopt;
  if (approximation == Approximation::binomial) {
    return statistic == Statistic::variance ? gnm_expected_variance_binomial(n, m)
                                            : gnm_expected_second_moment_binomial(n, m);
  }
  const ExactScalar v = gnm_expected_variance_poisson(n, m);
  if (statistic == Statistic::variance) return v;
  const ExactScalar e = expected_d(n, m);
  return v + e * e;
}

/// Curve over m for G(n,m). Empty m_values means every m in [0, C(n,2)].
///
/// Each Monte Carlo replica shuffles the complete edge list once and draws
/// one random arrangement; the graph with m edges is the first m entries, so
/// one replica yields a D sample for every m.
inline EnsembleCurve gnm_curve(std::uint64_t n, Statistic statistic, Approximation approximation,
                               const std::optional<McOptions>& mc,
                               std::vector<std::uint64_t> m_values = {}) {
  const std::uint64_t max_m = choose2(n);
  if (m_values.empty()) {
    m_values.resize(max_m + 1);
    std::iota(m_values.begin(), m_values.end(), std::uint64_t{0});
  }
  std::sort(m_values.begin(), m_values.end());
  m_values.erase(std::unique(m_values.begin(), m_values.end()), m_values.end());
  for (auto m : m_values) check_gnm(n, m);

  EnsembleCurve curve;
  for (auto m : m_values) {
    CurveRow row;
    row.parameter = static_cast<double>(m);
    row.exact = gnm_exact(n, m, statistic);
    row.approx = gnm_approx(n, m, statistic, approximation);
    curve.rows.push_back(std::move(row));
  }
  if (!mc) return curve;
  detail::check_mc(*mc, statistic);

  const auto edges = complete_edge_list(n);
  std::vector<MomentAccumulator> of_d(m_values.size()), of_d2(m_values.size());
  for_each_replica<std::vector<std::uint64_t>>(
      mc->replicas, mc->seed, mc->workers,
      [&](std::size_t, Rng& rng) {
        auto shuffled = edges;
        shuffle(shuffled, rng);
        const LinearArrangement a = random_arrangement(n, rng);
        std::vector<std::uint64_t> samples;
        samples.reserve(m_values.size());
        std::uint64_t d = 0;
        std::size_t next = 0;
        for (std::uint64_t m = 0; next < m_values.size(); ++m) {
          if (m_values[next] == m) {
            samples.push_back(d);
            ++next;
          }
          if (m < shuffled.size()) {
            const auto [u, v] = shuffled[m];
            d += edge_length(Edge{u, v}, a);
          }
        }
        return samples;
      },
      [&](const std::vector<std::uint64_t>& samples) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
          const auto x = static_cast<double>(samples[i]);
          of_d[i].add(x);
          of_d2[i].add(x * x);
        }
      });
  for (std::size_t i = 0; i < curve.rows.size(); ++i) {
    curve.rows[i].mc = detail::estimate(of_d[i], of_d2[i], statistic);
  }
  return curve;
}

inline ExactScalar rlt_exact(std::uint64_t n, Statistic statistic) {
  switch (statistic) {
    case Statistic::mean: return ratio(BigInt(n) * n - 1, 3);
    case Statistic::second_moment: return rlt_expected_second_moment(n);
    case Statistic::variance: return rlt_expected_variance(n);
  }
  return 0;
}

/// Curve over n for uniformly random labelled trees, with the path and star
/// values as reference columns. Monte Carlo samples D over independent
/// (random tree, random arrangement) pairs; n uses the sub-seed derive(n).
inline EnsembleCurve rlt_curve(const std::vector<std::uint64_t>& n_values, Statistic statistic,
                               const std::optional<McOptions>& mc) {
  if (mc) detail::check_mc(*mc, statistic);
  EnsembleCurve curve;
  for (auto n : n_values) {
    require(n >= 2, "tree curves need n >= 2");
    CurveRow row;
    row.parameter = static_cast<double>(n);
    row.exact = rlt_exact(n, statistic);
    const SpecialRow path = special_table(SpecialKind::linear_tree, n);
    const SpecialRow star = special_table(SpecialKind::star_tree, n);
    auto pick = [&](const SpecialRow& r) {
      return statistic == Statistic::mean ? r.e_d
             : statistic == Statistic::second_moment ? r.e_d2 : r.var_d;
    };
    row.references = {{"linear", pick(path)}, {"star", pick(star)}};
    if (mc) {
      MomentAccumulator of_d, of_d2;
      for_each_replica<std::uint64_t>(
          mc->replicas, mc->seed.derive(n), mc->workers,
          [&](std::size_t, Rng& rng) {
            const Graph tree = gen_random_tree(n, rng);
            return sum_edge_lengths(tree, random_arrangement(n, rng));
          },
          [&](std::uint64_t d) {
            const auto x = static_cast<double>(d);
            of_d.add(x);
            of_d2.add(x * x);
          });
      row.mc = detail::estimate(of_d, of_d2, statistic);
    }
    curve.rows.push_back(std::move(row));
  }
  return curve;
}

struct HubinessRow {
  std::uint64_t sum_k2 = 0;
  ExactScalar k2;
  ExactScalar h;
  ExactScalar var_d;
  ExactScalar var_normalized;  // divided by D of the complete graph
};

/// V[D] of trees on n vertices against hubiness, for every even sum of
/// squared degrees between the path's and the star's.
inline std::vector<HubinessRow> hubiness_sweep(std::uint64_t n) {
  require(n >= 4, "hubiness sweep needs n >= 4");
  std::vector<HubinessRow> rows;
  for (std::uint64_t s = 4 * n - 6; s <= n * (n - 1); s += 2) {
    HubinessRow row;
    row.sum_k2 = s;
    row.k2 = ratio(s, n);
    row.h = hubiness(n, s);
    row.var_d = tree_moments(n, s).var_d;
    row.var_normalized = row.var_d / ExactScalar(complete_graph_d(n));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace linarr
