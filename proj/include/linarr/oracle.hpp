#pragma once

// Brute-force ground truth for the closed forms: exhaustive enumeration of
// arrangements, edge-pair placements, labelled trees and small G(n,m)
// ensembles. Nothing in here calls the closed-form moment formulas.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "linarr/bounds.hpp"
#include "linarr/ensembles.hpp"
#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"

namespace linarr {

struct OracleCaps {
  std::size_t max_arrangement_n = 10;  // n! arrangements
  std::size_t max_pair_n = 15;         // edge-pair placements
  std::size_t max_tree_n = 8;          // n^(n-2) labelled trees
  std::uint64_t max_graphs = 50'000'000;
};

[[noreturn]] inline void cap_exceeded(const std::string& what) {
  throw Error(ErrorKind::cap_exceeded, what);
}

/// Exact distribution of D over all n! arrangements of one graph.
struct ExactDistribution {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;  // (D, count), D ascending
  std::uint64_t total = 0;                                      // n!

  ExactScalar raw_moment(int order) const {
    BigInt sum = 0;
    for (const auto& [d, c] : counts) {
      BigInt term = c;
      for (int i = 0; i < order; ++i) term *= d;
      sum += term;
    }
    return ratio(sum, total);
  }

  ExactScalar central_moment(int order) const {
    const ExactScalar mu = mean();
    ExactScalar sum = 0;
    for (const auto& [d, c] : counts) {
      ExactScalar dev = ExactScalar(d) - mu, term = c;
      for (int i = 0; i < order; ++i) term *= dev;
      sum += term;
    }
    return sum / total;
  }

  ExactScalar mean() const { return raw_moment(1); }
  ExactScalar second_moment() const { return raw_moment(2); }
  ExactScalar variance() const { return central_moment(2); }
  ExactScalar third_central() const { return central_moment(3); }

  std::uint64_t d_min() const { return counts.front().first; }
  std::uint64_t d_max() const { return counts.back().first; }

  /// P(D <= x).
  ExactScalar cdf(std::uint64_t x) const {
    std::uint64_t below = 0;
    for (const auto& [d, c] : counts) {
      if (d > x) break;
      below += c;
    }
    return ratio(below, total);
  }
};

/// Visits all n! arrangements with Heap's algorithm, updating D
/// incrementally after each transposition.
inline ExactDistribution enumerate_distribution(const Graph& g, const OracleCaps& caps = {}) {
  const std::size_t n = g.vertex_count();
  if (n > caps.max_arrangement_n) {
    cap_exceeded("enumerate_distribution: n = " + std::to_string(n) + " exceeds cap " +
                 std::to_string(caps.max_arrangement_n));
  }

  // Compressed adjacency, 0-based.
  std::vector<std::uint32_t> offset(n + 1, 0), neighbours(2 * g.edge_count());
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degrees()[v];
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (const Edge& e : g.edges()) {
      neighbours[fill[e.u - 1]++] = e.v - 1;
      neighbours[fill[e.v - 1]++] = e.u - 1;
    }
  }

  std::vector<std::int32_t> pos(n);
  std::vector<std::uint32_t> at(n);  // vertex at each position
  std::iota(pos.begin(), pos.end(), 0);
  std::iota(at.begin(), at.end(), 0u);

  auto local = [&](std::uint32_t v) {
    std::int64_t s = 0;
    for (std::uint32_t i = offset[v]; i < offset[v + 1]; ++i) {
      const std::int32_t diff = pos[v] - pos[neighbours[i]];
      s += diff < 0 ? -diff : diff;
    }
    return s;
  };

  std::int64_t d = 0;
  for (const Edge& e : g.edges()) d += static_cast<std::int64_t>(e.v - e.u);
  std::vector<std::uint64_t> histogram(naive_max(n, g.edge_count()) + 1, 0);
  ++histogram[static_cast<std::size_t>(d)];

  auto transpose = [&](std::size_t p, std::size_t q) {
    const std::uint32_t a = at[p], b = at[q];
    d -= local(a) + local(b);
    std::swap(at[p], at[q]);
    pos[a] = static_cast<std::int32_t>(q);
    pos[b] = static_cast<std::int32_t>(p);
    d += local(a) + local(b);
    ++histogram[static_cast<std::size_t>(d)];
  };

  std::vector<std::size_t> c(n, 0);
  for (std::size_t i = 1; i < n;) {
    if (c[i] < i) {
      transpose(i % 2 == 0 ? 0 : c[i], i);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }

  ExactDistribution dist;
  for (std::size_t x = 0; x < histogram.size(); ++x) {
    if (histogram[x] == 0) continue;
    dist.counts.emplace_back(x, histogram[x]);
    dist.total += histogram[x];
  }
  return dist;
}

/// Average of d_i * d_j over all arrangements for two edges sharing phi
/// vertices. Only the 4 - phi endpoints' positions matter, so placements of
/// those endpoints are enumerated; each stands for (n - (4 - phi))!
/// arrangements of the rest.
inline ExactScalar enumerate_e_phi(std::uint64_t n, int phi, const OracleCaps& caps = {}) {
  require(phi >= 0 && phi <= 2, "phi must be 0, 1 or 2");
  const std::uint64_t k = 4 - static_cast<std::uint64_t>(phi);
  require(n >= k, "E_" + std::to_string(phi) + " needs n >= " + std::to_string(k));
  if (n > caps.max_pair_n) {
    cap_exceeded("enumerate_e_phi: n = " + std::to_string(n) + " exceeds cap " +
                 std::to_string(caps.max_pair_n));
  }
  auto dist = [](std::int64_t x, std::int64_t y) { return x > y ? x - y : y - x; };
  std::uint64_t sum = 0, placements = 0;
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t a = 1; a <= nn; ++a) {
    for (std::int64_t b = 1; b <= nn; ++b) {
      if (b == a) continue;
      if (phi == 2) {
        sum += static_cast<std::uint64_t>(dist(a, b) * dist(a, b));
        ++placements;
        continue;
      }
      for (std::int64_t c = 1; c <= nn; ++c) {
        if (c == a || c == b) continue;
        if (phi == 1) {  // edges {a,b} and {a,c}
          sum += static_cast<std::uint64_t>(dist(a, b) * dist(a, c));
          ++placements;
          continue;
        }
        for (std::int64_t e = 1; e <= nn; ++e) {  // edges {a,b} and {c,e}
          if (e == a || e == b || e == c) continue;
          sum += static_cast<std::uint64_t>(dist(a, b) * dist(c, e));
          ++placements;
        }
      }
    }
  }
  return ratio(sum, placements);
}

/// D of a star tree whose hub sits at position tau.
inline std::uint64_t star_d_tau(std::uint64_t n, std::uint64_t tau) {
  require(tau >= 1 && tau <= n, "hub position tau must lie in [1, n]");
  const auto t = static_cast<std::int64_t>(tau), nn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t * t - (nn + 1) * t + nn * (nn + 1) / 2);
}

struct E01 {
  ExactScalar e0;
  ExactScalar e1;
};

/// Recovers E0 and E1 from two linear equations E[D^2] = sum f_phi E_phi,
/// one for the complete graph and one for the star tree, with E2 and both
/// E[D^2] values obtained by direct enumeration.
inline E01 solve_e01_system(std::uint64_t n) {
  require(n >= 4, "the E0/E1 system needs n >= 4");
  const Graph complete = make_special(SpecialKind::complete, n);
  const Graph star = make_special(SpecialKind::star_tree, n);

  const ExactScalar e2 = enumerate_e_phi(n, 2, OracleCaps{.max_pair_n = 1u << 20});
  const ExactScalar d_complete(sum_edge_lengths(complete, LinearArrangement::identity(n)));
  const ExactScalar complete_d2 = d_complete * d_complete;
  BigInt star_sum = 0;
  for (std::uint64_t tau = 1; tau <= n; ++tau) {
    star_sum += BigInt(star_d_tau(n, tau)) * star_d_tau(n, tau);
  }
  const ExactScalar star_d2 = ratio(star_sum, n);

  const FCounts fk = f_counts(complete);
  const FCounts fs = f_counts(star);
  // [fk.f0 fk.f1] [E0]   [complete_d2 - fk.f2 E2]
  // [fs.f0 fs.f1] [E1] = [star_d2     - fs.f2 E2]
  const ExactScalar a11(fk.f0), a12(fk.f1), a21(fs.f0), a22(fs.f1);
  const ExactScalar b1 = complete_d2 - ExactScalar(fk.f2) * e2;
  const ExactScalar b2 = star_d2 - ExactScalar(fs.f2) * e2;
  const ExactScalar det = a11 * a22 - a12 * a21;
  require(det != 0, "singular E0/E1 system for n = " + std::to_string(n));
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

/// Visits all n^(n-2) labelled trees on n vertices, one per Pruefer code.
template <class Fn>
void for_each_labelled_tree(std::size_t n, Fn&& fn, const OracleCaps& caps = {}) {
  require(n >= 1, "a tree needs n >= 1");
  if (n > caps.max_tree_n) {
    cap_exceeded("labelled tree enumeration: n = " + std::to_string(n) + " exceeds cap " +
                 std::to_string(caps.max_tree_n));
  }
  if (n == 1) {
    fn(Graph::build(1, {}));
    return;
  }
  std::vector<Vertex> code(n - 2, 1);
  while (true) {
    fn(prufer_decode(n, code));
    std::size_t i = 0;
    while (i < code.size() && code[i] == n) code[i++] = 1;
    if (i == code.size()) break;
    ++code[i];
  }
}

/// Visits every graph of G(n,m) once (all m-subsets of the C(n,2) edges).
template <class Fn>
void for_each_gnm_graph(std::size_t n, std::size_t m, Fn&& fn, const OracleCaps& caps = {}) {
  check_gnm(n, m);
  const std::size_t total = choose2(n);
  if (binomial(total, m) > caps.max_graphs) {
    cap_exceeded("G(" + std::to_string(n) + "," + std::to_string(m) + ") has " +
                 binomial(total, m).str() + " graphs, cap is " + std::to_string(caps.max_graphs));
  }
  const auto all = complete_edge_list(n);
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::vector<std::pair<Vertex, Vertex>> chosen(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) chosen[i] = all[pick[i]];
    fn(Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(chosen)));
    // Next combination in lexicographic order.
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == total - m + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Visits every simple graph on n labelled vertices (all edge subsets).
template <class Fn>
void for_each_simple_graph(std::size_t n, Fn&& fn, const OracleCaps& caps = {}) {
  const std::size_t total = choose2(n);
  if (total >= 63 || (std::uint64_t{1} << total) > caps.max_graphs) {
    cap_exceeded("simple graphs on " + std::to_string(n) + " vertices exceed the cap");
  }
  const auto all = complete_edge_list(n);
  std::vector<std::pair<Vertex, Vertex>> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < total; ++i)
      if (mask >> i & 1) chosen.push_back(all[i]);
    fn(Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(chosen)));
  }
}

}  // namespace linarr
