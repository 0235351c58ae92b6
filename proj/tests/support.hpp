#pragma once

// Test-local reference computations. These deliberately avoid the library's
// moment formulas: moments come from std::next_permutation over all n!
// arrangements, evaluated in plain integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "linarr/linarr.hpp"

namespace testing_support {

using linarr::ExactScalar;
using linarr::Graph;

inline Graph fixture_tree() {
  return Graph::build(17, {{3, 4}, {4, 5}, {2, 4}, {4, 13}, {4, 8}, {12, 13}, {13, 14}, {11, 13},
                           {13, 17}, {1, 2}, {7, 8}, {8, 9}, {6, 7}, {12, 15}, {14, 16}, {10, 16}});
}

inline Graph path3() { return Graph::build(3, {{1, 2}, {2, 3}}); }

struct BruteMoments {
  ExactScalar mean;
  ExactScalar second;
  ExactScalar variance;
  std::uint64_t d_min = 0;
  std::uint64_t d_max = 0;
};

/// Moments of D over every arrangement, by direct summation.
inline BruteMoments brute_moments(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  linarr::BigInt s1 = 0, s2 = 0;
  std::uint64_t count = 0, lo = UINT64_MAX, hi = 0;
  do {
    std::uint64_t d = 0;
    for (const auto& e : g.edges()) {
      const auto diff = pos[e.u - 1] - pos[e.v - 1];
      d += static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
    }
    s1 += d;
    s2 += linarr::BigInt(d) * d;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    ++count;
  } while (std::next_permutation(pos.begin(), pos.end()));
  BruteMoments r;
  r.mean = linarr::ratio(s1, count);
  r.second = linarr::ratio(s2, count);
  r.variance = r.second - r.mean * r.mean;
  r.d_min = lo;
  r.d_max = hi;
  return r;
}

/// Random simple graph with each of the C(n,2) edges present with prob. 1/2.
inline Graph coin_flip_graph(std::size_t n, linarr::Rng& rng) {
  std::vector<std::pair<linarr::Vertex, linarr::Vertex>> edges;
  for (linarr::Vertex u = 1; u <= n; ++u)
    for (linarr::Vertex v = u + 1; v <= n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace testing_support
