#pragma once

// Graph and arrangement values plus the degree and edge-length statistics
// every closed form in the library is written in terms of.
//
// Vertices and positions are 1-based: vertex i sits at position(i) in 1..n,
// and the length of edge {u, v} is |position(u) - position(v)|.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linarr/error.hpp"
#include "linarr/exact.hpp"

namespace linarr {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes each pair to u < v and rejects self-loops, duplicates and
  /// out-of-range endpoints, naming the offending edge.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    Graph g;
    g.n_ = n;
    g.degrees_.assign(n, 0);
    g.edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
      const std::string label =
          "edge (" + std::to_string(a) + ", " + std::to_string(b) + ")";
      require(a >= 1 && b >= 1 && a <= n && b <= n,
              label + ": vertex out of range [1, " + std::to_string(n) + "]");
      require(a != b, label + ": self-loop");
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      fail("edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) +
           "): duplicate edge");
    }
    for (const Edge& e : g.edges_) {
      ++g.degrees_[e.u - 1];
      ++g.degrees_[e.v - 1];
    }
    return g;
  }

  static Graph build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
    const std::vector<std::pair<Vertex, Vertex>> list(edge_list);
    return build(n, std::span<const std::pair<Vertex, Vertex>>(list));
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  std::uint32_t degree(Vertex v) const { return degrees_.at(v - 1); }

  /// degrees()[i] is the degree of vertex i + 1.
  std::span<const std::uint32_t> degrees() const { return degrees_; }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> degrees_;
};

/// A bijection from vertices 1..n onto positions 1..n.
class LinearArrangement {
 public:
  LinearArrangement() = default;

  static LinearArrangement identity(std::size_t n) {
    LinearArrangement a;
    a.position_.resize(n);
    std::iota(a.position_.begin(), a.position_.end(), Vertex{1});
    return a;
  }

  /// positions[i] is the position of vertex i + 1.
  static LinearArrangement from_positions(std::vector<Vertex> positions) {
    std::vector<bool> seen(positions.size() + 1, false);
    for (Vertex p : positions) {
      require(p >= 1 && p <= positions.size(),
              "arrangement position " + std::to_string(p) + " out of range [1, " +
                  std::to_string(positions.size()) + "]");
      require(!seen[p], "arrangement repeats position " + std::to_string(p));
      seen[p] = true;
    }
    LinearArrangement a;
    a.position_ = std::move(positions);
    return a;
  }

  std::size_t size() const { return position_.size(); }
  Vertex position(Vertex v) const { return position_[v - 1]; }
  std::span<const Vertex> positions() const { return position_; }

  bool operator==(const LinearArrangement&) const = default;

 private:
  std::vector<Vertex> position_;
};

/// n(k): number of vertices of degree k.
struct DegreeSpectrum {
  std::map<std::uint32_t, std::uint64_t> counts;

  std::uint64_t vertex_total() const {
    std::uint64_t total = 0;
    for (const auto& [k, c] : counts) total += c;
    return total;
  }
  std::uint64_t degree_total() const {
    std::uint64_t total = 0;
    for (const auto& [k, c] : counts) total += std::uint64_t{k} * c;
    return total;
  }
};

/// m(d): number of edges of length d in one arrangement.
struct LengthSpectrum {
  std::map<std::uint32_t, std::uint64_t> counts;

  std::uint64_t edge_total() const {
    std::uint64_t total = 0;
    for (const auto& [d, c] : counts) total += c;
    return total;
  }
  std::uint64_t length_total() const {
    std::uint64_t total = 0;
    for (const auto& [d, c] : counts) total += std::uint64_t{d} * c;
    return total;
  }
};

inline void check_arrangement(const Graph& g, const LinearArrangement& a) {
  require(a.size() == g.vertex_count(),
          "arrangement covers " + std::to_string(a.size()) + " vertices, graph has " +
              std::to_string(g.vertex_count()));
}

inline std::uint32_t edge_length(const Edge& e, const LinearArrangement& a) {
  const Vertex pu = a.position(e.u);
  const Vertex pv = a.position(e.v);
  return pu > pv ? pu - pv : pv - pu;
}

/// D: the sum of edge lengths of g under arrangement a.
inline std::uint64_t sum_edge_lengths(const Graph& g, const LinearArrangement& a) {
  check_arrangement(g, a);
  std::uint64_t total = 0;
  for (const Edge& e : g.edges()) total += edge_length(e, a);
  return total;
}

inline LengthSpectrum length_spectrum(const Graph& g, const LinearArrangement& a) {
  check_arrangement(g, a);
  LengthSpectrum spectrum;
  for (const Edge& e : g.edges()) ++spectrum.counts[edge_length(e, a)];
  return spectrum;
}

inline DegreeSpectrum degree_spectrum(const Graph& g) {
  DegreeSpectrum spectrum;
  for (std::uint32_t k : g.degrees()) ++spectrum.counts[k];
  return spectrum;
}

/// Sum of squared degrees; the well-defined stand-in for n<k^2> at n = 0.
inline std::uint64_t sum_k2(const Graph& g) {
  std::uint64_t total = 0;
  for (std::uint32_t k : g.degrees()) total += std::uint64_t{k} * k;
  return total;
}

inline std::uint64_t sum_k2(const DegreeSpectrum& spectrum) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : spectrum.counts) total += std::uint64_t{k} * k * c;
  return total;
}

/// <k^2>, the second moment about zero of the degree sequence.
inline ExactScalar mean_k2(const Graph& g) {
  if (g.vertex_count() == 0) fail("<k^2> is undefined for a graph with no vertices");
  return ratio(sum_k2(g), g.vertex_count());
}

struct IndependentPairs {
  std::uint64_t q1 = 0;  // unordered pairs of distinct edges
  std::uint64_t q2 = 0;  // pairs sharing a vertex
  std::uint64_t q = 0;   // pairs sharing no vertex
};

inline IndependentPairs independent_pairs(std::uint64_t m, std::uint64_t sum_k2) {
  IndependentPairs p;
  p.q1 = choose2(m);
  p.q2 = sum_k2 / 2 - m;  // sum_k2 and the degree sum 2m share parity
  p.q = p.q1 - p.q2;
  return p;
}

inline IndependentPairs independent_pairs(const Graph& g) {
  return independent_pairs(g.edge_count(), sum_k2(g));
}

/// D of the complete graph, the same under every arrangement.
inline std::uint64_t complete_graph_d(std::uint64_t n) {
  return n < 2 ? 0 : (n + 1) * n * (n - 1) / 6;
}

enum class SpecialKind { empty, single_edge, linear_tree, star_tree, complete };

inline std::string to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::empty: return "empty";
    case SpecialKind::single_edge: return "single_edge";
    case SpecialKind::linear_tree: return "linear_tree";
    case SpecialKind::star_tree: return "star_tree";
    case SpecialKind::complete: return "complete";
  }
  return "?";
}

/// Canonical instances: the path is 1-2-...-n, the star's hub is vertex 1,
/// the single edge is {1, 2}.
inline Graph make_special(SpecialKind kind, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  switch (kind) {
    case SpecialKind::empty:
      break;
    case SpecialKind::single_edge:
      require(n >= 2, "single_edge needs n >= 2");
      edges.emplace_back(1, 2);
      break;
    case SpecialKind::linear_tree:
      require(n >= 1, "linear_tree needs n >= 1");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case SpecialKind::star_tree:
      require(n >= 1, "star_tree needs n >= 1");
      for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
      break;
    case SpecialKind::complete:
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
      break;
  }
  return Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

}  // namespace linarr
