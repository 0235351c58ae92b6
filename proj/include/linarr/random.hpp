#pragma once

// Reproducible Monte Carlo plumbing.
//
// Replica r draws from its own generator seeded by mixing r into the master
// seed, so results depend only on (seed, replica count), never on how many
// workers computed them. Callers reduce the per-replica results in replica
// order.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RngSeed {
  std::uint64_t master = 0;

  /// Generator for one replica.
  Rng replica(std::uint64_t index) const {
    return Rng(splitmix64(splitmix64(master) ^ (index + 1)));
  }

  /// Independent seed for a named sub-experiment (e.g. one n of a sweep).
  RngSeed derive(std::uint64_t tag) const {
    return RngSeed{splitmix64(master ^ splitmix64(tag + 0x51ed2701ULL))};
  }
};

struct McOptions {
  std::size_t replicas = 0;
  RngSeed seed{};
  unsigned workers = 1;
};

/// Runs fn(replica_index, rng) for replicas first .. first + count - 1 and
/// returns the results in replica order. Work is split into contiguous blocks
/// across workers.
template <class Result, class Fn>
std::vector<Result> run_replicas(std::size_t first, std::size_t count, RngSeed seed,
                                 unsigned workers, Fn fn) {
  std::vector<Result> results(count);
  auto run_block = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      Rng rng = seed.replica(first + r);
      results[r] = fn(first + r, rng);
    }
  };
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    run_block(0, count);
    return results;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t block = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(count, w * block);
      const std::size_t end = std::min(count, begin + block);
      pool.emplace_back(run_block, begin, end);
    }
  }
  return results;
}

/// Streams per-replica results to consume() in replica order, computing them
/// in chunks so memory stays bounded for large replica counts.
template <class Result, class Fn, class Consume>
void for_each_replica(std::size_t count, RngSeed seed, unsigned workers, Fn fn, Consume consume,
                      std::size_t chunk = 8192) {
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    const std::size_t size = std::min(chunk, count - begin);
    for (auto& result : run_replicas<Result>(begin, size, seed, workers, fn)) consume(result);
  }
}

/// Uniform draw from [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

/// Fisher-Yates shuffle with uniform_below, so the permutation drawn from a
/// given generator state is fixed by this code alone.
template <class T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

inline LinearArrangement random_arrangement(std::size_t n, Rng& rng) {
  std::vector<Vertex> positions(n);
  std::iota(positions.begin(), positions.end(), Vertex{1});
  shuffle(positions, rng);
  return LinearArrangement::from_positions(std::move(positions));
}

}  // namespace linarr
