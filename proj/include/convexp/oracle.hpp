// Copyright 2026 The convexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVEXP_ORACLE_HPP_
#define CONVEXP_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexp/convexity.hpp"
#include "convexp/enumerate.hpp"
#include "convexp/errors.hpp"
#include "convexp/graph.hpp"
#include "convexp/partition.hpp"

namespace convexp {

// Visits every partition of {0..n-1} into exactly p nonempty blocks, once
// each, as a restricted growth string rgs (rgs[0] = 0, rgs[i] <= 1 +
// max(rgs[0..i-1])). Strings come in lexicographic order.
template <typename Visit>
void for_each_set_partition(std::size_t n, std::size_t p, Visit&& visit) {
  if (p < 1 || p > n) {
    throw PreconditionError("set partitions need 1 <= p <= n (p=" +
                            std::to_string(p) + ", n=" + std::to_string(n) +
                            ")");
  }
  std::vector<std::uint32_t> rgs(n, 0);
  // highest[i] = max(rgs[0..i]).
  std::vector<std::uint32_t> highest(n, 0);
  auto fits = [&](std::size_t i) {
    // Blocks still to be opened must fit in the remaining positions.
    return highest[i] + 1 + (n - 1 - i) >= p && highest[i] + 1 <= p;
  };
  std::size_t i = 0;
  if (!fits(0)) return;
  if (n == 1) {
    visit(std::span<const std::uint32_t>(rgs));
    return;
  }
  i = 1;
  rgs[1] = 0;
  highest[1] = 0;
  // Iterative depth-first walk over positions 1..n-1.
  while (true) {
    if (fits(i)) {
      if (i + 1 == n) {
        if (highest[i] + 1 == p) visit(std::span<const std::uint32_t>(rgs));
      } else {
        ++i;
        rgs[i] = 0;
        highest[i] = highest[i - 1];
        continue;
      }
    }
    // Advance position i, backtracking while exhausted.
    while (true) {
      if (rgs[i] <= highest[i - 1] && rgs[i] + 1 < p) {
        ++rgs[i];
        highest[i] = std::max(highest[i - 1], rgs[i]);
        break;
      }
      if (--i == 0) return;
    }
  }
}

inline std::vector<Partition> enumerate_set_partitions(std::size_t n,
                                                       std::size_t p) {
  std::vector<Partition> out;
  for_each_set_partition(n, p, [&](std::span<const std::uint32_t> rgs) {
    out.push_back(partition_from_labels(rgs));
  });
  return out;
}

// All-pairs distances by Floyd-Warshall over the edge set. Kept apart from
// the BFS table so that the oracle does not share its distance route with
// the fast path.
inline std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> dist(
      n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Edge& e : g.edges()) dist[e.u][e.v] = dist[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  return dist;
}

// Convexity straight from the definition over Floyd-Warshall distances.
inline bool naive_is_convex(const std::vector<std::vector<std::uint64_t>>& dist,
                            std::span<const Vertex> members) {
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = dist.size();
  std::vector<bool> in(n, false);
  for (Vertex v : members) in[v] = true;
  for (Vertex u : members) {
    for (Vertex w : members) {
      if (dist[u][w] >= kInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (!in[v] && dist[u][v] + dist[v][w] == dist[u][w]) return false;
      }
    }
  }
  return true;
}

inline constexpr std::size_t kDefaultOracleCap = 12;

class OracleCapError : public PreconditionError {
 public:
  OracleCapError(std::size_t n, std::size_t cap)
      : PreconditionError("oracle is capped at n <= " + std::to_string(cap) +
                          " vertices (graph has " + std::to_string(n) +
                          "); pass --force to override") {}
};

struct OracleOptions {
  // Largest vertex count accepted; 0 disables the cap.
  std::size_t max_vertices = kDefaultOracleCap;
};

// Every p-partition of V whose blocks are all convex. Each block is checked
// with both is_convex and naive_is_convex; a disagreement is an internal
// error (std::logic_error).
inline PartitionSet brute_force_convex_partitions(
    const Graph& g, std::size_t p, const OracleOptions& options = {}) {
  const std::size_t n = g.vertex_count();
  if (options.max_vertices != 0 && n > options.max_vertices) {
    throw OracleCapError(n, options.max_vertices);
  }
  if (p == 0 || p > n) return {};

  const DistanceTable d = all_distances(g);
  const auto fw = floyd_warshall(g);
  auto convex = [&](std::span<const Vertex> members) {
    const bool fast = is_convex(d, VertexSet(n, members));
    const bool naive = naive_is_convex(fw, members);
    if (fast != naive) {
      throw std::logic_error("convexity checks disagree on a block");
    }
    return fast;
  };

  // Cache keyed by block bitmask while it fits in memory.
  constexpr std::size_t kCacheBits = 22;
  std::vector<std::int8_t> cache(n <= kCacheBits ? std::size_t{1} << n : 0,
                                 -1);

  PartitionSet out;
  std::vector<std::vector<Vertex>> blocks(p);
  for_each_set_partition(n, p, [&](std::span<const std::uint32_t> rgs) {
    for (auto& b : blocks) b.clear();
    for (Vertex v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
    for (const auto& b : blocks) {
      if (cache.empty()) {
        if (!convex(b)) return;
        continue;
      }
      std::size_t mask = 0;
      for (Vertex v : b) mask |= std::size_t{1} << v;
      if (cache[mask] < 0) cache[mask] = convex(b) ? 1 : 0;
      if (cache[mask] == 0) return;
    }
    out.insert(partition_from_labels(rgs));
  });
  return out;
}

struct EquivalenceReport {
  std::size_t fast_count = 0;
  std::size_t oracle_count = 0;
  std::vector<Partition> only_fast;    // found by enumeration, not oracle
  std::vector<Partition> only_oracle;  // found by oracle, not enumeration

  bool match() const { return only_fast.empty() && only_oracle.empty(); }
};

inline EquivalenceReport verify_equivalence(
    const Graph& g, std::size_t p, const OracleOptions& oracle_options = {},
    const EnumerateOptions& options = {}) {
  require_bipartite(g);
  if (p == 0) throw PreconditionError("p must be at least 1");
  const PartitionSet fast = enumerate_partitions(g, p, options);
  const PartitionSet oracle = brute_force_convex_partitions(g, p, oracle_options);
  EquivalenceReport report;
  report.fast_count = fast.size();
  report.oracle_count = oracle.size();
  std::set_difference(fast.begin(), fast.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(report.only_fast));
  std::set_difference(oracle.begin(), oracle.end(), fast.begin(), fast.end(),
                      std::back_inserter(report.only_oracle));
  return report;
}

}  // namespace convexp

#endif  // CONVEXP_ORACLE_HPP_
