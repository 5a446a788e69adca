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

#include "convexp/oracle.hpp"

#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "corpus.hpp"

namespace convexp {
namespace {

using testing::part;

// S(n, k) by the standard recurrence.
std::vector<std::vector<std::uint64_t>> stirling_table(std::size_t max_n) {
  std::vector<std::vector<std::uint64_t>> s(
      max_n + 1, std::vector<std::uint64_t>(max_n + 1, 0));
  s[0][0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
    }
  }
  return s;
}

TEST(SetPartitionsTest, KnownCounts) {
  EXPECT_EQ(enumerate_set_partitions(3, 2).size(), 3u);
  EXPECT_EQ(enumerate_set_partitions(4, 2).size(), 7u);
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto all = enumerate_set_partitions(k, k);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all.front().block_count(), k);
  }
}

TEST(SetPartitionsTest, MatchesStirlingNumbersAndIsDuplicateFree) {
  const auto stirling = stirling_table(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t p = 1; p <= n; ++p) {
      std::size_t count = 0;
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<std::uint32_t> previous;
      for_each_set_partition(n, p, [&](std::span<const std::uint32_t> rgs) {
        ++count;
        std::vector<std::uint32_t> current(rgs.begin(), rgs.end());
        EXPECT_EQ(*std::max_element(current.begin(), current.end()) + 1, p);
        EXPECT_TRUE(previous.empty() || previous < current);
        if (n <= 8) seen.insert(current);
        previous = std::move(current);
      });
      EXPECT_EQ(count, stirling[n][p]) << "n=" << n << " p=" << p;
      if (n <= 8) {
        EXPECT_EQ(seen.size(), count);
      }
    }
  }
}

TEST(SetPartitionsTest, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_set_partitions(3, 0), PreconditionError);
  EXPECT_THROW(enumerate_set_partitions(3, 4), PreconditionError);
}

TEST(BruteForceTest, FixedCounts) {
  // Values cross-checked with an independent script (networkx distances,
  // recursive set-partition generator).
  const PartitionSet c6 = brute_force_convex_partitions(generate::even_cycle(6), 2);
  EXPECT_EQ(c6, (PartitionSet{part({{0, 1, 2}, {3, 4, 5}}, 6),
                              part({{0, 1, 5}, {2, 3, 4}}, 6),
                              part({{0, 4, 5}, {1, 2, 3}}, 6)}));
  EXPECT_TRUE(
      brute_force_convex_partitions(generate::complete_bipartite(2, 3), 2).empty());
  EXPECT_EQ(brute_force_convex_partitions(generate::path(4), 2),
            (PartitionSet{part({{0}, {1, 2, 3}}, 4), part({{0, 1}, {2, 3}}, 4),
                          part({{0, 1, 2}, {3}}, 4)}));
  EXPECT_EQ(brute_force_convex_partitions(generate::even_cycle(6), 3).size(), 14u);
  EXPECT_EQ(brute_force_convex_partitions(generate::even_cycle(8), 4).size(), 62u);
  EXPECT_EQ(brute_force_convex_partitions(generate::complete_bipartite(3, 3), 4).size(),
            18u);
  EXPECT_EQ(brute_force_convex_partitions(generate::grid(2, 3), 3).size(), 9u);
}

TEST(BruteForceTest, EdgeCasesAndCap) {
  EXPECT_TRUE(brute_force_convex_partitions(generate::path(3), 4).empty());
  EXPECT_TRUE(brute_force_convex_partitions(generate::path(3), 0).empty());
  EXPECT_THROW(brute_force_convex_partitions(generate::path(13), 2),
               OracleCapError);
  OracleOptions uncapped;
  uncapped.max_vertices = 0;
  EXPECT_EQ(brute_force_convex_partitions(generate::path(13), 2, uncapped).size(),
            12u);
}

TEST(BruteForceTest, NaiveAndBfsConvexityAgree) {
  const Graph odd = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto fw = floyd_warshall(odd);
  const DistanceTable d = all_distances(odd);
  for (std::size_t mask = 0; mask < 32; ++mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < 5; ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    EXPECT_EQ(naive_is_convex(fw, members), is_convex(d, VertexSet(5, members)));
  }
}

// Relabelling the vertices relabels the oracle output and nothing more.
TEST(BruteForceTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(11);
  const auto corpus = testing::acceptance_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 5) {
    const Graph& g = corpus[i].graph;
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = testing::relabel(g, perm);
    for (std::size_t p = 1; p <= 3; ++p) {
      PartitionSet mapped;
      for (const Partition& x : brute_force_convex_partitions(g, p)) {
        auto blocks = x.blocks;
        for (auto& b : blocks) {
          for (auto& v : b) v = perm[v];
        }
        mapped.insert(canonicalize(blocks, n));
      }
      EXPECT_EQ(mapped, brute_force_convex_partitions(h, p)) << corpus[i].name;
    }
  }
}

TEST(VerifyEquivalenceTest, Examples) {
  const auto c6 = verify_equivalence(generate::even_cycle(6), 2);
  EXPECT_TRUE(c6.match());
  EXPECT_EQ(c6.fast_count, 3u);
  EXPECT_EQ(c6.oracle_count, 3u);
  EXPECT_TRUE(verify_equivalence(generate::path(4), 3).match());
  const auto two_edges =
      verify_equivalence(Graph::from_edges(4, {{0, 1}, {2, 3}}), 2);
  EXPECT_TRUE(two_edges.match());
  EXPECT_EQ(two_edges.fast_count, 7u);
  EXPECT_THROW(
      verify_equivalence(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 2),
      NotBipartiteError);
}

}  // namespace
}  // namespace convexp
