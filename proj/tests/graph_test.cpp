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

#include "convexp/graph.hpp"

#include <sstream>
#include <variant>

#include "gtest/gtest.h"

#include "corpus.hpp"

namespace convexp {
namespace {

TEST(ParseEdgeListTest, SmallestGraphWithAnEdge) {
  const Graph g = parse_edge_list("2 1\n0 1");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(ParseEdgeListTest, PathAndCycle) {
  const Graph p3 = parse_edge_list("3 2\n0 1\n1 2");
  EXPECT_EQ(p3.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  const Graph c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_TRUE(c4.has_edge(0, 3));
  EXPECT_FALSE(c4.has_edge(0, 2));
}

TEST(ParseEdgeListTest, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# header\n\n3 2\n# edges\n0 1\n  2 1\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(1, 2));
}

ParseError::Kind parse_failure(const std::string& text, std::size_t* line) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError::Kind::kMalformed;
}

TEST(ParseEdgeListTest, DistinctErrorsNameTheLine) {
  using Kind = ParseError::Kind;
  std::size_t line = 0;
  EXPECT_EQ(parse_failure("3 2\n0 1\n1 1\n", &line), Kind::kSelfLoop);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_failure("3 2\n0 1\n1 0\n", &line), Kind::kDuplicateEdge);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_failure("# c\n3 1\n0 3\n", &line), Kind::kVertexOutOfRange);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_failure("3 1\n0 x\n", &line), Kind::kMalformed);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_failure("3 1\n0 1 2\n", &line), Kind::kMalformed);
  EXPECT_EQ(parse_failure("3 1\n-1 2\n", &line), Kind::kMalformed);
  EXPECT_EQ(parse_failure("3 2\n0 1\n", &line), Kind::kMalformed);
  EXPECT_EQ(parse_failure("3 1\n0 1\n1 2\n", &line), Kind::kMalformed);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_failure("# only comments\n", &line), Kind::kMalformed);
}

TEST(ParseEdgeListTest, RoundTripsThroughText) {
  for (const auto& [name, g] : testing::acceptance_corpus()) {
    const Graph back = parse_edge_list(to_edge_list(g));
    EXPECT_EQ(back.vertex_count(), g.vertex_count()) << name;
    EXPECT_EQ(back.edges(), g.edges()) << name;
  }
}

TEST(GraphTest, AdjacencyInvariants) {
  for (const auto& [name, g] : testing::acceptance_corpus()) {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const auto nbrs = g.neighbors(u);
      degree_sum += nbrs.size();
      EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end())) << name;
      for (Vertex v : nbrs) {
        EXPECT_NE(u, v) << name;
        EXPECT_TRUE(g.has_edge(v, u)) << name;
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count()) << name;
  }
}

TEST(GraphTest, FromEdgesRejectsBadInput) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), PreconditionError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), PreconditionError);
}

TEST(BipartitionTest, EvenCycleAndPath) {
  auto c4 = std::get<Bipartition>(bipartition_of(generate::even_cycle(4)));
  EXPECT_EQ(c4.side, (std::vector<std::uint8_t>{0, 1, 0, 1}));
  auto p3 = std::get<Bipartition>(bipartition_of(generate::path(3)));
  EXPECT_EQ(p3.side, (std::vector<std::uint8_t>{0, 1, 0}));
}

void expect_odd_cycle(const Graph& g, std::size_t expected_length) {
  const auto result = bipartition_of(g);
  ASSERT_TRUE(std::holds_alternative<OddCycle>(result));
  const auto& cycle = std::get<OddCycle>(result).cycle;
  EXPECT_EQ(cycle.size(), expected_length);
  EXPECT_EQ(cycle.size() % 2, 1u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    EXPECT_TRUE(g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
}

TEST(BipartitionTest, OddCycleWitness) {
  expect_odd_cycle(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 3);
  // Pentagon with a pendant path.
  expect_odd_cycle(Graph::from_edges(
                       7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {5, 6}}),
                   5);
  // Even cycle plus a chord making a triangle elsewhere.
  const Graph g = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {3, 5}});
  const auto result = bipartition_of(g);
  ASSERT_TRUE(std::holds_alternative<OddCycle>(result));
  const auto& cycle = std::get<OddCycle>(result).cycle;
  EXPECT_EQ(cycle.size() % 2, 1u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    EXPECT_TRUE(g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  EXPECT_THROW(require_bipartite(g), NotBipartiteError);
}

TEST(BfsTest, Distances) {
  const Distance p3_expected[] = {0, 1, 2};
  EXPECT_EQ(bfs_distances(generate::path(3), 0),
            std::vector<Distance>(std::begin(p3_expected), std::end(p3_expected)));
  EXPECT_EQ(bfs_distances(generate::even_cycle(6), 0),
            (std::vector<Distance>{0, 1, 2, 3, 2, 1}));
  const Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const Distance u = unreachable_distance(two_edges);
  EXPECT_EQ(bfs_distances(two_edges, 0), (std::vector<Distance>{0, 1, u, u}));
  EXPECT_THROW(bfs_distances(two_edges, 4), PreconditionError);
}

TEST(AllDistancesTest, SmallCases) {
  const DistanceTable p2 = all_distances(generate::path(2));
  EXPECT_EQ(p2(0, 0), 0u);
  EXPECT_EQ(p2(0, 1), 1u);
  EXPECT_EQ(p2(1, 0), 1u);
  EXPECT_EQ(all_distances(generate::even_cycle(4))(0, 2), 2u);
  const DistanceTable k23 = all_distances(generate::complete_bipartite(2, 3));
  EXPECT_EQ(k23(0, 1), 2u);
  EXPECT_EQ(k23(2, 3), 2u);
  EXPECT_EQ(k23(3, 4), 2u);
}

TEST(AllDistancesTest, MetricInvariantsOnCorpus) {
  for (const auto& [name, g] : testing::acceptance_corpus()) {
    const DistanceTable d = all_distances(g);
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0u);
      const auto from_u = bfs_distances(g, u);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(d(u, v), d(v, u)) << name;
        EXPECT_EQ(from_u[v], bfs_distances(g, v)[u]) << name;
        EXPECT_EQ(d(u, v) == 1, g.has_edge(u, v)) << name;
        for (Vertex w = 0; w < n; ++w) {
          EXPECT_LE(d(u, w), d(u, v) + d(v, w)) << name;
        }
      }
    }
  }
}

// Bipartite iff BFS levels from any source differ across every edge.
TEST(BipartitionTest, AgreesWithDistanceParity) {
  std::vector<Graph> graphs;
  for (const auto& [name, g] : testing::acceptance_corpus()) graphs.push_back(g);
  graphs.push_back(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  graphs.push_back(Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}}));
  graphs.push_back(Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}));
  for (const Graph& g : graphs) {
    const DistanceTable d = all_distances(g);
    bool parity_ok = true;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (const Edge& e : g.edges()) {
        if (d.reachable(s, e.u) && d(s, e.u) == d(s, e.v)) parity_ok = false;
      }
    }
    EXPECT_EQ(is_bipartite(g), parity_ok);
  }
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(components_of(generate::even_cycle(6)).size(), 1u);
  EXPECT_EQ(components_of(generate::even_cycle(6)).front().size(), 6u);

  const auto two = components_of(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].members(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(two[1].members(), (std::vector<Vertex>{2, 3}));

  const auto isolated = components_of(Graph::from_edges(3, {}));
  ASSERT_EQ(isolated.size(), 3u);
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_EQ(isolated[v].members(), std::vector<Vertex>{v});
  }
}

TEST(ComponentsTest, OrderedByMinimumVertex) {
  const auto parts =
      components_of(Graph::from_edges(6, {{3, 5}, {1, 4}, {0, 2}}));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].members(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(parts[1].members(), (std::vector<Vertex>{1, 4}));
  EXPECT_EQ(parts[2].members(), (std::vector<Vertex>{3, 5}));
}

TEST(InducedSubgraphTest, RelabelsDensely) {
  const Graph g = Graph::from_edges(6, {{3, 5}, {1, 4}, {0, 2}, {5, 1}});
  const auto sub = induced_subgraph(g, VertexSet(6, {1, 3, 5}));
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 3, 5}));
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

}  // namespace
}  // namespace convexp
