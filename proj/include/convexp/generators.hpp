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

#ifndef CONVEXP_GENERATORS_HPP_
#define CONVEXP_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "convexp/errors.hpp"
#include "convexp/graph.hpp"

namespace convexp::generate {

// 0 - 1 - ... - (n-1)
inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

inline Graph even_cycle(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw PreconditionError("even cycle length must be even and >= 4, got " +
                            std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) {
    throw PreconditionError("complete bipartite sides must be nonempty");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      edges.emplace_back(u, static_cast<Vertex>(a + v));
    }
  }
  return Graph::from_edges(a + b, edges);
}

// rows x cols grid; vertex (r, c) has id r * cols + c.
inline Graph grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw PreconditionError("grid dimensions must be positive");
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

// Uniform labelled tree on n vertices, decoded from a random Pruefer
// sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("tree needs at least one vertex");
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

// Connected bipartite graph: a random spanning tree fixes the two sides,
// then every other cross-side pair becomes an edge with probability
// `edge_probability`.
inline Graph random_bipartite(std::size_t n, double edge_probability,
                              std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
  const Graph tree = random_tree(n, seed);
  const auto side = std::get<Bipartition>(bipartition_of(tree)).side;
  // Separate stream from the tree's so the two draws are independent.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges = tree.edges();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (side[u] != side[v] && !tree.has_edge(u, v) && coin(rng)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace convexp::generate

#endif  // CONVEXP_GENERATORS_HPP_
