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

#ifndef CONVEXP_GRAPH_HPP_
#define CONVEXP_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "convexp/errors.hpp"
#include "convexp/vertex_set.hpp"

namespace convexp {

using Distance = std::uint32_t;

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.assign(n, {});
    for (const Edge& e : edges) {
      if (e.u == e.v) {
        throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.v >= n) {
        throw PreconditionError("vertex " + std::to_string(e.v) +
                                " out of range");
      }
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : g.adjacency_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
        throw PreconditionError("duplicate edge");
      }
    }
    g.edge_count_ = edges.size();
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Parses the edge-list text format:
//
//   # comment
//   n m
//   u v      (exactly m lines, 0 <= u, v < n, u != v, no duplicates)
//
// Blank lines and '#' lines are ignored anywhere.
inline Graph parse_edge_list(std::istream& in) {
  using Kind = ParseError::Kind;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;

  auto read_two = [&](const std::string& text, unsigned long long& a,
                      unsigned long long& b) {
    std::istringstream fields(text);
    std::string x, y, extra;
    if (!(fields >> x >> y) || (fields >> extra)) return false;
    auto to_number = [](const std::string& s, unsigned long long& out) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return c >= '0' && c <= '9';
          })) {
        return false;
      }
      try {
        out = std::stoull(s);
      } catch (const std::out_of_range&) {
        return false;
      }
      return true;
    };
    return to_number(x, a) && to_number(y, b);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    unsigned long long a = 0, b = 0;
    if (!read_two(line, a, b)) {
      throw ParseError(Kind::kMalformed, line_no,
                       "expected two non-negative integers");
    }
    if (!have_header) {
      if (a > std::numeric_limits<Vertex>::max() - 1) {
        throw ParseError(Kind::kMalformed, line_no, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      seen.assign(n, {});
      edges.reserve(std::min<std::size_t>(m, 1u << 20));
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(Kind::kMalformed, line_no,
                       "more edge lines than the declared " +
                           std::to_string(m));
    }
    if (a >= n || b >= n) {
      throw ParseError(Kind::kVertexOutOfRange, line_no,
                       "vertex index must be below " + std::to_string(n));
    }
    const auto u = static_cast<Vertex>(a);
    const auto v = static_cast<Vertex>(b);
    if (u == v) {
      throw ParseError(Kind::kSelfLoop, line_no,
                       "self-loop at vertex " + std::to_string(u));
    }
    const Edge e(u, v);
    auto& bucket = seen[e.u];
    if (std::find(bucket.begin(), bucket.end(), e.v) != bucket.end()) {
      throw ParseError(Kind::kDuplicateEdge, line_no,
                       "duplicate edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "}");
    }
    bucket.push_back(e.v);
    edges.push_back(e);
  }
  if (!have_header) {
    throw ParseError(Kind::kMalformed, line_no + 1, "missing \"n m\" header");
  }
  if (edges.size() != m) {
    throw ParseError(Kind::kMalformed, line_no + 1,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

// Inverse of parse_edge_list; edges are written in lexicographic order.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Sentinel distance between vertices of different components. Strictly
// larger than any finite distance.
inline Distance unreachable_distance(const Graph& g) {
  return static_cast<Distance>(g.vertex_count());
}

inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) {
    throw PreconditionError("BFS source " + std::to_string(source) +
                            " out of range");
  }
  std::vector<Distance> dist(n, unreachable_distance(g));
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == unreachable_distance(g)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// All-pairs shortest-path lengths, one BFS row per source.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(std::vector<std::vector<Distance>> rows, Distance unreachable)
      : rows_(std::move(rows)), unreachable_(unreachable) {}

  std::size_t size() const { return rows_.size(); }
  Distance unreachable() const { return unreachable_; }

  Distance operator()(Vertex u, Vertex v) const { return rows_[u][v]; }
  std::span<const Distance> row(Vertex u) const { return rows_[u]; }

  bool reachable(Vertex u, Vertex v) const {
    return rows_[u][v] != unreachable_;
  }

 private:
  std::vector<std::vector<Distance>> rows_;
  Distance unreachable_ = 0;
};

inline DistanceTable all_distances(const Graph& g) {
  std::vector<std::vector<Distance>> rows;
  rows.reserve(g.vertex_count());
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    rows.push_back(bfs_distances(g, s));
  }
  return DistanceTable(std::move(rows), unreachable_distance(g));
}

// Proper 2-colouring; side[v] is 0 or 1.
struct Bipartition {
  std::vector<std::uint8_t> side;
};

// Closed walk of odd length: consecutive vertices (and last/first) adjacent.
struct OddCycle {
  std::vector<Vertex> cycle;
};

inline std::variant<Bipartition, OddCycle> bipartition_of(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(n, kUnset);
  std::vector<Vertex> parent(n, 0);
  std::vector<Distance> depth(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    parent[root] = root;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == kUnset) {
          side[y] = side[x] ^ 1;
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          // Both BFS tree paths meet at their lowest common ancestor; the
          // two branches plus the edge xy form an odd cycle.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // LCA already in `left`
          left.insert(left.end(), right.rbegin(), right.rend());
          return OddCycle{std::move(left)};
        }
      }
    }
  }
  return Bipartition{std::move(side)};
}

inline bool is_bipartite(const Graph& g) {
  return std::holds_alternative<Bipartition>(bipartition_of(g));
}

// Throws NotBipartiteError carrying the witness cycle.
inline void require_bipartite(const Graph& g) {
  auto result = bipartition_of(g);
  if (auto* odd = std::get_if<OddCycle>(&result)) {
    throw NotBipartiteError(std::move(odd->cycle));
  }
}

// Maximal connected vertex sets, ordered by minimum vertex.
inline std::vector<VertexSet> components_of(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet component(n);
    seen[root] = true;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      component.insert(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(component));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return components_of(g).size() <= 1;
}

// Subgraph induced by `keep`, relabelled densely in ascending order.
// `to_parent[i]` is the original id of local vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.to_parent = keep.members();
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (Vertex i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) {
      edges.emplace_back(local[e.u], local[e.v]);
    }
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

}  // namespace convexp

#endif  // CONVEXP_GRAPH_HPP_
