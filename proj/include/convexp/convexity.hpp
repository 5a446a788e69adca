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

#ifndef CONVEXP_CONVEXITY_HPP_
#define CONVEXP_CONVEXITY_HPP_

#include <optional>

#include "convexp/errors.hpp"
#include "convexp/graph.hpp"
#include "convexp/vertex_set.hpp"

namespace convexp {

// True iff v lies on some shortest u-w path. Pairs in different components
// have no shortest path, so the answer is false for them.
inline bool in_interval(const DistanceTable& d, Vertex u, Vertex v, Vertex w) {
  if (!d.reachable(u, w) || !d.reachable(u, v) || !d.reachable(v, w)) {
    return false;
  }
  return d(u, v) + d(v, w) == d(u, w);
}

// Geodesic interval I[u,w]: every vertex on at least one shortest u-w path.
inline VertexSet interval_of(const DistanceTable& d, Vertex u, Vertex w) {
  VertexSet out(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    if (in_interval(d, u, v, w)) out.insert(v);
  }
  return out;
}

// Vertices strictly closer to u than to v, for an edge uv.
inline VertexSet closer_set(const DistanceTable& d, Vertex u, Vertex v) {
  if (u >= d.size() || v >= d.size() || d(u, v) != 1) {
    throw NotAnEdgeError(u, v);
  }
  VertexSet out(d.size());
  const auto from_u = d.row(u);
  const auto from_v = d.row(v);
  for (Vertex x = 0; x < d.size(); ++x) {
    if (from_u[x] < from_v[x]) out.insert(x);
  }
  return out;
}

// v lies on a shortest u-w path with u, w in the set and v outside it.
struct ConvexityViolation {
  Vertex u;
  Vertex v;
  Vertex w;
};

inline std::optional<ConvexityViolation> find_convexity_violation(
    const DistanceTable& d, const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex u = members[i];
      const Vertex w = members[j];
      if (!d.reachable(u, w)) continue;
      for (Vertex v = 0; v < d.size(); ++v) {
        if (!s.contains(v) && in_interval(d, u, v, w)) {
          return ConvexityViolation{u, v, w};
        }
      }
    }
  }
  return std::nullopt;
}

// Pairwise interval check, O(|s|^2 n).
inline bool is_convex(const DistanceTable& d, const VertexSet& s) {
  return !find_convexity_violation(d, s).has_value();
}

// Convexity test for bipartite graphs through the frontier characterisation:
// s is convex iff every z in s reachable from x is strictly closer to x than
// to y for every edge xy leaving s (x in s, y outside). Runs in
// O(|boundary edges| * |s|).
inline bool is_convex_by_frontier(const Graph& g, const DistanceTable& d,
                                  const VertexSet& s) {
  const auto members = s.members();
  for (Vertex x : members) {
    for (Vertex y : g.neighbors(x)) {
      if (s.contains(y)) continue;
      const auto from_x = d.row(x);
      const auto from_y = d.row(y);
      for (Vertex z : members) {
        if (!d.reachable(x, z)) continue;
        if (from_x[z] >= from_y[z]) return false;
      }
    }
  }
  return true;
}

}  // namespace convexp

#endif  // CONVEXP_CONVEXITY_HPP_
