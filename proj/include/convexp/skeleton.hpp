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

#ifndef CONVEXP_SKELETON_HPP_
#define CONVEXP_SKELETON_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexp/errors.hpp"
#include "convexp/graph.hpp"
#include "convexp/partition.hpp"

namespace convexp {

// Part index in 0..p-1.
using Color = std::uint32_t;
// Bit c set <=> colour c still allowed.
using ColorMask = std::uint64_t;

inline constexpr std::size_t kMaxColors = 64;

inline ColorMask all_colors(std::size_t p) {
  return p >= 64 ? ~ColorMask{0} : (ColorMask{1} << p) - 1;
}

// A set F of crossing edges and a colouring phi of their endpoints V(F).
//
// For a convex partition, a skeleton keeps exactly one G-edge between every
// pair of adjacent parts, and phi names the part of each kept endpoint.
struct Skeleton {
  std::size_t colors = 0;        // p
  std::vector<Edge> edges;       // F, lexicographic
  std::vector<Vertex> support;   // V(F), ascending
  std::vector<Color> phi;        // phi[i] is the colour of support[i]

  // Throws PreconditionError if v is not an endpoint of F.
  Color color_of(Vertex v) const {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    if (it == support.end() || *it != v) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " is not in V(F)");
    }
    return phi[static_cast<std::size_t>(it - support.begin())];
  }

  // Endpoints of F sorted ascending and deduplicated.
  static std::vector<Vertex> support_of(const std::vector<Edge>& edges) {
    std::vector<Vertex> out;
    out.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
      out.push_back(e.u);
      out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

namespace detail {

// Tiny union-find over colours; p is at most 64.
inline bool colors_connected(std::size_t p,
                             const std::vector<std::pair<Color, Color>>& pairs) {
  std::vector<Color> parent(p);
  std::iota(parent.begin(), parent.end(), Color{0});
  auto find = [&](Color c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  std::size_t groups = p;
  for (auto [a, b] : pairs) {
    const Color ra = find(a);
    const Color rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --groups;
    }
  }
  return groups == 1;
}

}  // namespace detail

// Returns an empty string if `s` satisfies every structural skeleton
// invariant for g, otherwise a description of the first failure.
inline std::string skeleton_defect(const Graph& g, const Skeleton& s) {
  const std::size_t p = s.colors;
  if (p < 2 || p > kMaxColors) return "colour count out of range";
  if (!std::is_sorted(s.edges.begin(), s.edges.end()) ||
      std::adjacent_find(s.edges.begin(), s.edges.end()) != s.edges.end()) {
    return "F must be sorted and duplicate-free";
  }
  if (s.edges.size() + 1 < p || s.edges.size() > p * (p - 1) / 2) {
    return "|F| outside [p-1, p(p-1)/2]";
  }
  if (s.support != Skeleton::support_of(s.edges) ||
      s.phi.size() != s.support.size()) {
    return "phi must be defined exactly on V(F)";
  }
  ColorMask used = 0;
  for (Color c : s.phi) {
    if (c >= p) return "colour out of range";
    used |= ColorMask{1} << c;
  }
  if (used != all_colors(p)) return "phi is not surjective";
  std::vector<std::pair<Color, Color>> pairs;
  for (const Edge& e : s.edges) {
    if (!g.has_edge(e.u, e.v)) return "F contains a non-edge";
    Color a = s.color_of(e.u);
    Color b = s.color_of(e.v);
    if (a == b) return "F edge is not properly coloured";
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<Color, Color>> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "two F edges join the same colour pair";
  }
  if (!detail::colors_connected(p, pairs)) return "quotient is disconnected";
  return {};
}

// Knobs for the candidate search. The defaults yield every candidate.
struct SkeletonSearchOptions {
  // Only colourings whose colours first appear, scanning V(F) upward, in
  // the order 0, 1, 2, ... (one representative per colour permutation).
  bool canonical_colors = false;
  // When set, reject colourings in which some x in V(F) lies closer to an
  // endpoint b of an F edge ab than to a, yet shares the colour of a. Such a
  // colouring can never be the skeleton of a convex partition, since
  // resolution would strip phi(x) from x's list. Needs a connected bipartite
  // graph.
  const DistanceTable* closer_pruning = nullptr;
  // Only edge sets whose running index is congruent to `offset` mod
  // `stride`; used to split work across threads.
  std::size_t stride = 1;
  std::size_t offset = 0;
};

namespace detail {

class ColoringSearch {
 public:
  ColoringSearch(std::size_t p, const std::vector<Edge>& f,
                 const SkeletonSearchOptions& options)
      : p_(p), options_(options) {
    skeleton_.colors = p;
    skeleton_.edges = f;
    skeleton_.support = Skeleton::support_of(f);
    const std::size_t k = skeleton_.support.size();
    skeleton_.phi.assign(k, 0);
    auto local = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(skeleton_.support.begin(), skeleton_.support.end(),
                           v) -
          skeleton_.support.begin());
    };
    edges_at_.assign(k, {});
    distinct_at_.assign(k, {});
    for (const Edge& e : f) {
      const std::size_t a = local(e.u);
      const std::size_t b = local(e.v);
      edges_at_[std::max(a, b)].emplace_back(a, b);
    }
    if (const DistanceTable* d = options.closer_pruning) {
      for (const Edge& e : f) {
        const std::size_t a = local(e.u);
        const std::size_t b = local(e.v);
        for (std::size_t x = 0; x < k; ++x) {
          const Vertex vx = skeleton_.support[x];
          // x sits on a's side of the cut ab iff it is closer to a.
          const std::size_t other = (*d)(vx, e.u) < (*d)(vx, e.v) ? b : a;
          if (other == x) continue;
          distinct_at_[std::max(x, other)].emplace_back(x, other);
        }
      }
    }
    pair_used_.assign(p * p, 0);
  }

  template <typename Visit>
  void run(Visit& visit) {
    if (skeleton_.support.size() < p_) return;
    descend(0, 0, visit);
  }

 private:
  template <typename Visit>
  void descend(std::size_t pos, ColorMask used, Visit& visit) {
    const std::size_t k = skeleton_.support.size();
    if (pos == k) {
      if (used != all_colors(p_)) return;
      std::vector<std::pair<Color, Color>> pairs;
      pairs.reserve(skeleton_.edges.size());
      for (const auto& at : edges_at_) {
        for (auto [a, b] : at) pairs.emplace_back(skeleton_.phi[a], skeleton_.phi[b]);
      }
      if (colors_connected(p_, pairs)) visit(std::as_const(skeleton_));
      return;
    }
    const std::size_t missing = p_ - static_cast<std::size_t>(std::popcount(used));
    if (k - pos < missing) return;

    Color limit = static_cast<Color>(p_);
    if (options_.canonical_colors) {
      limit = std::min<Color>(limit, static_cast<Color>(std::popcount(used)) + 1);
    }
    for (Color c = 0; c < limit; ++c) {
      skeleton_.phi[pos] = c;
      if (!consistent(pos)) continue;
      std::size_t claimed = 0;
      bool ok = true;
      for (auto [a, b] : edges_at_[pos]) {
        const std::size_t key = pair_key(skeleton_.phi[a], skeleton_.phi[b]);
        if (pair_used_[key]) {
          ok = false;
          break;
        }
        pair_used_[key] = 1;
        ++claimed;
      }
      if (ok) descend(pos + 1, used | (ColorMask{1} << c), visit);
      for (std::size_t i = 0; i < claimed; ++i) {
        auto [a, b] = edges_at_[pos][i];
        pair_used_[pair_key(skeleton_.phi[a], skeleton_.phi[b])] = 0;
      }
    }
  }

  bool consistent(std::size_t pos) const {
    for (auto [a, b] : edges_at_[pos]) {
      if (skeleton_.phi[a] == skeleton_.phi[b]) return false;
    }
    for (auto [x, y] : distinct_at_[pos]) {
      if (skeleton_.phi[x] == skeleton_.phi[y]) return false;
    }
    return true;
  }

  std::size_t pair_key(Color a, Color b) const {
    return std::min(a, b) * p_ + std::max(a, b);
  }

  std::size_t p_;
  const SkeletonSearchOptions& options_;
  Skeleton skeleton_;
  // F edges (local indices) whose later endpoint sits at each position.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges_at_;
  // Extra "must differ" constraints from closer pruning, keyed likewise.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> distinct_at_;
  std::vector<unsigned char> pair_used_;
};

}  // namespace detail

// Calls visit(const Skeleton&) for every pair (F, phi) with F a subset of E
// satisfying the skeleton invariants. F runs over edge combinations by size
// from p-1 to p(p-1)/2, lexicographically within a size; phi runs in
// lexicographic order over V(F). The Skeleton reference is only valid during
// the call.
template <typename Visit>
void for_each_candidate_skeleton(const Graph& g, std::size_t p, Visit&& visit,
                                 const SkeletonSearchOptions& options = {}) {
  if (p < 2) throw PreconditionError("skeletons need p >= 2");
  if (p > kMaxColors) throw PreconditionError("at most 64 colours supported");
  if (!is_connected(g)) throw NotConnectedError();
  if (options.stride == 0) throw PreconditionError("stride must be positive");

  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t max_size = std::min(p * (p - 1) / 2, m);
  std::size_t index = 0;
  std::vector<std::size_t> pick;
  std::vector<Edge> f;
  for (std::size_t size = p - 1; size <= max_size; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      if (index++ % options.stride == options.offset) {
        f.clear();
        for (std::size_t i : pick) f.push_back(edges[i]);
        detail::ColoringSearch search(p, f, options);
        search.run(visit);
      }
      // Next combination of `size` indices out of m.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

inline std::vector<Skeleton> candidate_skeletons(
    const Graph& g, std::size_t p, const SkeletonSearchOptions& options = {}) {
  std::vector<Skeleton> out;
  for_each_candidate_skeleton(
      g, p, [&](const Skeleton& s) { out.push_back(s); }, options);
  return out;
}

// Per-vertex colour lists of the resolution procedure.
//   closer:  L(u)  = all colours minus phi(w) for every F edge vw (either
//            orientation) with u strictly closer to v than to w.
//   refined: L'(u) = L(u) minus phi(w) for every w in V(F) such that some
//            v != u, w on a shortest u-w path has phi(w) missing from L(v).
struct ColorLists {
  std::size_t colors = 0;
  std::vector<ColorMask> closer;
  std::vector<ColorMask> refined;
};

// Requires g connected and bipartite and `s` a valid skeleton for g.
// O(|V(F)| * (n + m)).
inline ColorLists compute_color_lists(const Graph& g, const DistanceTable& d,
                                      const Skeleton& s) {
  const std::size_t n = g.vertex_count();
  ColorLists lists;
  lists.colors = s.colors;
  lists.closer.assign(n, all_colors(s.colors));

  for (const Edge& e : s.edges) {
    const ColorMask drop_u = ColorMask{1} << s.color_of(e.u);
    const ColorMask drop_v = ColorMask{1} << s.color_of(e.v);
    const auto from_u = d.row(e.u);
    const auto from_v = d.row(e.v);
    for (Vertex x = 0; x < n; ++x) {
      if (from_u[x] < from_v[x]) {
        lists.closer[x] &= ~drop_v;
      } else if (from_v[x] < from_u[x]) {
        lists.closer[x] &= ~drop_u;
      }
    }
  }

  lists.refined = lists.closer;
  // One BFS per w in V(F). `tainted[u]` records whether some vertex of
  // I[u,w] other than w lacks phi(w) in its L list; u loses phi(w) as soon
  // as one of its BFS predecessors toward w is tainted.
  std::vector<Vertex> queue;
  std::vector<unsigned char> tainted(n);
  std::vector<unsigned char> inherited(n);
  std::vector<unsigned char> visited(n);
  queue.reserve(n);
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    const Vertex w = s.support[i];
    const ColorMask bit = ColorMask{1} << s.phi[i];
    const auto level = d.row(w);
    std::fill(tainted.begin(), tainted.end(), 0);
    std::fill(inherited.begin(), inherited.end(), 0);
    std::fill(visited.begin(), visited.end(), 0);
    queue.assign(1, w);
    visited[w] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (u != w) {
        if (inherited[u]) lists.refined[u] &= ~bit;
        tainted[u] = inherited[u] || !(lists.closer[u] & bit);
      }
      for (Vertex y : g.neighbors(u)) {
        if (level[y] != level[u] + 1) continue;
        if (tainted[u]) inherited[y] = 1;
        if (!visited[y]) {
          visited[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return lists;
}

// The unique convex p-partition having `s` as a skeleton, or nullopt if
// there is none. Requires g connected and bipartite; throws
// PreconditionError if `s` is not a structurally valid skeleton.
inline std::optional<Partition> resolve_skeleton(const Graph& g,
                                                 const DistanceTable& d,
                                                 const Skeleton& s) {
  if (std::string defect = skeleton_defect(g, s); !defect.empty()) {
    throw PreconditionError("invalid skeleton: " + defect);
  }
  const std::size_t n = g.vertex_count();
  const std::size_t p = s.colors;
  const ColorLists lists = compute_color_lists(g, d, s);

  std::vector<Color> color(n);
  std::vector<std::size_t> block_size(p, 0);
  for (Vertex u = 0; u < n; ++u) {
    const ColorMask mask = lists.refined[u];
    if (std::popcount(mask) != 1) return std::nullopt;
    color[u] = static_cast<Color>(std::countr_zero(mask));
    ++block_size[color[u]];
  }
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    if (color[s.support[i]] != s.phi[i]) return std::nullopt;
  }
  if (std::find(block_size.begin(), block_size.end(), 0) != block_size.end()) {
    return std::nullopt;
  }

  std::vector<unsigned char> adjacent_in_f(p * p, 0);
  for (const Edge& e : s.edges) {
    const Color a = color[e.u];
    const Color b = color[e.v];
    adjacent_in_f[a * p + b] = adjacent_in_f[b * p + a] = 1;
  }

  // Members of each block, for the frontier convexity test below.
  std::vector<std::vector<Vertex>> blocks(p);
  for (Vertex u = 0; u < n; ++u) blocks[color[u]].push_back(u);

  // Every crossing edge must be represented in F, and each block must lie
  // strictly on its own side of every crossing edge (frontier criterion
  // for convexity in connected bipartite graphs).
  for (Vertex x = 0; x < n; ++x) {
    const auto from_x = d.row(x);
    for (Vertex y : g.neighbors(x)) {
      if (color[x] == color[y]) continue;
      if (!adjacent_in_f[color[x] * p + color[y]]) return std::nullopt;
      const auto from_y = d.row(y);
      for (Vertex z : blocks[color[x]]) {
        if (from_x[z] >= from_y[z]) return std::nullopt;
      }
    }
  }
  return partition_from_labels(color);
}

// True iff (F, phi) is a skeleton of `partition` in the defining sense:
// F edges cross distinct parts, each pair of adjacent parts is joined by
// exactly one F edge, and phi(v) == phi(v') exactly when v, v' share a part
// (with every colour naming a part).
inline bool is_skeleton_of(const Graph& g, const Skeleton& s,
                           const Partition& partition) {
  const std::size_t p = s.colors;
  if (partition.block_count() != p) return false;
  const auto block = partition.labels();
  std::vector<std::size_t> color_to_block(p, p);
  std::vector<Color> block_to_color(p, static_cast<Color>(p));
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    const std::size_t b = block[s.support[i]];
    const Color c = s.phi[i];
    if (color_to_block[c] == p && block_to_color[b] == p) {
      color_to_block[c] = b;
      block_to_color[b] = c;
    } else if (color_to_block[c] != b || block_to_color[b] != c) {
      return false;
    }
  }
  if (std::find(color_to_block.begin(), color_to_block.end(), p) !=
      color_to_block.end()) {
    return false;
  }
  std::vector<unsigned> f_count(p * p, 0);
  for (const Edge& e : s.edges) {
    const std::size_t a = block[e.u];
    const std::size_t b = block[e.v];
    if (a == b) return false;
    if (++f_count[std::min(a, b) * p + std::max(a, b)] > 1) return false;
  }
  for (const Edge& e : g.edges()) {
    const std::size_t a = block[e.u];
    const std::size_t b = block[e.v];
    if (a != b && f_count[std::min(a, b) * p + std::max(a, b)] == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace convexp

#endif  // CONVEXP_SKELETON_HPP_
