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

#ifndef CONVEXP_ENUMERATE_HPP_
#define CONVEXP_ENUMERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "convexp/convexity.hpp"
#include "convexp/errors.hpp"
#include "convexp/graph.hpp"
#include "convexp/partition.hpp"
#include "convexp/skeleton.hpp"

namespace convexp {

struct EnumerateOptions {
  // Worker threads for skeleton resolution. The result does not depend on
  // this value.
  std::size_t threads = 1;
};

namespace detail {

inline void require_connected_bipartite(const Graph& g) {
  require_bipartite(g);
  if (!is_connected(g)) throw NotConnectedError();
}

}  // namespace detail

// All convex 2-partitions of a connected bipartite graph. Any such partition
// is {X_uv, X_vu} for each of its crossing edges uv, so at most m exist.
inline PartitionSet enumerate_two_partitions(const Graph& g,
                                             const DistanceTable& d) {
  detail::require_connected_bipartite(g);
  PartitionSet out;
  for (const Edge& e : g.edges()) {
    const VertexSet side_u = closer_set(d, e.u, e.v);
    const VertexSet side_v = closer_set(d, e.v, e.u);
    if (is_convex(d, side_u) && is_convex(d, side_v)) {
      const VertexSet blocks[] = {side_u, side_v};
      out.insert(canonicalize(blocks));
    }
  }
  return out;
}

// Resolves every candidate skeleton and collects the partitions found.
// Works for any p >= 2 on a connected bipartite graph.
inline PartitionSet enumerate_by_skeletons(const Graph& g,
                                           const DistanceTable& d,
                                           std::size_t p,
                                           const EnumerateOptions& options = {}) {
  detail::require_connected_bipartite(g);
  if (p < 2) throw PreconditionError("skeleton enumeration needs p >= 2");
  if (p > g.vertex_count()) return {};

  const std::size_t workers = std::max<std::size_t>(1, options.threads);
  std::vector<PartitionSet> found(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](std::size_t t) {
    try {
      SkeletonSearchOptions search;
      search.canonical_colors = true;
      search.closer_pruning = &d;
      search.stride = workers;
      search.offset = t;
      for_each_candidate_skeleton(
          g, p,
          [&](const Skeleton& s) {
            if (auto partition = resolve_skeleton(g, d, s)) {
              found[t].insert(std::move(*partition));
            }
          },
          search);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  PartitionSet out;
  for (auto& part : found) out.merge(part);
  return out;
}

// All convex p-partitions of a connected bipartite graph.
inline PartitionSet enumerate_partitions_connected(
    const Graph& g, const DistanceTable& d, std::size_t p,
    const EnumerateOptions& options = {}) {
  if (p == 0) throw PreconditionError("p must be at least 1");
  detail::require_connected_bipartite(g);
  const std::size_t n = g.vertex_count();
  if (p > n) return {};
  if (p == 1) {
    const VertexSet all[] = {VertexSet::full(n)};
    return {canonicalize(all)};
  }
  if (p == 2) return enumerate_two_partitions(g, d);
  return enumerate_by_skeletons(g, d, p, options);
}

namespace detail {

// Merges per-component partitions into global p-partitions. Each global
// block is the union of at most one block per component; blocks are opened
// in component order, which makes every global partition arise once.
class ComponentMerger {
 public:
  ComponentMerger(std::size_t n, std::size_t p,
                  std::vector<std::vector<Partition>> per_component)
      : n_(n), p_(p), per_component_(std::move(per_component)) {
    capacity_after_.assign(per_component_.size() + 1, 0);
    for (std::size_t j = per_component_.size(); j-- > 0;) {
      std::size_t most = 0;
      for (const auto& part : per_component_[j]) {
        most = std::max(most, part.block_count());
      }
      capacity_after_[j] = capacity_after_[j + 1] + most;
    }
  }

  PartitionSet run() {
    open_component(0);
    return std::move(out_);
  }

 private:
  void open_component(std::size_t j) {
    if (blocks_.size() + capacity_after_[j] < p_) return;
    if (j == per_component_.size()) {
      if (blocks_.size() == p_) emit();
      return;
    }
    std::vector<bool> taken(p_, false);
    for (const Partition& part : per_component_[j]) place(j, part, 0, taken);
  }

  void place(std::size_t j, const Partition& part, std::size_t t,
             std::vector<bool>& taken) {
    if (t == part.block_count()) {
      open_component(j + 1);
      return;
    }
    const auto& piece = part.blocks[t];
    const std::size_t existing = blocks_.size();
    for (std::size_t target = 0; target < existing; ++target) {
      if (taken[target]) continue;
      taken[target] = true;
      blocks_[target].insert(blocks_[target].end(), piece.begin(), piece.end());
      place(j, part, t + 1, taken);
      // Index again: the recursion may have reallocated blocks_.
      blocks_[target].resize(blocks_[target].size() - piece.size());
      taken[target] = false;
    }
    if (existing < p_) {
      blocks_.push_back(piece);
      taken[existing] = true;
      place(j, part, t + 1, taken);
      taken[existing] = false;
      blocks_.pop_back();
    }
  }

  void emit() {
    auto partition = canonicalize(blocks_, n_);
    out_.insert(std::move(partition));
  }

  std::size_t n_;
  std::size_t p_;
  std::vector<std::vector<Partition>> per_component_;
  std::vector<std::size_t> capacity_after_;
  std::vector<std::vector<Vertex>> blocks_;
  PartitionSet out_;
};

}  // namespace detail

// All convex p-partitions of a bipartite graph, connected or not. Vertices
// in different components have no shortest path between them, so a set is
// convex iff its trace on every component is convex.
inline PartitionSet enumerate_partitions(const Graph& g, std::size_t p,
                                         const EnumerateOptions& options = {}) {
  if (p == 0) throw PreconditionError("p must be at least 1");
  require_bipartite(g);
  const std::size_t n = g.vertex_count();
  if (p > n) return {};
  const auto components = components_of(g);
  if (components.size() == 1) {
    return enumerate_partitions_connected(g, all_distances(g), p, options);
  }

  std::vector<std::vector<Partition>> per_component;
  per_component.reserve(components.size());
  for (const VertexSet& component : components) {
    const InducedSubgraph sub = induced_subgraph(g, component);
    const DistanceTable d = all_distances(sub.graph);
    std::vector<Partition> choices;
    const std::size_t most = std::min(p, sub.graph.vertex_count());
    for (std::size_t q = 1; q <= most; ++q) {
      for (const Partition& local :
           enumerate_partitions_connected(sub.graph, d, q, options)) {
        Partition global;
        for (const auto& block : local.blocks) {
          auto& mapped = global.blocks.emplace_back();
          for (Vertex v : block) mapped.push_back(sub.to_parent[v]);
        }
        choices.push_back(std::move(global));
      }
    }
    per_component.push_back(std::move(choices));
  }
  return detail::ComponentMerger(n, p, std::move(per_component)).run();
}

}  // namespace convexp

#endif  // CONVEXP_ENUMERATE_HPP_
