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

#ifndef CONVEXP_PARTITION_HPP_
#define CONVEXP_PARTITION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convexp/errors.hpp"
#include "convexp/vertex_set.hpp"

namespace convexp {

// Unordered family of disjoint nonempty blocks covering 0..n-1, stored in
// canonical form: members ascending within a block, blocks ordered by their
// minimum. Equal partitions therefore compare equal member-wise.
struct Partition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t block_count() const { return blocks.size(); }

  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
  }

  // Block index of every vertex.
  std::vector<std::size_t> labels() const {
    std::vector<std::size_t> out(vertex_count(), 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (Vertex v : blocks[i]) out[v] = i;
    }
    return out;
  }

  std::vector<VertexSet> block_sets() const {
    std::vector<VertexSet> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.emplace_back(vertex_count(), b);
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Deterministically ordered, duplicate-free collection of partitions.
using PartitionSet = std::set<Partition>;

// Throws PreconditionError if the blocks overlap, are empty, or fail to
// cover their common universe.
inline Partition canonicalize(std::span<const VertexSet> blocks) {
  if (blocks.empty()) return Partition{};
  const std::size_t n = blocks.front().universe_size();
  std::vector<bool> covered(n, false);
  Partition out;
  out.blocks.reserve(blocks.size());
  for (const VertexSet& block : blocks) {
    if (block.universe_size() != n) {
      throw PreconditionError("blocks over different universes");
    }
    if (block.empty()) throw PreconditionError("empty block");
    for (Vertex v : block) {
      if (covered[v]) {
        throw PreconditionError("vertex " + std::to_string(v) +
                                " appears in two blocks");
      }
      covered[v] = true;
    }
    out.blocks.push_back(block.members());
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw PreconditionError("blocks do not cover every vertex");
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

inline Partition canonicalize(std::span<const std::vector<Vertex>> blocks,
                              std::size_t n) {
  std::vector<VertexSet> sets;
  sets.reserve(blocks.size());
  for (const auto& b : blocks) {
    VertexSet s(n);
    for (Vertex v : b) {
      if (s.contains(v)) {
        throw PreconditionError("vertex " + std::to_string(v) +
                                " repeated in a block");
      }
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  if (sets.empty() && n > 0) {
    throw PreconditionError("blocks do not cover every vertex");
  }
  return canonicalize(sets);
}

// Builds the partition whose blocks are the label classes. Labels need not
// be dense; only equality matters.
template <typename Label>
Partition partition_from_labels(std::span<const Label> labels) {
  Partition out;
  std::vector<std::pair<Label, std::size_t>> seen;
  for (Vertex v = 0; v < labels.size(); ++v) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& e) { return e.first == labels[v]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[v], out.blocks.size());
      out.blocks.push_back({v});
    } else {
      out.blocks[it->second].push_back(v);
    }
  }
  return out;
}

template <typename Label>
Partition partition_from_labels(const std::vector<Label>& labels) {
  return partition_from_labels(std::span<const Label>(labels));
}

}  // namespace convexp

#endif  // CONVEXP_PARTITION_HPP_
