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

#ifndef CONVEXP_VERTEX_SET_HPP_
#define CONVEXP_VERTEX_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "convexp/errors.hpp"

namespace convexp {

// Subset of {0, ..., n-1} with constant-time membership. Iteration visits
// members in ascending order.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {
      skip();
    }

    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      ++v_;
      skip();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& other) const {
      return v_ == other.v_;
    }

   private:
    void skip() {
      while (v_ < set_->universe_size() && !set_->contains(v_)) ++v_;
    }

    const VertexSet* set_ = nullptr;
    Vertex v_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(),
                                                    members.size())) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.size_ = universe;
    return s;
  }

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Vertex v) const { return v < bits_.size() && bits_[v] != 0; }

  void insert(Vertex v) {
    check(v);
    if (!bits_[v]) {
      bits_[v] = 1;
      ++size_;
    }
  }

  void erase(Vertex v) {
    check(v);
    if (bits_[v]) {
      bits_[v] = 0;
      --size_;
    }
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const {
    return const_iterator(this, static_cast<Vertex>(bits_.size()));
  }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  bool is_subset_of(const VertexSet& other) const {
    for (Vertex v : *this) {
      if (!other.contains(v)) return false;
    }
    return true;
  }

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    VertexSet out(a.universe_size());
    for (Vertex v : a) {
      if (b.contains(v)) out.insert(v);
    }
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  void check(Vertex v) const {
    if (v >= bits_.size()) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " outside universe of size " +
                              std::to_string(bits_.size()));
    }
  }

  std::vector<unsigned char> bits_;
  std::size_t size_ = 0;
};

}  // namespace convexp

#endif  // CONVEXP_VERTEX_SET_HPP_
