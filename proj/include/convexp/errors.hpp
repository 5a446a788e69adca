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

#ifndef CONVEXP_ERRORS_HPP_
#define CONVEXP_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convexp {

using Vertex = std::uint32_t;

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (p == 0, vertex out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { kMalformed, kSelfLoop, kDuplicateEdge, kVertexOutOfRange };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based line number of the offending input line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class NotAnEdgeError : public PreconditionError {
 public:
  NotAnEdgeError(Vertex u, Vertex v)
      : PreconditionError("{" + std::to_string(u) + "," + std::to_string(v) +
                          "} is not an edge") {}
};

class NotConnectedError : public PreconditionError {
 public:
  NotConnectedError() : PreconditionError("graph is not connected") {}
};

// Carries an odd cycle (closed walk listed without repeating the first vertex).
class NotBipartiteError : public PreconditionError {
 public:
  explicit NotBipartiteError(std::vector<Vertex> odd_cycle)
      : PreconditionError("graph is not bipartite (odd cycle of length " +
                          std::to_string(odd_cycle.size()) + ")"),
        odd_cycle_(std::move(odd_cycle)) {}

  const std::vector<Vertex>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<Vertex> odd_cycle_;
};

}  // namespace convexp

#endif  // CONVEXP_ERRORS_HPP_
