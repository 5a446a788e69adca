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

#ifndef CONVEXP_FORMAT_HPP_
#define CONVEXP_FORMAT_HPP_

#include <cstddef>
#include <ostream>
#include <string>

#include "json.hpp"

#include "convexp/partition.hpp"

namespace convexp {

// "{0,1,2}|{3,4,5}"
inline std::string format_partition(const Partition& partition) {
  std::string out;
  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    if (i > 0) out += '|';
    out += '{';
    const auto& block = partition.blocks[i];
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(block[j]);
    }
    out += '}';
  }
  return out;
}

// One partition per line, in PartitionSet order.
inline void write_text(std::ostream& out, const PartitionSet& partitions) {
  for (const Partition& p : partitions) out << format_partition(p) << '\n';
}

// {"n": .., "p": .., "count": .., "partitions": [[[0,1],[2]], ...]}
inline nlohmann::json partitions_to_json(std::size_t n, std::size_t p,
                                         const PartitionSet& partitions,
                                         bool include_partitions = true) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["p"] = p;
  doc["count"] = partitions.size();
  if (include_partitions) {
    auto& list = doc["partitions"] = nlohmann::json::array();
    for (const Partition& partition : partitions) list.push_back(partition.blocks);
  }
  return doc;
}

inline void write_json(std::ostream& out, std::size_t n, std::size_t p,
                       const PartitionSet& partitions) {
  out << partitions_to_json(n, p, partitions).dump() << '\n';
}

}  // namespace convexp

#endif  // CONVEXP_FORMAT_HPP_
