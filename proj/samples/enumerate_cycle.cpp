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

// Lists the convex 3-partitions of the 8-cycle together with the skeleton
// that produced each one.

#include <iostream>

#include "convexp/convexp.hpp"

int main() {
  using namespace convexp;
  const Graph g = generate::even_cycle(8);
  const DistanceTable d = all_distances(g);

  PartitionSet seen;
  SkeletonSearchOptions search;
  search.canonical_colors = true;
  for_each_candidate_skeleton(
      g, 3,
      [&](const Skeleton& s) {
        auto partition = resolve_skeleton(g, d, s);
        if (!partition || !seen.insert(*partition).second) return;
        std::cout << format_partition(*partition) << "  via F =";
        for (const Edge& e : s.edges) std::cout << " " << e.u << "-" << e.v;
        std::cout << '\n';
      },
      search);
  std::cout << seen.size() << " convex 3-partitions\n";
}
