// Copyright 2026 The egverify Authors
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

#pragma once

#include <stdexcept>
#include <string>

#include "egverify/graph.hpp"
#include "egverify/graph_io.hpp"
#include "egverify/markstrom_data.hpp"

namespace egv::fixtures {

/// The 24-vertex cubic planar Markstrom graph (no 4- or 8-cycle, has a
/// 16-cycle), parsed from data/markstrom.edges. Throws if the stored edge
/// list is not a 24-vertex cubic graph with 36 edges.
inline Graph markstrom() {
  Graph g = io::parse_edge_list(data::kMarkstromEdges);
  if (g.order() != 24 || g.size() != 36 || g.min_degree() != 3 || g.max_degree() != 3) {
    throw std::logic_error("Markstrom fixture is not a 24-vertex cubic graph (order " +
                           std::to_string(g.order()) + ", " + std::to_string(g.size()) + " edges)");
  }
  return g;
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

}  // namespace egv::fixtures
