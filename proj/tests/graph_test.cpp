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

#include "egverify/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace egv {
namespace {

TEST(NewPath, ThreeVertices) {
  Graph g = new_path(3);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
}

TEST(NewPath, SingleEdge) {
  Graph g = new_path(2);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(NewPath, DegreeSequenceOfP13) {
  Graph g = new_path(13);
  EXPECT_EQ(g.order(), 13);
  EXPECT_EQ(g.size(), 12);
  for (Vertex v = 0; v < 13; ++v) EXPECT_EQ(g.degree(v), (v == 0 || v == 12) ? 1 : 2) << v;
}

TEST(NewPath, RejectsShortPaths) {
  EXPECT_THROW(new_path(1), std::invalid_argument);
  EXPECT_THROW(new_path(0), std::invalid_argument);
}

TEST(AddVertex, ReturnsNextIndex) {
  Graph g = new_path(3);
  EXPECT_EQ(g.add_vertex(), 3);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.degree(3), 0);

  Graph empty;
  EXPECT_EQ(empty.add_vertex(), 0);
  EXPECT_EQ(empty.add_vertex(), 1);
}

TEST(AddVertex, CapacityIsEnforced) {
  Graph g(kMaxVertices);
  EXPECT_THROW(g.add_vertex(), std::length_error);
}

TEST(AddEdge, ClosesTriangle) {
  Graph g = new_path(3);
  g.add_edge(0, 2);
  EXPECT_EQ(g, new_complete(3));
}

TEST(AddEdge, ContractViolations) {
  Graph g = new_path(3);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1), std::logic_error);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(g.remove_edge(0, 2), std::logic_error);
}

TEST(AddEdge, AddThenRemoveRestores) {
  Graph g = new_path(5);
  const Graph before = g;
  g.add_edge(0, 4);
  g.remove_edge(4, 0);
  EXPECT_EQ(g, before);
}

TEST(LargestLowDegreeVertex, Examples) {
  EXPECT_EQ(get_largest_low_degree_vertex(new_path(3)), 2);
  EXPECT_EQ(get_largest_low_degree_vertex(new_cycle(4)), 3);
  EXPECT_EQ(get_largest_low_degree_vertex(new_complete(4)), std::nullopt);
  EXPECT_EQ(get_largest_low_degree_vertex(Graph{}), std::nullopt);
}

TEST(LargestLowDegreeVertex, AgreesWithScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testing::random_graph(1 + trial % 40, 0.15, rng);
    std::optional<Vertex> expected;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) <= 2) expected = v;
    }
    EXPECT_EQ(get_largest_low_degree_vertex(g), expected);
  }
}

TEST(Fingerprint, DeterministicAndDiscriminating) {
  Graph p3 = new_path(3);
  EXPECT_EQ(fingerprint(p3), fingerprint(p3));
  EXPECT_NE(fingerprint(p3), fingerprint(new_complete(3)));
  EXPECT_NE(fingerprint(Graph(3)), fingerprint(Graph(4)));
}

TEST(MutationLog, RollbackRestoresRandomSequences) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_graph(2 + trial % 30, 0.2, rng);
    const Graph start = g;
    const auto fp = fingerprint(g);
    MutationLog log;
    std::vector<MutationLog::Mark> marks;
    for (int step = 0; step < 40; ++step) {
      if (rng() % 3 == 0) {
        marks.push_back(log.mark());
        if (g.order() < kMaxVertices) log.add_vertex(g);
        continue;
      }
      Vertex i = static_cast<Vertex>(rng() % g.order());
      Vertex j = static_cast<Vertex>(rng() % g.order());
      if (i != j && !g.has_edge(i, j)) log.add_edge(g, i, j);
    }
    // Partial rollback followed by a full one.
    if (!marks.empty()) log.rollback_to(g, marks[marks.size() / 2]);
    log.rollback_to(g, 0);
    EXPECT_EQ(fingerprint(g), fp);
    EXPECT_EQ(g, start);
  }
}

TEST(Graph, DegreeCacheCoherent) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(64, 0.1, rng);
    MutationLog log;
    for (int step = 0; step < 100; ++step) {
      Vertex i = static_cast<Vertex>(rng() % 64);
      Vertex j = static_cast<Vertex>(rng() % 64);
      if (i == j) continue;
      if (g.has_edge(i, j)) {
        g.remove_edge(i, j);
      } else {
        g.add_edge(i, j);
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(g.degree(v), set_size(g.neighbors(v)));
      EXPECT_FALSE(contains(g.neighbors(v), v));
      for_each_vertex(g.neighbors(v), [&](Vertex w) { EXPECT_TRUE(g.has_edge(w, v)); });
    }
  }
}

TEST(Graph, InducedAndRelabel) {
  Graph c5 = new_cycle(5);
  Graph p4 = c5.induced(bit(0) | bit(1) | bit(2) | bit(3));
  EXPECT_EQ(p4, new_path(4));
  Graph r = c5.relabeled({4, 3, 2, 1, 0});
  EXPECT_EQ(r, c5);
}

}  // namespace
}  // namespace egv
