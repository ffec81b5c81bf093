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

#include "egverify/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "egverify/fixtures.hpp"
#include "test_support.hpp"

namespace egv {
namespace {

using oracle::all_cycle_lengths;

const ForbiddenCycleSpec kPow2 = ForbiddenCycleSpec::powers_of_two();
const ForbiddenCycleSpec k48 = ForbiddenCycleSpec::exactly({4, 8});

TEST(CycleSpectrum, SmallGraphs) {
  EXPECT_EQ(all_cycle_lengths(new_cycle(6)).as_vector(), (std::vector<int>{6}));
  EXPECT_EQ(all_cycle_lengths(new_complete(4)).as_vector(), (std::vector<int>{3, 4}));
  EXPECT_EQ(all_cycle_lengths(new_complete(5)).as_vector(), (std::vector<int>{3, 4, 5}));
  EXPECT_TRUE(all_cycle_lengths(new_path(9)).as_vector().empty());
  EXPECT_EQ(all_cycle_lengths(fixtures::petersen()).as_vector(), (std::vector<int>{5, 6, 8, 9}));
}

TEST(CycleSpectrum, Markstrom) {
  auto s = all_cycle_lengths(fixtures::markstrom());
  EXPECT_FALSE(s.contains(4));
  EXPECT_FALSE(s.contains(8));
  EXPECT_TRUE(s.contains(16));
}

TEST(CycleSpectrum, WitnessIsACycle) {
  Graph g = fixtures::markstrom();
  auto cycle = oracle::find_cycle_of_length(g, 16);
  ASSERT_TRUE(cycle.has_value());
  ASSERT_EQ(cycle->size(), 16U);
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    EXPECT_TRUE(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
  }
  EXPECT_FALSE(oracle::find_cycle_of_length(g, 8).has_value());
}

TEST(LongestInducedPath, Examples) {
  EXPECT_EQ(oracle::longest_induced_path(new_path(9)), 9);
  EXPECT_EQ(oracle::longest_induced_path(new_cycle(5)), 4);
  EXPECT_EQ(oracle::longest_induced_path(new_complete(5)), 2);
  EXPECT_EQ(oracle::longest_induced_path(Graph(3)), 1);
  EXPECT_EQ(oracle::longest_induced_path(Graph{}), 0);
}

TEST(LongestInducedPath, Markstrom) {
  Graph g = fixtures::markstrom();
  auto witness = oracle::longest_induced_path_witness(g);
  EXPECT_EQ(witness.size(), 17U);
  EXPECT_TRUE(oracle::is_induced_path(g, witness));
}

TEST(IsCounterexample, Examples) {
  EXPECT_FALSE(oracle::is_counterexample(new_complete(4), 5, kPow2));
  for (int k = 7; k <= 12; ++k) EXPECT_FALSE(oracle::is_counterexample(fixtures::petersen(), k, kPow2));
  EXPECT_TRUE(oracle::is_counterexample(fixtures::markstrom(), 18, k48));
  EXPECT_FALSE(oracle::is_counterexample(fixtures::markstrom(), 17, k48));
  EXPECT_FALSE(oracle::is_counterexample(fixtures::markstrom(), 18, kPow2));
  EXPECT_FALSE(oracle::is_counterexample(new_path(6), 6, kPow2));
}

TEST(Isomorphism, Examples) {
  std::mt19937_64 rng(3);
  Graph m = fixtures::markstrom();
  EXPECT_TRUE(oracle::are_isomorphic(m, m.relabeled(testing::random_permutation(24, rng))));
  EXPECT_FALSE(oracle::are_isomorphic(new_cycle(6), testing::two_triangles()));
  EXPECT_FALSE(oracle::are_isomorphic(new_path(4), new_complete(3)));
}

TEST(Isomorphism, ClassesGroupRelabelings) {
  std::mt19937_64 rng(21);
  Graph m = fixtures::markstrom();
  std::vector<Graph> graphs{m, fixtures::petersen(), m.relabeled(testing::random_permutation(24, rng)),
                            new_cycle(6), m.relabeled(testing::random_permutation(24, rng)),
                            testing::two_triangles()};
  auto classes = oracle::isomorphism_classes(graphs);
  ASSERT_EQ(classes.size(), 4U);
  EXPECT_EQ(classes[0], (std::vector<std::size_t>{0, 2, 4}));
}

}  // namespace
}  // namespace egv
