// Copyright 2026 The divtree Authors
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

#include "divtree/generate.h"

#include <gtest/gtest.h>

#include "divtree/error.h"
#include "divtree/kernelizer.h"
#include "test_util.h"

namespace divtree {
namespace {

TEST(GenerateTest, Cycle) {
  Graph c5 = Generate("cycle", {.n = 5}, 0);
  EXPECT_EQ(c5, testing::MakeGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
}

TEST(GenerateTest, SubdividedCompleteGraphCountsVertices) {
  Graph g = Subdivided(CompleteGraph(4), 6);
  EXPECT_EQ(g.num_vertices(), 4 + 6 * 5);
  EXPECT_EQ(g.num_edges(), 6 * 6);
  for (Vertex v = 5; v <= g.num_vertices(); ++v) EXPECT_EQ(g.degree(v), 2);
  for (Vertex v = 1; v <= 4; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(GenerateTest, RandomConnectedIsDeterministic) {
  Graph a = RandomConnected(9, 12, 7);
  Graph b = RandomConnected(9, 12, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num_vertices(), 9);
  EXPECT_EQ(a.num_edges(), 12);
  EXPECT_TRUE(a.IsConnected());
  EXPECT_FALSE(a == RandomConnected(9, 12, 8));
}

TEST(GenerateTest, RejectsInfeasibleParameters) {
  EXPECT_THROW(RandomConnected(5, 3, 1), PreconditionError);
  EXPECT_THROW(RandomConnected(4, 7, 1), PreconditionError);
  EXPECT_THROW(CycleGraph(2), PreconditionError);
  EXPECT_THROW(Theta(1, 1, 3), PreconditionError);
  EXPECT_THROW(CubeLike(7), PreconditionError);
  EXPECT_THROW(Generate("petersen", {}, 1), PreconditionError);
}

TEST(GenerateTest, ThetaHasTwoBranchVertices) {
  Graph g = Theta(2, 3, 4);
  EXPECT_EQ(g.num_vertices(), 2 + 1 + 2 + 3);
  EXPECT_EQ(g.degree(1), 3);
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_EQ(g.MinDegree(), 2);
}

TEST(GenerateTest, CubeLikeHasMinimumDegreeThree) {
  EXPECT_TRUE(testing::Isomorphic(CubeLike(4), CompleteGraph(4)));
  for (int n : {6, 8, 20, 64}) {
    Graph g = CubeLike(n);
    EXPECT_EQ(g.num_vertices(), n);
    EXPECT_EQ(g.MinDegree(), 3);
    EXPECT_TRUE(g.IsConnected());
  }
}

TEST(GenerateTest, GadgetsTriggerTheirRules) {
  Graph sub = Subdivided(CompleteGraph(4), 8);
  EXPECT_TRUE(RuleApplies(Instance{sub, 0, 0, 1, 1}, Rule::kR1));
  Graph gadget = TwinPendantGadget(CompleteGraph(4), 2);
  EXPECT_EQ(gadget.num_vertices(), 8);
  EXPECT_TRUE(RuleApplies(Instance{gadget, 1, 0, 1, 1}, Rule::kR2));
}

TEST(GenerateTest, EveryFamilyIsConnected) {
  FamilyParams params{.n = 8, .m = 10, .a = 2, .b = 3, .c = 4, .factor = 3,
                      .count = 2, .base = CycleGraph(4)};
  for (const std::string& family : FamilyNames()) {
    EXPECT_TRUE(Generate(family, params, 3).IsConnected()) << family;
  }
}

}  // namespace
}  // namespace divtree
