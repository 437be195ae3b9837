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

#include "divtree/graph.h"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "divtree/error.h"
#include "divtree/generate.h"
#include "test_util.h"

namespace divtree {
namespace {

using testing::Isomorphic;
using testing::MakeGraph;

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph::FromEdges(3, {{1, 4}}), PreconditionError);
  EXPECT_THROW(Graph::FromEdges(3, {{1, 2}, {2, 1}}), PreconditionError);
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  Graph g = MakeGraph(4, {{3, 1}, {1, 2}, {4, 1}, {2, 3}});
  EXPECT_EQ(g.num_edges(), 4);
  auto nbrs = g.neighbors(1);
  EXPECT_EQ(std::vector<Vertex>(nbrs.begin(), nbrs.end()),
            (std::vector<Vertex>{2, 3, 4}));
  for (const Edge& e : g.edges()) {
    EXPECT_TRUE(g.has_edge(e.v, e.u));
  }
  EXPECT_EQ(g.EdgeIndex(3, 2), std::optional<int>(3));
  EXPECT_FALSE(g.EdgeIndex(3, 4).has_value());
}

TEST(GraphTest, PendantVertices) {
  EXPECT_EQ(PendantVertices(PathGraph(3)), (VertexSet{1, 3}));
  EXPECT_TRUE(PendantVertices(CycleGraph(4)).empty());
  EXPECT_EQ(PendantVertices(StarGraph(4)), (VertexSet{2, 3, 4, 5}));
}

TEST(GraphTest, MaximalPathsSplitAtBranchVertices) {
  // Triangle 1-2-3 with the path 3-4-5-6 closed back to 1.
  Graph g = MakeGraph(6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
  std::vector<Degree2Path> paths = MaximalDegree2Paths(g);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(paths[1].vertices(), (std::vector<Vertex>{1, 6, 5, 4, 3}));
  EXPECT_EQ(paths[1].length(), 4);
}

TEST(GraphTest, PureCycleIsOneClosedPath) {
  std::vector<Degree2Path> paths = MaximalDegree2Paths(CycleGraph(6));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(paths[0].closed());
  EXPECT_EQ(paths[0].vertices(), (std::vector<Vertex>{1, 2, 3, 4, 5, 6, 1}));
  EXPECT_EQ(paths[0].length(), 6);
}

TEST(GraphTest, ForbiddenVertexAnchorsTheCycle) {
  std::vector<Degree2Path> paths = MaximalDegree2Paths(CycleGraph(6), {3});
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(paths[0].closed());
  EXPECT_EQ(paths[0].front(), 3);
  EXPECT_EQ(paths[0].vertices(), (std::vector<Vertex>{3, 2, 1, 6, 5, 4, 3}));
}

TEST(GraphTest, MaximalPathsPartitionAllowedDegreeTwoVertices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 3, 16);
    const int m = UniformInt(rng, n - 1, std::min(n * (n - 1) / 2, n + 4));
    Graph g = RandomConnected(n, m, rng());
    VertexSet forbidden;
    for (Vertex v = 1; v <= n; ++v) {
      if (UniformInt(rng, 0, 4) == 0) forbidden.push_back(v);
    }
    std::multiset<Vertex> internal;
    VertexSet cycle_anchors;
    for (const Degree2Path& path : MaximalDegree2Paths(g, forbidden)) {
      EXPECT_TRUE(IsDegree2Path(g, path, forbidden));
      for (Vertex v : path.internal()) internal.insert(v);
      const Vertex anchor = path.vertices().front();
      if (anchor == path.vertices().back() && g.degree(anchor) == 2) {
        cycle_anchors.push_back(anchor);
      }
    }
    for (Vertex v = 1; v <= n; ++v) {
      // A bare cycle is reported as a closed path at its smallest vertex.
      const bool allowed = g.degree(v) == 2 && !Contains(forbidden, v) &&
                           !Contains(MakeVertexSet(cycle_anchors), v);
      EXPECT_EQ(internal.count(v), allowed ? 1u : 0u) << "vertex " << v;
    }
  }
}

TEST(GraphTest, StrictlyInternalVertices) {
  Degree2Path path({1, 2, 3, 4, 5, 6, 7});
  auto s = path.strictly_internal();
  EXPECT_EQ(std::vector<Vertex>(s.begin(), s.end()), (std::vector<Vertex>{4}));
  EXPECT_THROW(Degree2Path({1, 2, 3, 4, 5, 6}).strictly_internal(),
               PreconditionError);
}

TEST(GraphTest, ContractingCycleShortensIt) {
  Graph c5 = CycleGraph(5);
  GraphEdit edit = ContractPathEdge(c5, MaximalDegree2Paths(c5)[0]);
  EXPECT_TRUE(Isomorphic(edit.graph, CycleGraph(4)));
  EXPECT_EQ(edit.renaming.merged_into, 2);
  EXPECT_EQ(edit.renaming.removed, 3);
}

TEST(GraphTest, ContractingTailPathShortensIt) {
  // Triangle 1-2-3, then 3-4-5-6-7 with 7 pendant.
  Graph g = MakeGraph(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  GraphEdit edit = ContractPathEdge(g, Degree2Path({3, 4, 5, 6, 7}));
  Graph expected = MakeGraph(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}});
  EXPECT_EQ(edit.graph, expected);
  EXPECT_EQ(edit.graph.num_vertices(), g.num_vertices() - 1);
  EXPECT_EQ(edit.graph.num_edges(), g.num_edges() - 1);
}

TEST(GraphTest, ContractionRejectsShortPaths) {
  Graph g = CycleGraph(6);
  EXPECT_THROW(ContractPathEdge(g, Degree2Path({1, 2, 3})), PreconditionError);
  // Contracting a triangle would create a parallel edge.
  EXPECT_THROW(ContractPathEdge(CycleGraph(3), Degree2Path({1, 2, 3, 1})),
               PreconditionError);
  // Vertex 1 has degree 2 only on the cycle, 2-4 is not an edge.
  EXPECT_THROW(ContractPathEdge(g, Degree2Path({1, 2, 4, 5})),
               PreconditionError);
}

TEST(GraphTest, ContractionKeepsTheGraphSimple) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = RandomlySubdivided(RandomConnected(5, 7, rng()), 3, rng());
    for (const Degree2Path& path : MaximalDegree2Paths(g)) {
      if (path.length() < (path.closed() ? 4 : 3)) continue;
      GraphEdit edit = ContractPathEdge(g, path);
      EXPECT_EQ(edit.graph.num_vertices(), g.num_vertices() - 1);
      EXPECT_EQ(edit.graph.num_edges(), g.num_edges() - 1);
      EXPECT_TRUE(edit.graph.IsConnected());
    }
  }
}

TEST(GraphTest, AnyEdgeOfAPathGivesAnIsomorphicContraction) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = RandomlySubdivided(RandomConnected(4, 5, rng()), 3, rng());
    if (g.num_vertices() > 10) continue;
    for (const Degree2Path& path : MaximalDegree2Paths(g)) {
      const auto& x = path.vertices();
      const int r = path.length();
      if (r < (path.closed() ? 4 : 3)) continue;
      Graph canonical = ContractPathEdge(g, path).graph;
      for (int i = 1; i + 1 < r; ++i) {
        // The window (x_{i-1}, x_i, x_{i+1}, x_{i+2}) contracts x_i x_{i+1}.
        if (i + 2 > r) break;
        Degree2Path window({x[i - 1], x[i], x[i + 1], x[i + 2]});
        if (window.closed()) continue;
        EXPECT_TRUE(Isomorphic(ContractPathEdge(g, window).graph, canonical));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(GraphTest, DeleteVertex) {
  GraphEdit edit = DeleteVertex(CompleteGraph(3), 3);
  EXPECT_EQ(edit.graph, MakeGraph(2, {{1, 2}}));
  Graph star = DeleteVertex(StarGraph(3), 1).graph;
  EXPECT_EQ(star.num_vertices(), 3);
  EXPECT_EQ(star.num_edges(), 0);
  Graph path = DeleteVertex(PathGraph(3), 2).graph;
  EXPECT_EQ(path.num_vertices(), 2);
  EXPECT_FALSE(path.IsConnected());
  EXPECT_THROW(DeleteVertex(PathGraph(3), 4), PreconditionError);
}

TEST(GraphTest, RenamingShiftsIdsAboveTheRemovedVertex) {
  Renaming deletion{5, 3, 0};
  EXPECT_EQ(deletion.AsVector(), (std::vector<Vertex>{0, 1, 2, 0, 3, 4}));
  Renaming merge{5, 4, 2};
  EXPECT_EQ(merge(4), 2);
  EXPECT_EQ(merge(5), 4);
  EXPECT_EQ(Rename({1, 3, 4, 5}, deletion), (VertexSet{1, 3, 4}));
  EXPECT_EQ(Rename({2, 4}, merge), (VertexSet{2}));
}

TEST(GraphTest, ConnectivityAndTrees) {
  EXPECT_TRUE(PathGraph(5).IsTree());
  EXPECT_FALSE(CycleGraph(5).IsTree());
  EXPECT_FALSE(MakeGraph(4, {{1, 2}, {3, 4}}).IsConnected());
  EXPECT_EQ(CycleGraph(5).MinDegree(), 2);
}

}  // namespace
}  // namespace divtree
