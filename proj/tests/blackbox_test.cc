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

#include "divtree/blackbox.h"

#include <random>

#include <gtest/gtest.h>

#include "divtree/generate.h"
#include "divtree/oracle.h"
#include "test_util.h"

namespace divtree {
namespace {

Graph CompleteBipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) edges.push_back({i, a + j});
  }
  return Graph::FromEdges(a + b, std::move(edges));
}

TEST(BlackBoxTest, CanonicalInstancesAreDecidedAndSmall) {
  EXPECT_EQ(FindConstrainedTree(CanonicalMist(true).graph, 0, {}, 10).status,
            SearchStatus::kFound);
  EXPECT_EQ(FindConstrainedTree(CanonicalMist(false).graph, 2, {}, 10).status,
            SearchStatus::kNone);
  EXPECT_EQ(FindConstrainedTree(CanonicalNtst(false).graph, 0,
                                CanonicalNtst(false).nonterminals, 10)
                .status,
            SearchStatus::kNone);
  for (bool yes : {true, false}) {
    EXPECT_TRUE(WithinMistBound(CanonicalMist(yes)));
    EXPECT_TRUE(WithinNtstBound(CanonicalNtst(yes)));
  }
}

TEST(BlackBoxTest, MistExamples) {
  ExactMistKernel kernel;
  EXPECT_EQ(kernel.Kernelize({CycleGraph(5), 3}), CanonicalMist(true));
  EXPECT_EQ(kernel.Kernelize({StarGraph(4), 2}), CanonicalMist(false));
  EXPECT_EQ(kernel.Kernelize({StarGraph(4), 1}), CanonicalMist(true));
}

TEST(BlackBoxTest, NtstExamples) {
  ExactNtstKernel kernel;
  EXPECT_EQ(kernel.Kernelize({CycleGraph(4), {1, 2}}), CanonicalNtst(true));
  EXPECT_EQ(kernel.Kernelize({StarGraph(3), {2}}), CanonicalNtst(false));
}

TEST(BlackBoxTest, BudgetExhaustionIsUnavailable) {
  // Spanning trees of K_{2,10} have at most three internal vertices, which
  // only full enumeration (5120 trees) can confirm.
  Graph g = CompleteBipartite(2, 10);
  EXPECT_EQ(ExactMistKernel(10).Kernelize({g, 4}), std::nullopt);
  EXPECT_EQ(ExactMistKernel().Kernelize({g, 4}), CanonicalMist(false));
  EXPECT_EQ(ExactMistKernel().Kernelize({g, 3}), CanonicalMist(true));
  EXPECT_EQ(ExactNtstKernel(10).Kernelize({g, {3, 4, 5}}), std::nullopt);
  EXPECT_EQ(FindConstrainedTree(g, 4, {}, 10).status,
            SearchStatus::kBudgetExhausted);
}

TEST(BlackBoxTest, FoundTreesSatisfyTheConstraints) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 2, 9);
    Graph g = RandomConnected(n, UniformInt(rng, n - 1, std::min(n * (n - 1) / 2, 14)),
                              rng());
    const int q = UniformInt(rng, 0, n);
    VertexSet nt;
    for (Vertex v = 1; v <= n; ++v) {
      if (UniformInt(rng, 0, 3) == 0) nt.push_back(v);
    }
    TreeSearch search = FindConstrainedTree(g, q, nt, kDefaultTreeLimit);
    ASSERT_NE(search.status, SearchStatus::kBudgetExhausted);
    // The oracle with ell = 1 answers the same question.
    OracleVerdict mist = SolveLI({g, 0, q, 1, 1});
    OracleVerdict ntst = SolveLNT({g, nt, 0, 1, 1});
    if (search.tree) {
      EXPECT_GE(search.tree->internal_count(), q);
      for (Vertex v : nt) EXPECT_FALSE(search.tree->is_leaf(v));
    }
    if (nt.empty()) {
      EXPECT_EQ(search.status == SearchStatus::kFound,
                mist.answer == Answer::kYes);
    }
    if (q == 0) {
      EXPECT_EQ(search.status == SearchStatus::kFound,
                ntst.answer == Answer::kYes);
    }
  }
}

TEST(BlackBoxTest, ExactPluginsPreserveAnswers) {
  std::mt19937_64 rng(4);
  ExactMistKernel mist;
  ExactNtstKernel ntst;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = UniformInt(rng, 3, 8);
    Graph g = RandomConnected(n, UniformInt(rng, n - 1, std::min(n * (n - 1) / 2, 12)),
                              rng());
    const int q = UniformInt(rng, 0, n - 1);
    MistInstance out = *mist.Kernelize({g, q});
    EXPECT_EQ(Equivalent(Instance{g, 0, q, 1, 1},
                         Instance{out.graph, 0, out.q, 1, 1}),
              Answer::kYes);
    EXPECT_TRUE(WithinMistBound(out));
    VertexSet nt = {static_cast<Vertex>(UniformInt(rng, 1, n))};
    NtstInstance nt_out = *ntst.Kernelize({g, nt});
    EXPECT_EQ(Equivalent(InstanceNT{g, nt, 0, 1, 1},
                         InstanceNT{nt_out.graph, nt_out.nonterminals, 0, 1, 1}),
              Answer::kYes);
    EXPECT_TRUE(WithinNtstBound(nt_out));
  }
}

TEST(BlackBoxTest, NoneHasNoPlugins) {
  BlackBox none = BlackBox::None();
  EXPECT_EQ(none.mist, nullptr);
  EXPECT_EQ(none.ntst, nullptr);
  EXPECT_EQ(BlackBox::Exact().mist->name(), "exact");
}

}  // namespace
}  // namespace divtree
