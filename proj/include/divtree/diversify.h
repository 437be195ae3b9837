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

#ifndef DIVTREE_DIVERSIFY_H_
#define DIVTREE_DIVERSIFY_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divtree/graph.h"
#include "divtree/spanning_tree.h"

namespace divtree {

// ceil(k / 4), the number of leaves each tree of a diverse family swaps.
inline int SwapBlockSize(int k) { return (k + 3) / 4; }

// Swap targets for a set of leaves of a spanning tree.
//
// Every leaf v of `leaves` has its tree neighbor `parent[v]` and a second graph
// neighbor `target[v]`. The conflict graph joins u and v when one is the
// other's target; it is a forest once planning finishes, and `independent` is
// an independent set in it holding at least half of the leaves. `blocks` are
// ell disjoint groups of SwapBlockSize(k) leaves taken from `independent`.
struct LeafSwapPlan {
  SpanningTree tree;
  VertexSet leaves;
  std::map<Vertex, Vertex> parent;
  std::map<Vertex, Vertex> target;
  std::vector<Edge> conflicts;
  VertexSet independent;
  std::vector<VertexSet> blocks;
  int rotations = 0;  // target reassignments needed to break conflict cycles
};

// Conflict edges induced by `target` on `leaves`, sorted.
std::vector<Edge> ConflictEdges(const VertexSet& leaves,
                                const std::map<Vertex, Vertex>& target);

bool IsForest(const VertexSet& vertices, const std::vector<Edge>& edges);

// Picks the smallest-id target other than the parent for every leaf, then
// removes conflict cycles one at a time: on a cycle v_1 v_2 ... with
// target[v_2] = v_1, target[v_2] becomes v_3, which drops one conflict edge.
// Preconditions: every vertex of `leaves` is a leaf of `t` with graph degree
// >= 2, |leaves| >= 2 * ceil(k/4) * ell, n >= 3.
LeafSwapPlan PlanSwaps(const Graph& g, const SpanningTree& t,
                       const VertexSet& leaves, int k, int ell);

// T_i = T + {v target[v] : v in block i} - {v parent[v] : v in block i}.
// Each vertex of `nt` must be internal in the plan's tree and tree-adjacent to
// at least two vertices outside plan.leaves; it then stays internal in every
// T_i.
std::vector<SpanningTree> BuildDiverseFamily(const Graph& g,
                                             const LeafSwapPlan& plan,
                                             const VertexSet& nt = {});

struct TreeCheck {
  std::optional<std::string> invalid;  // set when not a spanning tree
  int leaves = 0;
  int internal = 0;
  bool enough_leaves = false;
  bool enough_internal = false;
  VertexSet nonterminal_leaves;  // vertices of nt that are leaves
  bool ok() const {
    return !invalid && enough_leaves && enough_internal &&
           nonterminal_leaves.empty();
  }
};

struct PairCheck {
  int i = 0;
  int j = 0;
  int distance = 0;
  bool ok = false;
};

struct FamilyReport {
  std::vector<TreeCheck> trees;
  std::vector<PairCheck> pairs;  // only computed between valid trees
  bool ok = false;
};

// Candidate trees given as raw edge lists so that invalid members can be
// reported instead of rejected.
FamilyReport VerifyFamily(const Graph& g,
                          const std::vector<std::vector<Edge>>& family, int p,
                          int q, int k, const VertexSet& nt = {});
FamilyReport VerifyFamily(const Graph& g,
                          const std::vector<SpanningTree>& family, int p,
                          int q, int k, const VertexSet& nt = {});

}  // namespace divtree

#endif  // DIVTREE_DIVERSIFY_H_
