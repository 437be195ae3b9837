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

#ifndef DIVTREE_SPANNING_TREE_H_
#define DIVTREE_SPANNING_TREE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divtree/graph.h"

namespace divtree {

// An edge subset of a host graph that forms a tree on all of its vertices.
// Leaves are the tree-degree-1 vertices; every other vertex is internal.
class SpanningTree {
 public:
  // Throws PreconditionError when `edges` is not a spanning tree of `host`.
  static SpanningTree Create(const Graph& host, std::vector<Edge> edges);

  // Reason why `edges` fails to be a spanning tree of `host`, if it does.
  static std::optional<std::string> Diagnose(const Graph& host,
                                             const std::vector<Edge>& edges);

  const Graph& host() const { return host_; }
  const std::vector<Edge>& edges() const { return tree_.edges(); }
  int num_vertices() const { return tree_.num_vertices(); }

  // The tree as a graph on the host's vertex ids.
  const Graph& AsGraph() const { return tree_; }

  int degree(Vertex v) const { return tree_.degree(v); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return tree_.neighbors(v);
  }
  bool contains(Vertex a, Vertex b) const { return tree_.has_edge(a, b); }
  bool is_leaf(Vertex v) const { return tree_.degree(v) == 1; }

  VertexSet leaves() const;
  VertexSet internal_vertices() const;
  int leaf_count() const;
  int internal_count() const { return num_vertices() - leaf_count(); }

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
    return a.host_ == b.host_ && a.tree_ == b.tree_;
  }

 private:
  SpanningTree(Graph host, Graph tree)
      : host_(std::move(host)), tree_(std::move(tree)) {}

  Graph host_;
  Graph tree_;
};

// |{v : deg_T(v) >= 3}| <= |leaves(T)| - 2 for every tree with n >= 2.
bool LeafBranchBoundHolds(const SpanningTree& t);

// Deterministic depth-first tree, smallest neighbor first, rooted at 1.
// Throws PreconditionError on a disconnected graph.
SpanningTree ArbitrarySpanningTree(const Graph& g);

// Same traversal from another root.
SpanningTree DepthFirstTree(const Graph& g, Vertex root);

// |E(a) symmetric-difference E(b)|. Throws PreconditionError when the hosts
// differ.
int Hamming(const SpanningTree& a, const SpanningTree& b);

// Which exchange the leaf augmentation used, with the tree rooted at the first
// vertex x_1 of the path (x_1, ..., x_d).
enum class AugmentCase {
  kUnrelated,       // w neither ancestor nor descendant of v: drop x_2 x_3
  kBelowPathEnd,    // w = x_d or below it: drop x_{d-2} x_{d-1}
  kOnPathBelow,     // w = x_j after v on the path: drop x_{j-1} x_j
  kOnPathAbove,     // w = x_j before v, j >= 2: drop x_j x_{j+1}
  kPathStart,       // w = x_1: drop x_2 x_3
};

struct LeafAugmentation {
  SpanningTree tree;
  Edge added;
  Edge removed;
  AugmentCase exchange;
};

// Adds vw to `t` and removes one edge of `path` so that the leaf count grows by
// at least one and every new leaf is an internal vertex of `path`.
// Preconditions: `path` is a degree-2-path of `t` of length >= 6, v is strictly
// internal to it, and vw is an edge of `g` but not of `t`.
LeafAugmentation AugmentLeaf(const Graph& g, const SpanningTree& t,
                             const Degree2Path& path, Vertex v, Vertex w);

struct LeafGrowth {
  SpanningTree tree;
  // False means no augmentation applies below the target; the graph is then
  // provably smaller than (2 * target + |nt|) * (max_path + 3).
  bool target_reached = false;
  int augmentations = 0;
};

// First-improvement local search with AugmentLeaf until `start` has at least
// `target` leaves or no augmentation applies. Paths are scanned among the
// maximal tree paths whose internal vertices avoid leaves, branch vertices and
// `nt`; candidates are taken by path order, then position, then smallest w.
// Preconditions: every vertex of `nt` is internal in `start`, max_path >= 2,
// and `g` has no degree-2-path of length >= max_path whose internal vertices
// avoid `nt`.
LeafGrowth GrowLeaves(const Graph& g, const SpanningTree& start,
                      const VertexSet& nt, int target, int max_path);

}  // namespace divtree

#endif  // DIVTREE_SPANNING_TREE_H_
