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

#include "divtree/spanning_tree.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "divtree/error.h"

namespace divtree {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string EdgeName(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

std::optional<std::string> SpanningTree::Diagnose(
    const Graph& host, const std::vector<Edge>& edges) {
  const int n = host.num_vertices();
  if (n == 0) return "host graph is empty";
  if (static_cast<int>(edges.size()) != n - 1) {
    return "expected " + std::to_string(n - 1) + " edges, got " +
           std::to_string(edges.size());
  }
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (!host.has_edge(e.u, e.v)) return "edge " + EdgeName(e) + " not in graph";
    if (!sets.Union(e.u, e.v)) return "edge " + EdgeName(e) + " closes a cycle";
  }
  return std::nullopt;
}

SpanningTree SpanningTree::Create(const Graph& host, std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge::Of(e.u, e.v);
  if (auto why = Diagnose(host, edges)) {
    throw PreconditionError("not a spanning tree: " + *why);
  }
  SpanningTree t(host, Graph::FromEdges(host.num_vertices(), std::move(edges)));
  if (!LeafBranchBoundHolds(t)) {
    throw InvariantError("tree violates |V>=3| <= |V1| - 2");
  }
  return t;
}

VertexSet SpanningTree::leaves() const {
  VertexSet out;
  for (Vertex v = 1; v <= num_vertices(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

VertexSet SpanningTree::internal_vertices() const {
  VertexSet out;
  for (Vertex v = 1; v <= num_vertices(); ++v) {
    if (!is_leaf(v)) out.push_back(v);
  }
  return out;
}

int SpanningTree::leaf_count() const {
  int count = 0;
  for (Vertex v = 1; v <= num_vertices(); ++v) count += is_leaf(v);
  return count;
}

bool LeafBranchBoundHolds(const SpanningTree& t) {
  if (t.num_vertices() < 2) return true;
  int branch = 0;
  int leaves = 0;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    branch += t.degree(v) >= 3;
    leaves += t.degree(v) == 1;
  }
  return branch <= leaves - 2;
}

SpanningTree ArbitrarySpanningTree(const Graph& g) {
  return DepthFirstTree(g, 1);
}

SpanningTree DepthFirstTree(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  if (n == 0 || !g.IsConnected()) {
    throw PreconditionError("spanning tree of a disconnected graph");
  }
  if (!g.has_vertex(root)) throw PreconditionError("unknown root vertex");
  std::vector<char> seen(n + 1, 0);
  std::vector<std::pair<Vertex, size_t>> stack = {{root, 0}};
  seen[root] = 1;
  std::vector<Edge> edges;
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    auto nb = g.neighbors(x);
    if (next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex y = nb[next++];
    if (seen[y]) continue;
    seen[y] = 1;
    edges.push_back(Edge::Of(x, y));
    stack.push_back({y, 0});
  }
  return SpanningTree::Create(g, std::move(edges));
}

int Hamming(const SpanningTree& a, const SpanningTree& b) {
  if (!(a.host() == b.host())) {
    throw PreconditionError("Hamming distance between trees of different graphs");
  }
  const auto& ea = a.edges();
  const auto& eb = b.edges();
  size_t i = 0, j = 0;
  int common = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i] == eb[j]) {
      ++common;
      ++i;
      ++j;
    } else if (ea[i] < eb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<int>(ea.size() + eb.size()) - 2 * common;
}

LeafAugmentation AugmentLeaf(const Graph& g, const SpanningTree& t,
                             const Degree2Path& path, Vertex v, Vertex w) {
  if (!(t.host() == g)) throw PreconditionError("tree belongs to another graph");
  const auto& x = path.vertices();
  const int d = static_cast<int>(x.size());
  if (path.length() < 6) {
    throw PreconditionError("leaf augmentation needs a path of length >= 6");
  }
  if (path.closed() || !IsDegree2Path(t.AsGraph(), path)) {
    throw PreconditionError("path is not a degree-2-path of the tree");
  }
  auto pos_of = [&](Vertex u) {
    auto it = std::find(x.begin(), x.end(), u);
    return it == x.end() ? -1 : static_cast<int>(it - x.begin());
  };
  const int i = pos_of(v);
  if (i < 3 || i > path.length() - 3) {
    throw PreconditionError("v is not strictly internal to the path");
  }
  if (!g.has_edge(v, w)) throw PreconditionError("vw is not an edge of g");
  if (t.contains(v, w)) throw PreconditionError("vw is already a tree edge");

  // Positions below are 0-based: x[0] is x_1 of the rooted picture.
  Edge removed;
  AugmentCase exchange;
  const int j = pos_of(w);
  if (j == 0) {
    exchange = AugmentCase::kPathStart;
    removed = Edge::Of(x[1], x[2]);
  } else if (j > 0 && j < i) {
    exchange = AugmentCase::kOnPathAbove;
    removed = Edge::Of(x[j], x[j + 1]);
  } else if (j > i && j < d - 1) {
    exchange = AugmentCase::kOnPathBelow;
    removed = Edge::Of(x[j - 1], x[j]);
  } else {
    // Is w in the subtree hanging below x_d (x_d included)?
    bool below_end = (j == d - 1);
    if (!below_end) {
      std::vector<char> seen(g.num_vertices() + 1, 0);
      seen[x[d - 1]] = 1;
      seen[x[d - 2]] = 1;
      std::vector<Vertex> stack = {x[d - 1]};
      while (!stack.empty() && !below_end) {
        Vertex a = stack.back();
        stack.pop_back();
        for (Vertex b : t.neighbors(a)) {
          if (seen[b]) continue;
          if (b == w) below_end = true;
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    if (below_end) {
      exchange = AugmentCase::kBelowPathEnd;
      removed = Edge::Of(x[d - 3], x[d - 2]);
    } else {
      exchange = AugmentCase::kUnrelated;
      removed = Edge::Of(x[1], x[2]);
    }
  }

  const Edge added = Edge::Of(v, w);
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) {
    if (e != removed) edges.push_back(e);
  }
  edges.push_back(added);
  SpanningTree result = SpanningTree::Create(g, std::move(edges));

  if (result.leaf_count() < t.leaf_count() + 1) {
    throw InvariantError("leaf augmentation did not gain a leaf");
  }
  auto internal = path.internal();
  for (Vertex z : result.leaves()) {
    if (!t.is_leaf(z) &&
        std::find(internal.begin(), internal.end(), z) == internal.end()) {
      throw InvariantError("leaf augmentation created a leaf off the path");
    }
  }
  return {std::move(result), added, removed, exchange};
}

LeafGrowth GrowLeaves(const Graph& g, const SpanningTree& start,
                      const VertexSet& nt, int target, int max_path) {
  if (!(start.host() == g)) {
    throw PreconditionError("start tree belongs to another graph");
  }
  if (max_path < 2) throw PreconditionError("path bound must be >= 2");
  for (Vertex v : nt) {
    if (!g.has_vertex(v) || start.is_leaf(v)) {
      throw PreconditionError("non-terminal " + std::to_string(v) +
                              " is not internal in the start tree");
    }
  }
  for (const Degree2Path& p : MaximalDegree2Paths(g, nt)) {
    if (p.length() >= max_path) {
      throw PreconditionError(
          "graph has a degree-2-path of length " + std::to_string(p.length()) +
          " avoiding the non-terminals");
    }
  }

  LeafGrowth growth{start, false, 0};
  const int n = g.num_vertices();
  while (growth.tree.leaf_count() < target) {
    bool applied = false;
    for (const Degree2Path& p : MaximalDegree2Paths(growth.tree.AsGraph(), nt)) {
      if (p.length() < 6) continue;
      for (Vertex v : p.strictly_internal()) {
        for (Vertex w : g.neighbors(v)) {
          if (growth.tree.contains(v, w)) continue;
          growth.tree = AugmentLeaf(g, growth.tree, p, v, w).tree;
          ++growth.augmentations;
          applied = true;
          break;
        }
        if (applied) break;
      }
      if (applied) break;
    }
    if (!applied) break;
    if (growth.augmentations > n) {
      throw InvariantError("leaf growth exceeded n augmentations");
    }
  }
  growth.target_reached = growth.tree.leaf_count() >= target;
  if (!growth.target_reached) {
    const long long bound =
        (2LL * target + static_cast<long long>(nt.size())) * (max_path + 3);
    if (n >= bound) {
      throw InvariantError("leaf growth stalled on a graph above the size bound");
    }
  }
  return growth;
}

}  // namespace divtree
