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

#include "divtree/diversify.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "divtree/error.h"

namespace divtree {
namespace {

// Adjacency over an arbitrary vertex subset, keyed by vertex id.
using Adjacency = std::map<Vertex, std::vector<Vertex>>;

Adjacency BuildAdjacency(const VertexSet& vertices,
                         const std::vector<Edge>& edges) {
  Adjacency adj;
  for (Vertex v : vertices) adj[v];
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// Vertex sequence of the cycle closed by the first conflict edge whose ends
// are already connected, or empty when the edges form a forest.
std::vector<Vertex> FindCycle(const VertexSet& vertices,
                              const std::vector<Edge>& edges) {
  std::map<Vertex, Vertex> parent;
  for (Vertex v : vertices) parent[v] = v;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> forest;
  for (const Edge& e : edges) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      forest.push_back(e);
      continue;
    }
    // Path e.u -> e.v inside the forest built so far.
    Adjacency adj = BuildAdjacency(vertices, forest);
    std::map<Vertex, Vertex> via;
    std::vector<Vertex> queue = {e.u};
    via[e.u] = e.u;
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (x == e.v) break;
      for (Vertex y : adj[x]) {
        if (via.emplace(y, x).second) queue.push_back(y);
      }
    }
    std::vector<Vertex> cycle;
    for (Vertex x = e.v; x != e.u; x = via.at(x)) cycle.push_back(x);
    cycle.push_back(e.u);
    return cycle;
  }
  return {};
}

}  // namespace

std::vector<Edge> ConflictEdges(const VertexSet& leaves,
                                const std::map<Vertex, Vertex>& target) {
  std::set<Edge> edges;
  for (Vertex v : leaves) {
    auto it = target.find(v);
    if (it != target.end() && it->second != v && Contains(leaves, it->second)) {
      edges.insert(Edge::Of(v, it->second));
    }
  }
  return {edges.begin(), edges.end()};
}

bool IsForest(const VertexSet& vertices, const std::vector<Edge>& edges) {
  return FindCycle(vertices, edges).empty();
}

LeafSwapPlan PlanSwaps(const Graph& g, const SpanningTree& t,
                       const VertexSet& leaves, int k, int ell) {
  if (!(t.host() == g)) throw PreconditionError("tree belongs to another graph");
  if (g.num_vertices() < 3) throw PreconditionError("swap planning needs n >= 3");
  if (k < 1 || ell < 1) throw PreconditionError("k and ell must be >= 1");
  if (leaves != MakeVertexSet(leaves)) {
    throw PreconditionError("leaf set must be sorted and unique");
  }
  const int block = SwapBlockSize(k);
  if (static_cast<long long>(leaves.size()) < 2LL * block * ell) {
    throw PreconditionError("need at least 2*ceil(k/4)*ell leaves, got " +
                            std::to_string(leaves.size()));
  }

  LeafSwapPlan plan{t, leaves, {}, {}, {}, {}, {}, 0};
  for (Vertex v : leaves) {
    if (!g.has_vertex(v) || !t.is_leaf(v)) {
      throw PreconditionError("vertex " + std::to_string(v) + " is not a leaf");
    }
    if (g.degree(v) < 2) {
      throw PreconditionError("leaf " + std::to_string(v) + " has degree 1");
    }
    const Vertex parent = t.neighbors(v)[0];
    plan.parent[v] = parent;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent) {
        plan.target[v] = w;
        break;
      }
    }
  }

  std::vector<Edge> conflicts = ConflictEdges(leaves, plan.target);
  const size_t initial = conflicts.size();
  while (true) {
    std::vector<Vertex> cycle = FindCycle(leaves, conflicts);
    if (cycle.empty()) break;
    const int r = static_cast<int>(cycle.size());
    bool rotated = false;
    for (int dir : {1, -1}) {
      for (int i = 0; i < r && !rotated; ++i) {
        const Vertex v1 = cycle[i];
        const Vertex v2 = cycle[((i + dir) % r + r) % r];
        const Vertex v3 = cycle[((i + 2 * dir) % r + r) % r];
        if (plan.target.at(v2) == v1) {
          plan.target[v2] = v3;
          rotated = true;
        }
      }
      if (rotated) break;
    }
    std::vector<Edge> next = ConflictEdges(leaves, plan.target);
    if (!rotated || next.size() >= conflicts.size()) {
      throw InvariantError("target rotation failed to shrink the conflict graph");
    }
    conflicts = std::move(next);
    ++plan.rotations;
    if (static_cast<size_t>(plan.rotations) > initial) {
      throw InvariantError("target rotation did not terminate");
    }
  }
  for (Vertex v : leaves) {
    const Vertex w = plan.target.at(v);
    if (w == plan.parent.at(v) || !g.has_edge(v, w)) {
      throw InvariantError("swap target is not a second neighbor");
    }
  }
  plan.conflicts = conflicts;

  // Larger side of the bipartition in each tree of the forest.
  Adjacency adj = BuildAdjacency(leaves, conflicts);
  std::map<Vertex, int> color;
  std::vector<Vertex> independent;
  for (Vertex root : leaves) {
    if (color.count(root)) continue;
    std::vector<Vertex> side[2];
    std::vector<Vertex> queue = {root};
    color[root] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      side[color[x]].push_back(x);
      for (Vertex y : adj[x]) {
        if (!color.count(y)) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        }
      }
    }
    const auto& keep = side[0].size() >= side[1].size() ? side[0] : side[1];
    independent.insert(independent.end(), keep.begin(), keep.end());
  }
  plan.independent = MakeVertexSet(std::move(independent));

  for (int i = 0; i < ell; ++i) {
    plan.blocks.emplace_back(plan.independent.begin() + i * block,
                             plan.independent.begin() + (i + 1) * block);
  }
  return plan;
}

std::vector<SpanningTree> BuildDiverseFamily(const Graph& g,
                                             const LeafSwapPlan& plan,
                                             const VertexSet& nt) {
  const SpanningTree& t = plan.tree;
  if (!(t.host() == g)) throw PreconditionError("plan belongs to another graph");
  for (Vertex x : nt) {
    if (!g.has_vertex(x) || t.is_leaf(x)) {
      throw PreconditionError("non-terminal " + std::to_string(x) +
                              " is not internal in the tree");
    }
    int outside = 0;
    for (Vertex y : t.neighbors(x)) outside += !Contains(plan.leaves, y);
    if (outside < 2) {
      throw PreconditionError("non-terminal " + std::to_string(x) +
                              " has fewer than two tree neighbors outside L");
    }
  }
  for (const VertexSet& block : plan.blocks) {
    for (Vertex v : block) {
      if (!Contains(plan.independent, v) || !t.is_leaf(v) ||
          plan.parent.at(v) != t.neighbors(v)[0] ||
          !g.has_edge(v, plan.target.at(v)) ||
          plan.target.at(v) == plan.parent.at(v)) {
        throw PreconditionError("swap plan does not match the tree");
      }
    }
  }

  std::vector<SpanningTree> family;
  family.reserve(plan.blocks.size());
  for (const VertexSet& block : plan.blocks) {
    std::set<Edge> edges(t.edges().begin(), t.edges().end());
    for (Vertex v : block) {
      edges.erase(Edge::Of(v, plan.parent.at(v)));
      edges.insert(Edge::Of(v, plan.target.at(v)));
    }
    SpanningTree member =
        SpanningTree::Create(g, std::vector<Edge>(edges.begin(), edges.end()));
    for (Vertex x : nt) {
      if (member.is_leaf(x)) {
        throw InvariantError("non-terminal became a leaf after swaps");
      }
    }
    if (member.leaf_count() <
        t.leaf_count() - static_cast<int>(block.size())) {
      throw InvariantError("swaps lost more leaves than the block size");
    }
    family.push_back(std::move(member));
  }
  return family;
}

FamilyReport VerifyFamily(const Graph& g,
                          const std::vector<std::vector<Edge>>& family, int p,
                          int q, int k, const VertexSet& nt) {
  FamilyReport report;
  std::vector<std::optional<SpanningTree>> trees;
  for (const auto& edges : family) {
    TreeCheck check;
    std::vector<Edge> normalized;
    for (const Edge& e : edges) normalized.push_back(Edge::Of(e.u, e.v));
    std::sort(normalized.begin(), normalized.end());
    check.invalid = SpanningTree::Diagnose(g, normalized);
    if (check.invalid) {
      trees.emplace_back();
    } else {
      SpanningTree t = SpanningTree::Create(g, normalized);
      check.leaves = t.leaf_count();
      check.internal = t.internal_count();
      for (Vertex x : nt) {
        if (!g.has_vertex(x) || t.is_leaf(x)) check.nonterminal_leaves.push_back(x);
      }
      trees.emplace_back(std::move(t));
    }
    check.enough_leaves = !check.invalid && check.leaves >= p;
    check.enough_internal = !check.invalid && check.internal >= q;
    report.trees.push_back(std::move(check));
  }
  bool ok = true;
  for (const TreeCheck& c : report.trees) ok = ok && c.ok();
  for (size_t i = 0; i < trees.size(); ++i) {
    for (size_t j = i + 1; j < trees.size(); ++j) {
      if (!trees[i] || !trees[j]) {
        ok = false;
        continue;
      }
      PairCheck pair;
      pair.i = static_cast<int>(i);
      pair.j = static_cast<int>(j);
      pair.distance = Hamming(*trees[i], *trees[j]);
      pair.ok = pair.distance >= k;
      ok = ok && pair.ok;
      report.pairs.push_back(pair);
    }
  }
  report.ok = ok;
  return report;
}

FamilyReport VerifyFamily(const Graph& g,
                          const std::vector<SpanningTree>& family, int p,
                          int q, int k, const VertexSet& nt) {
  std::vector<std::vector<Edge>> raw;
  raw.reserve(family.size());
  for (const SpanningTree& t : family) raw.push_back(t.edges());
  return VerifyFamily(g, raw, p, q, k, nt);
}

}  // namespace divtree
