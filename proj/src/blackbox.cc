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

#include <algorithm>
#include <vector>

namespace divtree {
namespace {

bool Satisfies(const SpanningTree& t, int min_internal, const VertexSet& nt) {
  if (t.internal_count() < min_internal) return false;
  return std::none_of(nt.begin(), nt.end(),
                      [&](Vertex v) { return t.is_leaf(v); });
}

}  // namespace

MistInstance CanonicalMist(bool yes) {
  // K_2 has no internal vertex, so q = 2 cannot be met.
  return {Graph::FromEdges(2, {{1, 2}}), yes ? 0 : 2};
}

NtstInstance CanonicalNtst(bool yes) {
  return {Graph::FromEdges(2, {{1, 2}}), yes ? VertexSet{} : VertexSet{1, 2}};
}

bool WithinMistBound(const MistInstance& inst) {
  return inst.graph.num_vertices() <= std::max(2, 2 * inst.q);
}

bool WithinNtstBound(const NtstInstance& inst) {
  return inst.graph.num_vertices() <=
         std::max<int>(2, 3 * static_cast<int>(inst.nonterminals.size()));
}

TreeSearch FindConstrainedTree(const Graph& g, int min_internal,
                               const VertexSet& nt, std::int64_t budget) {
  TreeSearch result;
  const int n = g.num_vertices();
  if (n == 0 || !g.IsConnected()) return result;
  if (n >= 2) {
    // A tree on n >= 2 vertices has at least two leaves, and a pendant vertex
    // is a leaf of every spanning tree.
    if (min_internal > n - 2 || static_cast<int>(nt.size()) > n - 2) {
      return result;
    }
    for (Vertex v : nt) {
      if (g.degree(v) == 1) return result;
    }
  }

  const int roots = std::min(n, 64);
  for (Vertex root = 1; root <= roots; ++root) {
    SpanningTree t = DepthFirstTree(g, root);
    ++result.trees_examined;
    if (Satisfies(t, min_internal, nt)) {
      result.status = SearchStatus::kFound;
      result.tree = std::move(t);
      return result;
    }
  }

  const auto& edges = g.edges();
  std::vector<int> degree(n + 1);
  std::vector<int> found;
  EnumerationResult run =
      ForEachSpanningTree(g, budget, [&](std::span<const int> idx) {
        std::fill(degree.begin(), degree.end(), 0);
        for (int i : idx) {
          ++degree[edges[i].u];
          ++degree[edges[i].v];
        }
        int internal = 0;
        for (Vertex v = 1; v <= n; ++v) internal += degree[v] != 1;
        if (internal < min_internal) return true;
        for (Vertex v : nt) {
          if (degree[v] == 1) return true;
        }
        found.assign(idx.begin(), idx.end());
        return false;
      });
  result.trees_examined += run.visited;
  if (!found.empty() || (run.status == EnumerationStatus::kStopped)) {
    std::vector<Edge> tree;
    for (int i : found) tree.push_back(edges[i]);
    result.status = SearchStatus::kFound;
    result.tree = SpanningTree::Create(g, std::move(tree));
  } else if (run.status == EnumerationStatus::kOverflow) {
    result.status = SearchStatus::kBudgetExhausted;
  }
  return result;
}

std::optional<MistInstance> ExactMistKernel::Kernelize(
    const MistInstance& inst) const {
  TreeSearch search = FindConstrainedTree(inst.graph, inst.q, {}, budget_);
  if (search.status == SearchStatus::kBudgetExhausted) return std::nullopt;
  return CanonicalMist(search.status == SearchStatus::kFound);
}

std::optional<NtstInstance> ExactNtstKernel::Kernelize(
    const NtstInstance& inst) const {
  TreeSearch search =
      FindConstrainedTree(inst.graph, 0, inst.nonterminals, budget_);
  if (search.status == SearchStatus::kBudgetExhausted) return std::nullopt;
  return CanonicalNtst(search.status == SearchStatus::kFound);
}

BlackBox BlackBox::Exact(std::int64_t budget) {
  return {std::make_shared<ExactMistKernel>(budget),
          std::make_shared<ExactNtstKernel>(budget)};
}

BlackBox BlackBox::None() { return {nullptr, nullptr}; }

}  // namespace divtree
