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

#include "divtree/oracle.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "divtree/error.h"

namespace divtree {
namespace {

using Bits = std::vector<std::uint64_t>;

struct Candidate {
  Bits bits;
  int leaves = 0;
};

int Distance(const Bits& a, const Bits& b) {
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
  return d;
}

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Candidate>& trees, int k, int ell,
               std::int64_t node_limit)
      : trees_(trees), k_(k), ell_(ell), node_limit_(node_limit) {}

  // True when an ell-clique exists; `chosen` then holds it. Sets
  // `exhausted` when the node limit stopped the search.
  bool Run() {
    std::vector<int> all(trees_.size());
    std::iota(all.begin(), all.end(), 0);
    if (Greedy(all)) return true;
    if (trees_.size() <= 5000 && ell_ > 2) {
      // Degree pruning: a member of an ell-clique has >= ell - 1 neighbors.
      std::vector<int> kept;
      for (int i : all) {
        int degree = 0;
        for (int j : all) {
          if (i != j && Adjacent(i, j) && ++degree >= ell_ - 1) break;
        }
        if (degree >= ell_ - 1) kept.push_back(i);
      }
      all.swap(kept);
    }
    chosen_.clear();
    return Expand(all);
  }

  const std::vector<int>& chosen() const { return chosen_; }
  std::int64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  bool Adjacent(int i, int j) const {
    return Distance(trees_[i].bits, trees_[j].bits) >= k_;
  }

  bool Greedy(const std::vector<int>& order) {
    chosen_.clear();
    for (int i : order) {
      bool ok = std::all_of(chosen_.begin(), chosen_.end(),
                            [&](int j) { return Adjacent(i, j); });
      if (ok) chosen_.push_back(i);
      if (static_cast<int>(chosen_.size()) >= ell_) return true;
    }
    return false;
  }

  bool Expand(const std::vector<int>& candidates) {
    if (static_cast<int>(chosen_.size()) >= ell_) return true;
    if (++nodes_ > node_limit_) {
      exhausted_ = true;
      return false;
    }
    for (size_t a = 0; a < candidates.size(); ++a) {
      if (chosen_.size() + (candidates.size() - a) <
          static_cast<size_t>(ell_)) {
        return false;
      }
      const int v = candidates[a];
      std::vector<int> next;
      for (size_t b = a + 1; b < candidates.size(); ++b) {
        if (Adjacent(v, candidates[b])) next.push_back(candidates[b]);
      }
      chosen_.push_back(v);
      if (Expand(next)) return true;
      chosen_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const std::vector<Candidate>& trees_;
  int k_;
  int ell_;
  std::int64_t node_limit_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> chosen_;
};

OracleVerdict Solve(const Graph& g, int p, int q, const VertexSet& nt, int k,
                    int ell, const OracleLimits& limits) {
  OracleVerdict verdict;
  const int n = g.num_vertices();
  if (n == 0 || !g.IsConnected()) {
    verdict.answer = Answer::kNo;
    return verdict;
  }
  const auto& edges = g.edges();
  const size_t words = (edges.size() + 63) / 64;
  std::vector<Candidate> feasible;
  std::vector<int> degree(n + 1);
  EnumerationResult run =
      ForEachSpanningTree(g, limits.max_trees, [&](std::span<const int> idx) {
        std::fill(degree.begin(), degree.end(), 0);
        for (int i : idx) {
          ++degree[edges[i].u];
          ++degree[edges[i].v];
        }
        int leaves = 0;
        for (Vertex v = 1; v <= n; ++v) leaves += degree[v] == 1;
        if (leaves < p || n - leaves < q) return true;
        for (Vertex v : nt) {
          if (degree[v] == 1) return true;
        }
        Candidate c{Bits(words, 0), leaves};
        for (int i : idx) c.bits[i / 64] |= std::uint64_t{1} << (i % 64);
        feasible.push_back(std::move(c));
        return true;
      });
  verdict.trees_enumerated = run.visited;
  verdict.feasible_trees = static_cast<std::int64_t>(feasible.size());
  const bool complete = run.status == EnumerationStatus::kComplete;

  std::stable_sort(feasible.begin(), feasible.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.leaves > b.leaves;
                   });
  CliqueSearch search(feasible, k, ell, limits.max_clique_nodes);
  const bool found =
      static_cast<int>(feasible.size()) >= ell && search.Run();
  verdict.clique_nodes = search.nodes();
  if (found) {
    verdict.answer = Answer::kYes;
    for (int i : search.chosen()) {
      std::vector<Edge> tree;
      for (size_t e = 0; e < edges.size(); ++e) {
        if (feasible[i].bits[e / 64] >> (e % 64) & 1) tree.push_back(edges[e]);
      }
      verdict.witness.push_back(SpanningTree::Create(g, std::move(tree)));
    }
  } else if (complete && !search.exhausted()) {
    verdict.answer = Answer::kNo;
  }
  return verdict;
}

Answer Combine(Answer a, Answer b) {
  if (a == Answer::kInconclusive || b == Answer::kInconclusive) {
    return Answer::kInconclusive;
  }
  return a == b ? Answer::kYes : Answer::kNo;
}

}  // namespace

std::string_view AnswerName(Answer a) {
  switch (a) {
    case Answer::kYes:
      return "yes";
    case Answer::kNo:
      return "no";
    case Answer::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

OracleVerdict SolveLI(const Instance& inst, const OracleLimits& limits) {
  inst.Validate();
  return Solve(inst.graph, inst.p, inst.q, {}, inst.k, inst.ell, limits);
}

OracleVerdict SolveLNT(const InstanceNT& inst, const OracleLimits& limits) {
  inst.Validate();
  return Solve(inst.graph, inst.p, 0, inst.nonterminals, inst.k, inst.ell,
               limits);
}

Answer Equivalent(const Instance& a, const Instance& b,
                  const OracleLimits& limits) {
  return Combine(SolveLI(a, limits).answer, SolveLI(b, limits).answer);
}

Answer Equivalent(const InstanceNT& a, const InstanceNT& b,
                  const OracleLimits& limits) {
  return Combine(SolveLNT(a, limits).answer, SolveLNT(b, limits).answer);
}

Answer CountingShortcut(const Instance& inst, const OracleLimits& limits) {
  inst.Validate();
  if (inst.p != 0 || inst.q != 0 || inst.k > 2) {
    throw PreconditionError("counting shortcut needs p = q = 0 and k <= 2");
  }
  if (!inst.graph.IsConnected()) return Answer::kNo;
  std::int64_t count = 0;
  EnumerationResult run = ForEachSpanningTree(
      inst.graph, limits.max_trees,
      [&](std::span<const int>) { return ++count < inst.ell; });
  if (count >= inst.ell) return Answer::kYes;
  return run.status == EnumerationStatus::kComplete ? Answer::kNo
                                                    : Answer::kInconclusive;
}

}  // namespace divtree
