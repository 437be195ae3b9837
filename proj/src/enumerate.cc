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

#include "divtree/enumerate.h"

#include <numeric>
#include <utility>

#include "divtree/error.h"

namespace divtree {
namespace {

// Union by size without path compression, so unions can be undone.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(n + 1), size_(n + 1, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns the absorbed root, or -1 if a and b were already joined.
  int Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return -1;
    if (size_[a] > size_[b]) std::swap(a, b);
    parent_[a] = b;
    size_[b] += size_[a];
    return a;
  }
  void Undo(int absorbed) {
    const int root = parent_[absorbed];
    size_[root] -= size_[absorbed];
    parent_[absorbed] = absorbed;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

class Enumerator {
 public:
  Enumerator(const Graph& g, std::int64_t limit, const TreeVisitor& visit)
      : g_(g), limit_(limit), visit_(visit), forest_(g.num_vertices()) {}

  EnumerationResult Run() {
    const int n = g_.num_vertices();
    if (n == 0 || !g_.IsConnected()) return {EnumerationStatus::kComplete, 0};
    chosen_.reserve(n);
    Recurse(0);
    return {status_, visited_};
  }

 private:
  // True when the chosen edges plus edges[from..] still connect the graph.
  bool RemainderConnected(int from) const {
    const int n = g_.num_vertices();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    auto join = [&](const Edge& e) {
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    };
    const auto& edges = g_.edges();
    for (int idx : chosen_) join(edges[idx]);
    for (int i = from; i < static_cast<int>(edges.size()) && components > 1; ++i) {
      join(edges[i]);
    }
    return components == 1;
  }

  // Returns false once enumeration must end.
  bool Recurse(int i) {
    const int n = g_.num_vertices();
    if (static_cast<int>(chosen_.size()) == n - 1) {
      if (visited_ == limit_) {
        status_ = EnumerationStatus::kOverflow;
        return false;
      }
      ++visited_;
      if (!visit_(chosen_)) {
        status_ = EnumerationStatus::kStopped;
        return false;
      }
      return true;
    }
    const auto& edges = g_.edges();
    if (i == static_cast<int>(edges.size())) {
      throw InvariantError("spanning tree enumeration reached a dead branch");
    }
    const int absorbed = forest_.Union(edges[i].u, edges[i].v);
    if (absorbed >= 0) {
      chosen_.push_back(i);
      const bool go_on = Recurse(i + 1);
      chosen_.pop_back();
      forest_.Undo(absorbed);
      if (!go_on) return false;
    }
    if (RemainderConnected(i + 1)) return Recurse(i + 1);
    return true;
  }

  const Graph& g_;
  std::int64_t limit_;
  const TreeVisitor& visit_;
  RollbackSets forest_;
  std::vector<int> chosen_;
  std::int64_t visited_ = 0;
  EnumerationStatus status_ = EnumerationStatus::kComplete;
};

}  // namespace

EnumerationResult ForEachSpanningTree(const Graph& g, std::int64_t limit,
                                      const TreeVisitor& visit) {
  return Enumerator(g, limit, visit).Run();
}

TreeList EnumerateSpanningTrees(const Graph& g, std::int64_t limit) {
  TreeList out;
  const auto& edges = g.edges();
  out.status = ForEachSpanningTree(g, limit, [&](std::span<const int> idx) {
                 std::vector<Edge> tree;
                 tree.reserve(idx.size());
                 for (int i : idx) tree.push_back(edges[i]);
                 out.trees.push_back(SpanningTree::Create(g, std::move(tree)));
                 return true;
               }).status;
  return out;
}

}  // namespace divtree
