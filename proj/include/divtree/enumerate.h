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

#ifndef DIVTREE_ENUMERATE_H_
#define DIVTREE_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "divtree/graph.h"
#include "divtree/spanning_tree.h"

namespace divtree {

inline constexpr std::int64_t kDefaultTreeLimit = 200000;

enum class EnumerationStatus {
  kComplete,  // every spanning tree was visited
  kOverflow,  // more than `limit` trees exist
  kStopped,   // the visitor asked to stop
};

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::kComplete;
  std::int64_t visited = 0;
};

// Receives the tree as ascending indices into Graph::edges(). Return false to
// stop the enumeration.
using TreeVisitor = std::function<bool(std::span<const int> edge_indices)>;

// Visits every spanning tree exactly once in a fixed order by branching on
// each edge (include / exclude), never excluding a bridge of what remains.
// At most `limit` trees are visited; finding one more reports kOverflow.
EnumerationResult ForEachSpanningTree(const Graph& g, std::int64_t limit,
                                      const TreeVisitor& visit);

struct TreeList {
  std::vector<SpanningTree> trees;
  EnumerationStatus status = EnumerationStatus::kComplete;
};

TreeList EnumerateSpanningTrees(const Graph& g,
                                std::int64_t limit = kDefaultTreeLimit);

}  // namespace divtree

#endif  // DIVTREE_ENUMERATE_H_
