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

#ifndef DIVTREE_BLACKBOX_H_
#define DIVTREE_BLACKBOX_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "divtree/enumerate.h"
#include "divtree/graph.h"
#include "divtree/spanning_tree.h"

namespace divtree {

// Max-Internal Spanning Tree: is there a spanning tree with >= q internal
// vertices?
struct MistInstance {
  Graph graph;
  int q = 0;
  friend bool operator==(const MistInstance&, const MistInstance&) = default;
};

// Non-Terminal Spanning Tree: is there a spanning tree in which every vertex
// of `nonterminals` is internal?
struct NtstInstance {
  Graph graph;
  VertexSet nonterminals;
  friend bool operator==(const NtstInstance&, const NtstInstance&) = default;
};

// Two-vertex instances standing for a decided answer.
MistInstance CanonicalMist(bool yes);
NtstInstance CanonicalNtst(bool yes);

// Size bounds of the published kernels (2q and 3|V_NT| vertices). Decided
// instances are constant-size, so the check is |V| <= max(2, bound).
bool WithinMistBound(const MistInstance& inst);
bool WithinNtstBound(const NtstInstance& inst);

// A kernelization for MIST. Returns an equivalent instance, or nullopt when
// the plug-in cannot handle the input.
class MistKernel {
 public:
  virtual ~MistKernel() = default;
  virtual std::optional<MistInstance> Kernelize(const MistInstance& inst) const = 0;
  virtual std::string name() const = 0;
};

class NtstKernel {
 public:
  virtual ~NtstKernel() = default;
  virtual std::optional<NtstInstance> Kernelize(const NtstInstance& inst) const = 0;
  virtual std::string name() const = 0;
};

enum class SearchStatus { kFound, kNone, kBudgetExhausted };

struct TreeSearch {
  SearchStatus status = SearchStatus::kNone;
  std::optional<SpanningTree> tree;
  std::int64_t trees_examined = 0;
};

// Exact search for a spanning tree with at least `min_internal` internal
// vertices in which every vertex of `nt` is internal. Tries depth-first trees
// from several roots, then enumerates up to `budget` trees.
TreeSearch FindConstrainedTree(const Graph& g, int min_internal,
                               const VertexSet& nt, std::int64_t budget);

// Default plug-ins: decide the instance exactly and answer with the canonical
// instance, or give up when the budget runs out.
class ExactMistKernel : public MistKernel {
 public:
  explicit ExactMistKernel(std::int64_t budget = kDefaultTreeLimit)
      : budget_(budget) {}
  std::optional<MistInstance> Kernelize(const MistInstance& inst) const override;
  std::string name() const override { return "exact"; }

 private:
  std::int64_t budget_;
};

class ExactNtstKernel : public NtstKernel {
 public:
  explicit ExactNtstKernel(std::int64_t budget = kDefaultTreeLimit)
      : budget_(budget) {}
  std::optional<NtstInstance> Kernelize(const NtstInstance& inst) const override;
  std::string name() const override { return "exact"; }

 private:
  std::int64_t budget_;
};

// The pair of plug-ins a kernelization run delegates to. A null member means
// delegation is unavailable.
struct BlackBox {
  std::shared_ptr<const MistKernel> mist;
  std::shared_ptr<const NtstKernel> ntst;

  static BlackBox Exact(std::int64_t budget = kDefaultTreeLimit);
  static BlackBox None();
};

}  // namespace divtree

#endif  // DIVTREE_BLACKBOX_H_
