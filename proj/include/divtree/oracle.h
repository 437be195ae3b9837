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

#ifndef DIVTREE_ORACLE_H_
#define DIVTREE_ORACLE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "divtree/enumerate.h"
#include "divtree/instance.h"
#include "divtree/spanning_tree.h"

namespace divtree {

enum class Answer { kYes, kNo, kInconclusive };

std::string_view AnswerName(Answer a);

struct OracleLimits {
  std::int64_t max_trees = kDefaultTreeLimit;
  std::int64_t max_clique_nodes = 5'000'000;
};

struct OracleVerdict {
  Answer answer = Answer::kInconclusive;
  std::vector<SpanningTree> witness;  // ell trees when answer is kYes
  std::int64_t trees_enumerated = 0;
  std::int64_t feasible_trees = 0;
  std::int64_t clique_nodes = 0;
};

// Enumerates every spanning tree, keeps those meeting the per-tree
// constraints, and searches the diversity graph (trees adjacent iff their
// distance is >= k) for an ell-clique. Inconclusive when either limit runs out
// before the answer is settled.
OracleVerdict SolveLI(const Instance& inst, const OracleLimits& limits = {});
OracleVerdict SolveLNT(const InstanceNT& inst, const OracleLimits& limits = {});

// kYes when both instances have the same answer.
Answer Equivalent(const Instance& a, const Instance& b,
                  const OracleLimits& limits = {});
Answer Equivalent(const InstanceNT& a, const InstanceNT& b,
                  const OracleLimits& limits = {});

// With p = q = 0 and k <= 2 any ell distinct trees qualify, so the answer is
// whether the graph has at least ell spanning trees. Throws
// PreconditionError outside that regime.
Answer CountingShortcut(const Instance& inst, const OracleLimits& limits = {});

}  // namespace divtree

#endif  // DIVTREE_ORACLE_H_
