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

#ifndef DIVTREE_INSTANCE_H_
#define DIVTREE_INSTANCE_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divtree/graph.h"

namespace divtree {

// Leaf & internal constrained instance: ell pairwise k-diverse spanning trees,
// each with at least p leaves and q internal vertices.
struct Instance {
  Graph graph;
  int p = 0;
  int q = 0;
  int k = 1;
  int ell = 1;

  // Throws PreconditionError unless p, q in [0, n] and k, ell >= 1.
  void Validate() const;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Leaf & non-terminal constrained instance: the vertices of `nonterminals`
// must be internal in every tree.
struct InstanceNT {
  Graph graph;
  VertexSet nonterminals;
  int p = 0;
  int k = 1;
  int ell = 1;

  void Validate() const;
  friend bool operator==(const InstanceNT&, const InstanceNT&) = default;
};

using AnyInstance = std::variant<Instance, InstanceNT>;

// Edge-list text: `#` lines are comments, the first other line is `n m`, then
// m lines `u v`. Throws FormatError with a line number on bad input.
Graph ReadGraph(std::string_view text);
// Normalized form: header, then edges sorted with u < v.
std::string WriteGraph(const Graph& g);

// "1,4,5" or whitespace separated ids. Range is checked against n when n > 0.
VertexSet ParseVertexList(std::string_view text, int n = 0);
std::string FormatVertexList(const VertexSet& set);

// Instances are edge-list files that carry one parameter comment, e.g.
//   # divtree li p=0 q=0 k=4 ell=2
//   # divtree lnt p=0 k=2 ell=2 nt=1,4,5
// ReadInstance requires that line; WriteInstance emits it before the graph.
AnyInstance ReadInstance(std::string_view text);
std::string WriteInstance(const Instance& inst);
std::string WriteInstance(const InstanceNT& inst);

}  // namespace divtree

#endif  // DIVTREE_INSTANCE_H_
