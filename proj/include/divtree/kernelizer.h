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

#ifndef DIVTREE_KERNELIZER_H_
#define DIVTREE_KERNELIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divtree/blackbox.h"
#include "divtree/graph.h"
#include "divtree/instance.h"
#include "divtree/spanning_tree.h"

namespace divtree {

// R1-R6 belong to the leaf & internal pipeline, R7-R11 to the non-terminal
// one. R5, R6, R10 and R11 are the size threshold rules.
enum class Rule {
  kDisconnected,       // no spanning tree at all
  kTreeInput,          // the unique spanning tree decides the instance
  kTooManyLeaves,      // p >= n, while a tree on n >= 3 vertices has < n leaves
  kTooManyInternal,    // q > n - 2
  kPendantNonterminal, // a non-terminal of degree one is a leaf of every tree
  kTooManyNonterminals,// |V_NT| > n - 2
  kR1,   // contract a long degree-2-path, q := max(0, q - 1)
  kR2,   // delete one of two pendants sharing a neighbor, p := max(0, p - 1)
  kR3,   // h >= p gives p := 0, h >= q gives q := 0
  kR4,   // p = q = 0: delete a pendant
  kR5,   // p = q = 0: size threshold, large means yes
  kR6,   // max(p, q) > 0: size threshold, large means delegate to MIST
  kR7,   // contract a long degree-2-path avoiding V_NT
  kR8,   // h >= p gives p := 0
  kR9,   // p = 0: delete a pendant, drop its neighbor from V_NT
  kR10,  // p = 0: size threshold, large means delegate to NTST
  kR11,  // p > 0: size threshold, large means delegate to NTST
};

std::string_view RuleName(Rule rule);
std::optional<Rule> ParseRule(std::string_view name);
// Rules that change the instance; the others only decide or stop.
bool IsMutating(Rule rule);

struct RuleApplication {
  Rule rule = Rule::kR1;
  // Vertex ids before the step. R1/R7: the contracted edge. R2/R4/R9: the
  // deleted pendant, then its neighbor.
  std::vector<Vertex> touched;
  int dp = 0;  // parameter changes, new minus old
  int dq = 0;
  VertexSet nt_removed;  // ids before the step
  std::optional<Renaming> renaming;
  std::string detail;
  friend bool operator==(const RuleApplication&,
                         const RuleApplication&) = default;
};

enum class Outcome {
  kReduced,
  kTrivialYes,
  kTrivialNo,
  kDelegated,
  kDelegationUnavailable,
};

std::string_view OutcomeName(Outcome outcome);

template <typename I>
struct KernelResult {
  Outcome outcome = Outcome::kReduced;
  // Reduced: the kernel. Delegated: the plug-in's answer rewrapped.
  // Unavailable: the instance that was to be delegated. TrivialYes and
  // TrivialNo: the canonical instance with that answer. Always equivalent to
  // the input.
  I instance;
  // The instance after the last mutating rule; Replay() reproduces it.
  I reduced;
  std::vector<RuleApplication> transcript;
  std::string reason;
  // Set on TrivialYes and, on request, on Delegated yes answers. The trees
  // span reduced.graph (or the input graph for tree inputs) and satisfy the
  // parameters of `reduced`.
  std::vector<SpanningTree> witness;
  // False when a plug-in answered with an instance above its size bound.
  bool bound_ok = true;
};

using LiKernelResult = KernelResult<Instance>;
using LntKernelResult = KernelResult<InstanceNT>;

struct KernelOptions {
  bool construct_witness = false;
  BlackBox blackbox = BlackBox::Exact();
  // Trees examined when looking for a seed tree for a delegated witness.
  std::int64_t witness_budget = kDefaultTreeLimit;
};

LiKernelResult KernelizeLI(const Instance& inst,
                           const KernelOptions& options = {});
LntKernelResult KernelizeLNT(const InstanceNT& inst,
                             const KernelOptions& options = {});

Instance CanonicalInstance(bool yes);
InstanceNT CanonicalInstanceNT(bool yes);

template <typename I>
struct Step {
  I instance;
  RuleApplication application;
};

// One application of a mutating rule at its lowest location. Throws
// GuardError when the rule does not apply. Every rule requires a connected
// graph that is not a tree, as inside the pipelines.
Step<Instance> ApplyRule(const Instance& inst, Rule rule);
Step<InstanceNT> ApplyRule(const InstanceNT& inst, Rule rule);
bool RuleApplies(const Instance& inst, Rule rule);
bool RuleApplies(const InstanceNT& inst, Rule rule);

// Re-executes the mutating entries of `transcript` at their recorded
// locations. Throws InvariantError when an entry does not reproduce.
Instance Replay(const Instance& input,
                const std::vector<RuleApplication>& transcript);
InstanceNT Replay(const InstanceNT& input,
                  const std::vector<RuleApplication>& transcript);

// Threshold of R5: 4 ceil(k/4) ell (ell + 6).
std::int64_t SimpleFinalBound(int k, int ell);
// Threshold of R6: (2 (max(p, q) + 2 ceil(k/4) ell) + q) (ell + 6).
std::int64_t AdvancedFinalBound(int p, int q, int k, int ell);
// Threshold of R10: (4 ceil(k/4) ell + 5 |V_NT|) (ell + 6).
std::int64_t SimpleFinalBoundNT(int nt, int k, int ell);
// Threshold of R11: (4 ceil(k/4) ell + 2p + 5 |V_NT|) (ell + 6).
std::int64_t AdvancedFinalBoundNT(int p, int nt, int k, int ell);

// Yes-certificates for the large branches of the threshold rules. Each grows
// a seed tree with GrowLeaves and swaps leaf blocks with BuildDiverseFamily.
// They need the graph reduced by the pipeline (no degree-2-path of length
// >= ell + 3 avoiding V_NT) and at least as many vertices as the threshold;
// InvariantError otherwise.
std::vector<SpanningTree> BuildCase1Witness(const Graph& g, int k, int ell);
// `seed` must have at least q internal vertices.
std::vector<SpanningTree> BuildLeafInternalWitness(const Instance& inst,
                                                   const SpanningTree& seed);
// `seed` must have every non-terminal internal.
std::vector<SpanningTree> BuildNonterminalWitness(const InstanceNT& inst,
                                                  const SpanningTree& seed);

}  // namespace divtree

#endif  // DIVTREE_KERNELIZER_H_
