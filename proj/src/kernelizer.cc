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

#include "divtree/kernelizer.h"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "divtree/diversify.h"
#include "divtree/error.h"

namespace divtree {
namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 17> kRuleNames = {{
    {Rule::kDisconnected, "pre-disconnected"},
    {Rule::kTreeInput, "pre-tree"},
    {Rule::kTooManyLeaves, "pre-leaves"},
    {Rule::kTooManyInternal, "pre-internal"},
    {Rule::kPendantNonterminal, "pre-nt-pendant"},
    {Rule::kTooManyNonterminals, "pre-nt-count"},
    {Rule::kR1, "R1"},
    {Rule::kR2, "R2"},
    {Rule::kR3, "R3"},
    {Rule::kR4, "R4"},
    {Rule::kR5, "R5"},
    {Rule::kR6, "R6"},
    {Rule::kR7, "R7"},
    {Rule::kR8, "R8"},
    {Rule::kR9, "R9"},
    {Rule::kR10, "R10"},
    {Rule::kR11, "R11"},
}};

bool InRuleContext(const Graph& g) {
  return g.num_vertices() >= 3 && g.IsConnected() && !g.IsTree();
}

std::optional<Degree2Path> FirstLongPath(const Graph& g,
                                         const VertexSet& forbidden,
                                         int min_length) {
  for (Degree2Path& path : MaximalDegree2Paths(g, forbidden)) {
    if (path.length() >= min_length) return std::move(path);
  }
  return std::nullopt;
}

// The length-3 piece (x, a, b, y) of a maximal degree-2-path of length >=
// min_length in which a and b are consecutive internal vertices.
std::optional<Degree2Path> EdgeWindow(const Graph& g,
                                      const VertexSet& forbidden, Vertex a,
                                      Vertex b, int min_length) {
  for (const Degree2Path& path : MaximalDegree2Paths(g, forbidden)) {
    const int r = path.length();
    if (r < min_length) continue;
    const auto& x = path.vertices();
    for (int i = 1; i < r; ++i) {
      if (x[i] != a) continue;
      if (i + 1 < r && x[i + 1] == b) {
        return Degree2Path({x[i - 1], a, b, x[i + 2]});
      }
      if (i - 1 > 0 && x[i - 1] == b) {
        return Degree2Path({x[i + 1], a, b, x[i - 2]});
      }
    }
  }
  return std::nullopt;
}

// Pendant vertices grouped by their neighbor.
std::map<Vertex, VertexSet> PendantsByNeighbor(const Graph& g) {
  std::map<Vertex, VertexSet> groups;
  for (Vertex v : PendantVertices(g)) groups[g.neighbors(v)[0]].push_back(v);
  return groups;
}

bool HasTwinPendants(const Graph& g) {
  for (const auto& [u, group] : PendantsByNeighbor(g)) {
    if (group.size() >= 2) return true;
  }
  return false;
}

std::optional<std::pair<Vertex, Vertex>> PendantAt(
    const Graph& g, const std::vector<Vertex>* at) {
  if (at != nullptr) {
    if (at->size() != 2) return std::nullopt;
    const Vertex v = (*at)[0];
    if (!g.has_vertex(v) || g.degree(v) != 1) return std::nullopt;
    if (g.neighbors(v)[0] != (*at)[1]) return std::nullopt;
    return std::make_pair(v, (*at)[1]);
  }
  VertexSet pendants = PendantVertices(g);
  if (pendants.empty()) return std::nullopt;
  return std::make_pair(pendants.front(), g.neighbors(pendants.front())[0]);
}

std::optional<GraphEdit> Contract(const Graph& g, const VertexSet& forbidden,
                                  int min_length,
                                  const std::vector<Vertex>* at,
                                  RuleApplication& app) {
  Vertex a = 0;
  Vertex b = 0;
  if (at != nullptr) {
    if (at->size() != 2) return std::nullopt;
    a = (*at)[0];
    b = (*at)[1];
  } else {
    std::optional<Degree2Path> path = FirstLongPath(g, forbidden, min_length);
    if (!path) return std::nullopt;
    a = path->vertices()[1];
    b = path->vertices()[2];
  }
  std::optional<Degree2Path> window = EdgeWindow(g, forbidden, a, b, min_length);
  if (!window) return std::nullopt;
  app.touched = {a, b};
  return ContractPathEdge(g, *window);
}

std::optional<Step<Instance>> StepLI(const Instance& inst, Rule rule,
                                     const std::vector<Vertex>* at) {
  const Graph& g = inst.graph;
  if (!InRuleContext(g)) return std::nullopt;
  Step<Instance> step{inst, {}};
  RuleApplication& app = step.application;
  app.rule = rule;
  Instance& out = step.instance;
  switch (rule) {
    case Rule::kR1: {
      std::optional<GraphEdit> edit = Contract(g, {}, inst.ell + 3, at, app);
      if (!edit) return std::nullopt;
      out.graph = edit->graph;
      out.q = std::max(0, inst.q - 1);
      app.renaming = edit->renaming;
      break;
    }
    case Rule::kR2: {
      Vertex x = 0;
      Vertex u = 0;
      auto groups = PendantsByNeighbor(g);
      if (at != nullptr) {
        auto located = PendantAt(g, at);
        if (!located) return std::nullopt;
        std::tie(x, u) = *located;
        if (groups[u].size() < 2) return std::nullopt;
      } else {
        for (const auto& [center, group] : groups) {
          if (group.size() >= 2) {
            x = group.back();
            u = center;
            break;
          }
        }
        if (x == 0) return std::nullopt;
      }
      GraphEdit edit = DeleteVertex(g, x);
      out.graph = edit.graph;
      out.p = std::max(0, inst.p - 1);
      app.touched = {x, u};
      app.renaming = edit.renaming;
      break;
    }
    case Rule::kR3: {
      // Safe for q only when the h pendants have h distinct neighbors.
      if (HasTwinPendants(g)) return std::nullopt;
      const int h = static_cast<int>(PendantVertices(g).size());
      if (h >= inst.p) out.p = 0;
      if (h >= inst.q) out.q = 0;
      if (out.p == inst.p && out.q == inst.q) return std::nullopt;
      app.detail = "h=" + std::to_string(h);
      break;
    }
    case Rule::kR4: {
      if (inst.p != 0 || inst.q != 0) return std::nullopt;
      auto located = PendantAt(g, at);
      if (!located) return std::nullopt;
      GraphEdit edit = DeleteVertex(g, located->first);
      out.graph = edit.graph;
      app.touched = {located->first, located->second};
      app.renaming = edit.renaming;
      break;
    }
    default:
      throw PreconditionError(std::string(RuleName(rule)) +
                              " is not a mutating leaf & internal rule");
  }
  app.dp = out.p - inst.p;
  app.dq = out.q - inst.q;
  if (!out.graph.IsConnected()) {
    throw InvariantError(std::string(RuleName(rule)) +
                         " disconnected the graph");
  }
  return step;
}

std::optional<Step<InstanceNT>> StepLNT(const InstanceNT& inst, Rule rule,
                                        const std::vector<Vertex>* at) {
  const Graph& g = inst.graph;
  if (!InRuleContext(g)) return std::nullopt;
  Step<InstanceNT> step{inst, {}};
  RuleApplication& app = step.application;
  app.rule = rule;
  InstanceNT& out = step.instance;
  switch (rule) {
    case Rule::kR7: {
      std::optional<GraphEdit> edit =
          Contract(g, inst.nonterminals, inst.ell + 3, at, app);
      if (!edit) return std::nullopt;
      out.graph = edit->graph;
      out.nonterminals = Rename(inst.nonterminals, edit->renaming);
      app.renaming = edit->renaming;
      break;
    }
    case Rule::kR8: {
      const int h = static_cast<int>(PendantVertices(g).size());
      if (inst.p == 0 || h < inst.p) return std::nullopt;
      out.p = 0;
      app.detail = "h=" + std::to_string(h);
      break;
    }
    case Rule::kR9: {
      if (inst.p != 0) return std::nullopt;
      auto located = PendantAt(g, at);
      if (!located) return std::nullopt;
      const auto [v, u] = *located;
      if (Contains(inst.nonterminals, v)) return std::nullopt;
      GraphEdit edit = DeleteVertex(g, v);
      VertexSet kept;
      for (Vertex w : inst.nonterminals) {
        if (w == u) {
          app.nt_removed.push_back(u);
        } else {
          kept.push_back(w);
        }
      }
      out.graph = edit.graph;
      out.nonterminals = Rename(kept, edit.renaming);
      app.touched = {v, u};
      app.renaming = edit.renaming;
      break;
    }
    default:
      throw PreconditionError(std::string(RuleName(rule)) +
                              " is not a mutating non-terminal rule");
  }
  app.dp = out.p - inst.p;
  if (!out.graph.IsConnected()) {
    throw InvariantError(std::string(RuleName(rule)) +
                         " disconnected the graph");
  }
  return step;
}

std::string SizeDetail(int n, std::int64_t bound) {
  return "n=" + std::to_string(n) + (n < bound ? " < " : " >= ") +
         std::to_string(bound);
}

RuleApplication Note(Rule rule, std::string detail) {
  RuleApplication app;
  app.rule = rule;
  app.detail = std::move(detail);
  return app;
}

// The first `count` elements of `from` for which `keep` holds.
template <typename Pred>
VertexSet TakeFirst(const VertexSet& from, size_t count, Pred keep) {
  VertexSet out;
  for (Vertex v : from) {
    if (out.size() == count) break;
    if (keep(v)) out.push_back(v);
  }
  return out;
}

// Swaps blocks among the leaves of `t` (graph degree >= 2, outside `avoid`).
std::vector<SpanningTree> SwapFamily(const Graph& g, const SpanningTree& t,
                                     const VertexSet& nt,
                                     const VertexSet& avoid, int k, int ell) {
  const size_t needed = 2 * static_cast<size_t>(SwapBlockSize(k)) * ell;
  VertexSet leaves = TakeFirst(t.leaves(), needed, [&](Vertex v) {
    return g.degree(v) >= 2 && !Contains(avoid, v);
  });
  if (leaves.size() < needed) {
    throw InvariantError("too few swappable leaves for a diverse family");
  }
  LeafSwapPlan plan = PlanSwaps(g, t, leaves, k, ell);
  return BuildDiverseFamily(g, plan, nt);
}

SpanningTree Grow(const Graph& g, const SpanningTree& seed,
                  const VertexSet& nt, int target, int ell) {
  LeafGrowth growth = GrowLeaves(g, seed, nt, target, ell + 3);
  if (!growth.target_reached) {
    throw InvariantError("leaf growth stalled on a graph above the threshold");
  }
  return growth.tree;
}

template <typename I>
KernelResult<I> Finish(Outcome outcome, I instance, const I& reduced,
                       std::vector<RuleApplication> transcript,
                       std::string reason) {
  KernelResult<I> result;
  result.outcome = outcome;
  result.instance = std::move(instance);
  result.reduced = reduced;
  result.transcript = std::move(transcript);
  result.reason = std::move(reason);
  return result;
}

class LiPipeline {
 public:
  LiPipeline(const Instance& input, const KernelOptions& options)
      : cur_(input), options_(options) {}

  LiKernelResult Run() {
    cur_.Validate();
    const Graph& g = cur_.graph;
    if (!g.IsConnected()) {
      log_.push_back(Note(Rule::kDisconnected, ""));
      return Done(Outcome::kTrivialNo, "graph is disconnected");
    }
    if (g.IsTree()) {
      SpanningTree t = SpanningTree::Create(g, g.edges());
      const bool yes = cur_.ell == 1 && t.leaf_count() >= cur_.p &&
                       t.internal_count() >= cur_.q;
      log_.push_back(Note(Rule::kTreeInput,
                          "leaves=" + std::to_string(t.leaf_count()) +
                              " internal=" + std::to_string(t.internal_count())));
      if (!yes) return Done(Outcome::kTrivialNo, "the unique tree fails");
      LiKernelResult result = Done(Outcome::kTrivialYes, "the unique tree");
      result.witness = {t};
      return result;
    }
    if (auto no = Sanity()) return *no;
    for (;;) {
      if (Fire(Rule::kR1) || Fire(Rule::kR2)) {
        if (auto no = Sanity()) return *no;
        continue;
      }
      break;
    }
    Fire(Rule::kR3);
    const int n = cur_.graph.num_vertices();
    if (cur_.p == 0 && cur_.q == 0) {
      while (Fire(Rule::kR1) || Fire(Rule::kR2) || Fire(Rule::kR4)) {
      }
      const int size = cur_.graph.num_vertices();
      const std::int64_t bound = SimpleFinalBound(cur_.k, cur_.ell);
      log_.push_back(Note(Rule::kR5, SizeDetail(size, bound)));
      if (size < bound) return Done(Outcome::kReduced, "below the R5 threshold");
      LiKernelResult result =
          Done(Outcome::kTrivialYes, "at or above the R5 threshold");
      if (options_.construct_witness) {
        result.witness = BuildCase1Witness(cur_.graph, cur_.k, cur_.ell);
      }
      return result;
    }
    const std::int64_t bound =
        AdvancedFinalBound(cur_.p, cur_.q, cur_.k, cur_.ell);
    log_.push_back(Note(Rule::kR6, SizeDetail(n, bound)));
    if (n < bound) return Done(Outcome::kReduced, "below the R6 threshold");
    return Delegate();
  }

 private:
  bool Fire(Rule rule) {
    std::optional<Step<Instance>> step = StepLI(cur_, rule, nullptr);
    if (!step) return false;
    cur_ = std::move(step->instance);
    log_.push_back(std::move(step->application));
    return true;
  }

  std::optional<LiKernelResult> Sanity() {
    const int n = cur_.graph.num_vertices();
    if (cur_.p >= n) {
      log_.push_back(Note(Rule::kTooManyLeaves, "p=" + std::to_string(cur_.p) +
                                                    " n=" + std::to_string(n)));
      return Done(Outcome::kTrivialNo, "more leaves required than possible");
    }
    if (cur_.q > n - 2) {
      log_.push_back(Note(Rule::kTooManyInternal,
                          "q=" + std::to_string(cur_.q) +
                              " n=" + std::to_string(n)));
      return Done(Outcome::kTrivialNo,
                  "more internal vertices required than possible");
    }
    return std::nullopt;
  }

  LiKernelResult Done(Outcome outcome, std::string reason) {
    Instance out = cur_;
    if (outcome == Outcome::kTrivialYes) out = CanonicalInstance(true);
    if (outcome == Outcome::kTrivialNo) out = CanonicalInstance(false);
    return Finish(outcome, std::move(out), cur_, log_, std::move(reason));
  }

  LiKernelResult Delegate() {
    const auto& plugin = options_.blackbox.mist;
    std::optional<MistInstance> answer;
    if (plugin) answer = plugin->Kernelize({cur_.graph, cur_.q});
    if (!answer) {
      return Done(Outcome::kDelegationUnavailable,
                  plugin ? "MIST plug-in gave up" : "no MIST plug-in");
    }
    LiKernelResult result =
        Finish(Outcome::kDelegated, Instance{answer->graph, 0, answer->q, 1, 1},
               cur_, log_, "delegated to MIST (" + plugin->name() + ")");
    result.bound_ok = WithinMistBound(*answer);
    if (options_.construct_witness) {
      TreeSearch seed = FindConstrainedTree(cur_.graph, cur_.q, {},
                                            options_.witness_budget);
      if (seed.tree) result.witness = BuildLeafInternalWitness(cur_, *seed.tree);
    }
    return result;
  }

  Instance cur_;
  const KernelOptions& options_;
  std::vector<RuleApplication> log_;
};

class LntPipeline {
 public:
  LntPipeline(const InstanceNT& input, const KernelOptions& options)
      : cur_(input), options_(options) {}

  LntKernelResult Run() {
    cur_.Validate();
    const Graph& g = cur_.graph;
    if (!g.IsConnected()) {
      log_.push_back(Note(Rule::kDisconnected, ""));
      return Done(Outcome::kTrivialNo, "graph is disconnected");
    }
    if (g.IsTree()) {
      SpanningTree t = SpanningTree::Create(g, g.edges());
      const bool nt_internal =
          std::none_of(cur_.nonterminals.begin(), cur_.nonterminals.end(),
                       [&](Vertex v) { return t.is_leaf(v); });
      const bool yes =
          cur_.ell == 1 && t.leaf_count() >= cur_.p && nt_internal;
      log_.push_back(Note(Rule::kTreeInput,
                          "leaves=" + std::to_string(t.leaf_count())));
      if (!yes) return Done(Outcome::kTrivialNo, "the unique tree fails");
      LntKernelResult result = Done(Outcome::kTrivialYes, "the unique tree");
      result.witness = {t};
      return result;
    }
    for (Vertex v : cur_.nonterminals) {
      if (g.degree(v) == 1) {
        RuleApplication app = Note(Rule::kPendantNonterminal, "");
        app.touched = {v};
        log_.push_back(std::move(app));
        return Done(Outcome::kTrivialNo, "a non-terminal is a pendant vertex");
      }
    }
    if (auto no = Sanity()) return *no;
    while (Fire(Rule::kR7)) {
      if (auto no = Sanity()) return *no;
    }
    Fire(Rule::kR8);
    const int nt = static_cast<int>(cur_.nonterminals.size());
    if (cur_.p == 0) {
      while (Fire(Rule::kR7) || Fire(Rule::kR9)) {
        if (auto no = Sanity()) return *no;
      }
      const int n = cur_.graph.num_vertices();
      const std::int64_t bound = SimpleFinalBoundNT(
          static_cast<int>(cur_.nonterminals.size()), cur_.k, cur_.ell);
      log_.push_back(Note(Rule::kR10, SizeDetail(n, bound)));
      if (n < bound) return Done(Outcome::kReduced, "below the R10 threshold");
      return Delegate();
    }
    const int n = cur_.graph.num_vertices();
    const std::int64_t bound =
        AdvancedFinalBoundNT(cur_.p, nt, cur_.k, cur_.ell);
    log_.push_back(Note(Rule::kR11, SizeDetail(n, bound)));
    if (n < bound) return Done(Outcome::kReduced, "below the R11 threshold");
    return Delegate();
  }

 private:
  bool Fire(Rule rule) {
    std::optional<Step<InstanceNT>> step = StepLNT(cur_, rule, nullptr);
    if (!step) return false;
    cur_ = std::move(step->instance);
    log_.push_back(std::move(step->application));
    return true;
  }

  std::optional<LntKernelResult> Sanity() {
    const int n = cur_.graph.num_vertices();
    const int nt = static_cast<int>(cur_.nonterminals.size());
    if (cur_.p >= n) {
      log_.push_back(Note(Rule::kTooManyLeaves, "p=" + std::to_string(cur_.p) +
                                                    " n=" + std::to_string(n)));
      return Done(Outcome::kTrivialNo, "more leaves required than possible");
    }
    if (nt > n - 2) {
      log_.push_back(Note(Rule::kTooManyNonterminals,
                          "nt=" + std::to_string(nt) +
                              " n=" + std::to_string(n)));
      return Done(Outcome::kTrivialNo,
                  "more non-terminals than internal vertices");
    }
    return std::nullopt;
  }

  LntKernelResult Done(Outcome outcome, std::string reason) {
    InstanceNT out = cur_;
    if (outcome == Outcome::kTrivialYes) out = CanonicalInstanceNT(true);
    if (outcome == Outcome::kTrivialNo) out = CanonicalInstanceNT(false);
    return Finish(outcome, std::move(out), cur_, log_, std::move(reason));
  }

  LntKernelResult Delegate() {
    const auto& plugin = options_.blackbox.ntst;
    std::optional<NtstInstance> answer;
    if (plugin) answer = plugin->Kernelize({cur_.graph, cur_.nonterminals});
    if (!answer) {
      return Done(Outcome::kDelegationUnavailable,
                  plugin ? "NTST plug-in gave up" : "no NTST plug-in");
    }
    LntKernelResult result = Finish(
        Outcome::kDelegated,
        InstanceNT{answer->graph, answer->nonterminals, 0, 1, 1}, cur_, log_,
        "delegated to NTST (" + plugin->name() + ")");
    result.bound_ok = WithinNtstBound(*answer);
    if (options_.construct_witness) {
      TreeSearch seed = FindConstrainedTree(cur_.graph, 0, cur_.nonterminals,
                                            options_.witness_budget);
      if (seed.tree) result.witness = BuildNonterminalWitness(cur_, *seed.tree);
    }
    return result;
  }

  InstanceNT cur_;
  const KernelOptions& options_;
  std::vector<RuleApplication> log_;
};

template <typename I, typename StepFn>
I ReplayWith(const I& input, const std::vector<RuleApplication>& transcript,
             StepFn step_fn) {
  I cur = input;
  for (const RuleApplication& recorded : transcript) {
    if (!IsMutating(recorded.rule)) continue;
    auto step = step_fn(cur, recorded.rule, &recorded.touched);
    if (!step) {
      throw InvariantError("replay: " + std::string(RuleName(recorded.rule)) +
                           " does not apply at the recorded location");
    }
    if (!(step->application == recorded)) {
      throw InvariantError("replay: " + std::string(RuleName(recorded.rule)) +
                           " produced a different application");
    }
    cur = std::move(step->instance);
  }
  return cur;
}

}  // namespace

std::string_view RuleName(Rule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "?";
}

std::optional<Rule> ParseRule(std::string_view name) {
  for (const auto& [r, n] : kRuleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

bool IsMutating(Rule rule) {
  switch (rule) {
    case Rule::kR1:
    case Rule::kR2:
    case Rule::kR3:
    case Rule::kR4:
    case Rule::kR7:
    case Rule::kR8:
    case Rule::kR9:
      return true;
    default:
      return false;
  }
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kReduced:
      return "reduced";
    case Outcome::kTrivialYes:
      return "trivial-yes";
    case Outcome::kTrivialNo:
      return "trivial-no";
    case Outcome::kDelegated:
      return "delegated";
    case Outcome::kDelegationUnavailable:
      return "delegation-unavailable";
  }
  return "?";
}

LiKernelResult KernelizeLI(const Instance& inst, const KernelOptions& options) {
  return LiPipeline(inst, options).Run();
}

LntKernelResult KernelizeLNT(const InstanceNT& inst,
                             const KernelOptions& options) {
  return LntPipeline(inst, options).Run();
}

Instance CanonicalInstance(bool yes) {
  return {Graph::FromEdges(2, {{1, 2}}), 0, yes ? 0 : 2, 1, 1};
}

InstanceNT CanonicalInstanceNT(bool yes) {
  return {Graph::FromEdges(2, {{1, 2}}), yes ? VertexSet{} : VertexSet{1, 2},
          0, 1, 1};
}

Step<Instance> ApplyRule(const Instance& inst, Rule rule) {
  inst.Validate();
  std::optional<Step<Instance>> step = StepLI(inst, rule, nullptr);
  if (!step) {
    throw GuardError(std::string(RuleName(rule)) + " does not apply");
  }
  return std::move(*step);
}

Step<InstanceNT> ApplyRule(const InstanceNT& inst, Rule rule) {
  inst.Validate();
  std::optional<Step<InstanceNT>> step = StepLNT(inst, rule, nullptr);
  if (!step) {
    throw GuardError(std::string(RuleName(rule)) + " does not apply");
  }
  return std::move(*step);
}

bool RuleApplies(const Instance& inst, Rule rule) {
  return StepLI(inst, rule, nullptr).has_value();
}

bool RuleApplies(const InstanceNT& inst, Rule rule) {
  return StepLNT(inst, rule, nullptr).has_value();
}

Instance Replay(const Instance& input,
                const std::vector<RuleApplication>& transcript) {
  return ReplayWith(input, transcript, StepLI);
}

InstanceNT Replay(const InstanceNT& input,
                  const std::vector<RuleApplication>& transcript) {
  return ReplayWith(input, transcript, StepLNT);
}

std::int64_t SimpleFinalBound(int k, int ell) {
  return 4LL * SwapBlockSize(k) * ell * (ell + 6);
}

std::int64_t AdvancedFinalBound(int p, int q, int k, int ell) {
  const std::int64_t c = SwapBlockSize(k);
  return (2 * (std::max<std::int64_t>(p, q) + 2 * c * ell) + q) * (ell + 6);
}

std::int64_t SimpleFinalBoundNT(int nt, int k, int ell) {
  return (4LL * SwapBlockSize(k) * ell + 5LL * nt) * (ell + 6);
}

std::int64_t AdvancedFinalBoundNT(int p, int nt, int k, int ell) {
  return (4LL * SwapBlockSize(k) * ell + 2LL * p + 5LL * nt) * (ell + 6);
}

std::vector<SpanningTree> BuildCase1Witness(const Graph& g, int k, int ell) {
  const int target = 2 * SwapBlockSize(k) * ell;
  SpanningTree t = Grow(g, ArbitrarySpanningTree(g), {}, target, ell);
  return SwapFamily(g, t, {}, {}, k, ell);
}

std::vector<SpanningTree> BuildLeafInternalWitness(const Instance& inst,
                                                   const SpanningTree& seed) {
  const Graph& g = inst.graph;
  const int c = SwapBlockSize(inst.k);
  const size_t q = inst.q;
  if (seed.internal_count() < inst.q) {
    throw PreconditionError("seed tree has fewer than q internal vertices");
  }
  VertexSet nt = TakeFirst(seed.internal_vertices(), q,
                           [](Vertex) { return true; });
  SpanningTree t =
      Grow(g, seed, nt, std::max(inst.p, inst.q) + 2 * c * inst.ell, inst.ell);
  const int h = static_cast<int>(PendantVertices(g).size());
  VertexSet avoid;
  if (t.leaf_count() >= 2 * c * inst.ell + h + 2 * inst.q) {
    // Keep two tree neighbors of every chosen vertex out of the swaps.
    nt = TakeFirst(t.internal_vertices(), q, [](Vertex) { return true; });
    for (Vertex v : nt) {
      auto nbrs = t.neighbors(v);
      avoid.insert(avoid.end(), nbrs.begin(), nbrs.begin() + 2);
    }
    avoid = MakeVertexSet(std::move(avoid));
  } else {
    // Few leaves: enough internal vertices have no leaf neighbor at all.
    nt = TakeFirst(t.internal_vertices(), q, [&](Vertex v) {
      auto nbrs = t.neighbors(v);
      return std::none_of(nbrs.begin(), nbrs.end(),
                          [&](Vertex w) { return t.is_leaf(w); });
    });
  }
  if (nt.size() < q) {
    throw InvariantError("too few internal vertices to keep internal");
  }
  return SwapFamily(g, t, nt, avoid, inst.k, inst.ell);
}

std::vector<SpanningTree> BuildNonterminalWitness(const InstanceNT& inst,
                                                  const SpanningTree& seed) {
  const Graph& g = inst.graph;
  const int c = SwapBlockSize(inst.k);
  const VertexSet& nt = inst.nonterminals;
  for (Vertex v : nt) {
    if (seed.is_leaf(v)) {
      throw PreconditionError("seed tree has a non-terminal leaf");
    }
  }
  const int target =
      2 * c * inst.ell + inst.p + 2 * static_cast<int>(nt.size());
  SpanningTree t = Grow(g, seed, nt, target, inst.ell);
  VertexSet avoid;
  for (Vertex v : nt) {
    auto nbrs = t.neighbors(v);
    avoid.insert(avoid.end(), nbrs.begin(), nbrs.begin() + 2);
  }
  return SwapFamily(g, t, nt, MakeVertexSet(std::move(avoid)), inst.k,
                    inst.ell);
}

}  // namespace divtree
