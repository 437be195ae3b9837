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

#include "divtree/serialize.h"

#include <sstream>

#include "divtree/error.h"

namespace divtree {
namespace {

using nlohmann::json;

json EdgesToJson(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> EdgesFromJson(const json& j) {
  std::vector<Edge> edges;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw FormatError("edge must be a pair of vertex ids");
    }
    edges.push_back(Edge::Of(e[0].get<int>(), e[1].get<int>()));
  }
  return edges;
}

template <typename I>
json ResultToJson(const KernelResult<I>& result) {
  json out = {{"schema", kSchemaVersion},
              {"outcome", OutcomeName(result.outcome)},
              {"reason", result.reason},
              {"instance", ToJson(result.instance)},
              {"reduced", ToJson(result.reduced)},
              {"bound_ok", result.bound_ok}};
  json transcript = json::array();
  for (const RuleApplication& app : result.transcript) {
    transcript.push_back(ToJson(app));
  }
  out["transcript"] = std::move(transcript);
  if (!result.witness.empty()) {
    // The trees span the graph of `reduced`, except for tree inputs.
    const Graph& host = result.witness.front().host();
    json context = ToJson(result.reduced);
    context["graph"] = ToJson(host);
    out["witness"] = {{"instance", std::move(context)},
                      {"trees", TreesToJson(result.witness)}};
  }
  return out;
}

}  // namespace

json ToJson(const Graph& g) {
  return {{"n", g.num_vertices()}, {"edges", EdgesToJson(g.edges())}};
}

json ToJson(const Instance& inst) {
  return {{"problem", "li"}, {"p", inst.p},     {"q", inst.q},
          {"k", inst.k},     {"ell", inst.ell}, {"graph", ToJson(inst.graph)}};
}

json ToJson(const InstanceNT& inst) {
  return {{"problem", "lnt"},
          {"p", inst.p},
          {"k", inst.k},
          {"ell", inst.ell},
          {"nt", inst.nonterminals},
          {"graph", ToJson(inst.graph)}};
}

json ToJson(const RuleApplication& app) {
  json out = {{"rule", RuleName(app.rule)},
              {"touched", app.touched},
              {"dp", app.dp},
              {"dq", app.dq},
              {"nt_removed", app.nt_removed},
              {"renaming", nullptr},
              {"detail", app.detail}};
  if (app.renaming) {
    out["renaming"] = {{"old_n", app.renaming->old_n},
                       {"removed", app.renaming->removed},
                       {"merged_into", app.renaming->merged_into}};
  }
  return out;
}

json ToJson(const LiKernelResult& result) { return ResultToJson(result); }
json ToJson(const LntKernelResult& result) { return ResultToJson(result); }

json ToJson(const FamilyReport& report) {
  json trees = json::array();
  for (const TreeCheck& t : report.trees) {
    json entry = {{"valid", !t.invalid},
                  {"leaves", t.leaves},
                  {"internal", t.internal},
                  {"enough_leaves", t.enough_leaves},
                  {"enough_internal", t.enough_internal},
                  {"nonterminal_leaves", t.nonterminal_leaves},
                  {"ok", t.ok()}};
    if (t.invalid) entry["error"] = *t.invalid;
    trees.push_back(std::move(entry));
  }
  json pairs = json::array();
  for (const PairCheck& p : report.pairs) {
    pairs.push_back(
        {{"i", p.i}, {"j", p.j}, {"distance", p.distance}, {"ok", p.ok}});
  }
  return {{"schema", kSchemaVersion},
          {"ok", report.ok},
          {"trees", std::move(trees)},
          {"pairs", std::move(pairs)}};
}

json ToJson(const OracleVerdict& verdict) {
  json out = {{"schema", kSchemaVersion},
              {"answer", AnswerName(verdict.answer)},
              {"trees_enumerated", verdict.trees_enumerated},
              {"feasible_trees", verdict.feasible_trees},
              {"clique_nodes", verdict.clique_nodes}};
  if (!verdict.witness.empty()) out["witness"] = TreesToJson(verdict.witness);
  return out;
}

json TreesToJson(const std::vector<SpanningTree>& trees) {
  json out = json::array();
  for (const SpanningTree& t : trees) out.push_back(EdgesToJson(t.edges()));
  return out;
}

std::string TranscriptNdjson(const std::vector<RuleApplication>& transcript) {
  std::ostringstream out;
  for (const RuleApplication& app : transcript) out << ToJson(app).dump() << '\n';
  return out.str();
}

Graph GraphFromJson(const json& j) {
  try {
    return Graph::FromEdges(j.at("n").get<int>(), EdgesFromJson(j.at("edges")));
  } catch (const json::exception& e) {
    throw FormatError(std::string("graph: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("graph: ") + e.what());
  }
}

AnyInstance InstanceFromJson(const json& j) {
  try {
    const std::string problem = j.at("problem").get<std::string>();
    Graph g = GraphFromJson(j.at("graph"));
    if (problem == "li") {
      Instance inst{g, j.at("p").get<int>(), j.at("q").get<int>(),
                    j.at("k").get<int>(), j.at("ell").get<int>()};
      inst.Validate();
      return inst;
    }
    if (problem == "lnt") {
      VertexSet nt = MakeVertexSet(j.at("nt").get<std::vector<int>>());
      InstanceNT inst{g, std::move(nt), j.at("p").get<int>(),
                      j.at("k").get<int>(), j.at("ell").get<int>()};
      inst.Validate();
      return inst;
    }
    throw FormatError("unknown problem '" + problem + "'");
  } catch (const json::exception& e) {
    throw FormatError(std::string("instance: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
}

std::vector<std::vector<Edge>> TreesFromJson(const json& j) {
  try {
    std::vector<std::vector<Edge>> trees;
    for (const json& t : j) trees.push_back(EdgesFromJson(t));
    return trees;
  } catch (const json::exception& e) {
    throw FormatError(std::string("trees: ") + e.what());
  }
}

RuleApplication RuleApplicationFromJson(const json& j) {
  try {
    RuleApplication app;
    const std::string name = j.at("rule").get<std::string>();
    std::optional<Rule> rule = ParseRule(name);
    if (!rule) throw FormatError("unknown rule '" + name + "'");
    app.rule = *rule;
    app.touched = j.at("touched").get<std::vector<Vertex>>();
    app.dp = j.at("dp").get<int>();
    app.dq = j.at("dq").get<int>();
    app.nt_removed = j.at("nt_removed").get<VertexSet>();
    if (!j.at("renaming").is_null()) {
      const json& r = j.at("renaming");
      app.renaming = Renaming{r.at("old_n").get<int>(),
                              r.at("removed").get<Vertex>(),
                              r.at("merged_into").get<Vertex>()};
    }
    app.detail = j.at("detail").get<std::string>();
    return app;
  } catch (const json::exception& e) {
    throw FormatError(std::string("transcript entry: ") + e.what());
  }
}

}  // namespace divtree
