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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "divtree/audit.h"
#include "divtree/blackbox.h"
#include "divtree/error.h"
#include "divtree/generate.h"
#include "divtree/instance.h"
#include "divtree/kernelizer.h"
#include "divtree/oracle.h"
#include "divtree/serialize.h"

namespace divtree::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string problem;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> k;
  std::optional<int> ell;
  std::string nt;
  std::string nt_file;
  std::string input;
  std::string output;
  std::string blackbox = "exact";
  bool witness = false;
  std::string transcript;
  std::string kernel;
  std::int64_t max_trees = kDefaultTreeLimit;
  std::int64_t max_clique_nodes = 5'000'000;
  std::string family_file;
  // gen
  std::string family;
  FamilyParams params;
  std::string base;
  std::uint64_t seed = 1;
  // audit
  int count = 100;
  int max_n = 9;
  int max_m = 14;
  int jobs = 1;
  bool json_output = false;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void Emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw FormatError("cannot write '" + cfg.output + "'");
  file << text;
}

void EmitJson(const RunConfig& cfg, std::ostream& out, const json& j) {
  Emit(cfg, out, j.dump(2) + "\n");
}

BlackBox MakeBlackBox(const RunConfig& cfg) {
  if (cfg.blackbox == "exact") return BlackBox::Exact(cfg.max_trees);
  return BlackBox::None();
}

OracleLimits MakeLimits(const RunConfig& cfg) {
  return {cfg.max_trees, cfg.max_clique_nodes};
}

// Flags win when --problem is given; otherwise the file's directive line.
AnyInstance LoadInstance(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("an input file (-i) is required");
  const std::string text = ReadFile(cfg.input);
  if (cfg.problem.empty()) {
    if (cfg.p || cfg.q || cfg.k || cfg.ell || !cfg.nt.empty() ||
        !cfg.nt_file.empty()) {
      throw UsageError("parameter flags need --problem");
    }
    return ReadInstance(text);
  }
  Graph g = ReadGraph(text);
  if (cfg.problem == "li") {
    if (!cfg.nt.empty() || !cfg.nt_file.empty()) {
      throw UsageError("--nt is only valid with --problem lnt");
    }
    Instance inst{g, cfg.p.value_or(0), cfg.q.value_or(0), cfg.k.value_or(1),
                  cfg.ell.value_or(1)};
    inst.Validate();
    return inst;
  }
  if (cfg.q) throw UsageError("-q is only valid with --problem li");
  if (!cfg.nt.empty() && !cfg.nt_file.empty()) {
    throw UsageError("give --nt or --nt-file, not both");
  }
  VertexSet nt;
  if (!cfg.nt.empty()) nt = ParseVertexList(cfg.nt, g.num_vertices());
  if (!cfg.nt_file.empty()) {
    nt = ParseVertexList(ReadFile(cfg.nt_file), g.num_vertices());
  }
  InstanceNT inst{g, std::move(nt), cfg.p.value_or(0), cfg.k.value_or(1),
                  cfg.ell.value_or(1)};
  inst.Validate();
  return inst;
}

int Kernelize(const RunConfig& cfg, std::ostream& out) {
  KernelOptions options;
  options.construct_witness = cfg.witness;
  options.blackbox = MakeBlackBox(cfg);
  options.witness_budget = cfg.max_trees;
  AnyInstance inst = LoadInstance(cfg);
  json result;
  std::string transcript;
  std::string kernel;
  if (const auto* li = std::get_if<Instance>(&inst)) {
    LiKernelResult r = KernelizeLI(*li, options);
    result = ToJson(r);
    transcript = TranscriptNdjson(r.transcript);
    kernel = WriteInstance(r.instance);
  } else {
    LntKernelResult r = KernelizeLNT(std::get<InstanceNT>(inst), options);
    result = ToJson(r);
    transcript = TranscriptNdjson(r.transcript);
    kernel = WriteInstance(r.instance);
  }
  if (!cfg.transcript.empty()) {
    std::ofstream(cfg.transcript) << transcript;
  }
  if (!cfg.kernel.empty()) std::ofstream(cfg.kernel) << kernel;
  EmitJson(cfg, out, result);
  return kExitYes;
}

int Solve(const RunConfig& cfg, std::ostream& out) {
  AnyInstance inst = LoadInstance(cfg);
  OracleVerdict verdict =
      std::holds_alternative<Instance>(inst)
          ? SolveLI(std::get<Instance>(inst), MakeLimits(cfg))
          : SolveLNT(std::get<InstanceNT>(inst), MakeLimits(cfg));
  EmitJson(cfg, out, ToJson(verdict));
  switch (verdict.answer) {
    case Answer::kYes:
      return kExitYes;
    case Answer::kNo:
      return kExitNo;
    case Answer::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int Verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family_file.empty()) throw UsageError("--family is required");
  json family;
  try {
    family = json::parse(ReadFile(cfg.family_file));
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("family file: ") + e.what());
  }
  // Accepted: a bare array of trees, {"trees": [...]}, or kernelize output
  // whose "witness" carries its own instance.
  const json* holder = &family;
  if (family.is_object() && family.contains("witness")) {
    holder = &family["witness"];
  }
  const json& trees_json =
      holder->is_object() ? holder->at("trees") : *holder;
  std::vector<std::vector<Edge>> trees = TreesFromJson(trees_json);
  AnyInstance inst;
  if (!cfg.input.empty()) {
    inst = LoadInstance(cfg);
  } else if (holder->is_object() && holder->contains("instance")) {
    inst = InstanceFromJson(holder->at("instance"));
  } else {
    throw UsageError("no instance: give -i or a family with an instance");
  }
  FamilyReport report;
  int ell = 0;
  if (const auto* li = std::get_if<Instance>(&inst)) {
    report = VerifyFamily(li->graph, trees, li->p, li->q, li->k);
    ell = li->ell;
  } else {
    const auto& nt = std::get<InstanceNT>(inst);
    report = VerifyFamily(nt.graph, trees, nt.p, 0, nt.k, nt.nonterminals);
    ell = nt.ell;
  }
  json j = ToJson(report);
  j["enough_trees"] = static_cast<int>(trees.size()) >= ell;
  j["ok"] = report.ok && static_cast<int>(trees.size()) >= ell;
  EmitJson(cfg, out, j);
  return j["ok"].get<bool>() ? kExitYes : kExitNo;
}

int Construct(const RunConfig& cfg, std::ostream& out) {
  AnyInstance any = LoadInstance(cfg);
  const auto* inst = std::get_if<Instance>(&any);
  if (inst == nullptr) throw UsageError("construct needs --problem li");
  const Graph& g = inst->graph;
  std::string reason;
  const std::int64_t bound = SimpleFinalBound(inst->k, inst->ell);
  if (inst->p != 0 || inst->q != 0) {
    reason = "needs p = q = 0";
  } else if (!g.IsConnected() || g.MinDegree() < 2) {
    reason = "needs a connected graph of minimum degree 2";
  } else if (g.num_vertices() < bound) {
    reason = "needs at least " + std::to_string(bound) + " vertices";
  } else {
    for (const Degree2Path& path : MaximalDegree2Paths(g)) {
      if (path.length() >= inst->ell + 3) {
        reason = "has a degree-2-path of length " +
                 std::to_string(path.length());
        break;
      }
    }
  }
  if (!reason.empty()) {
    EmitJson(cfg, out,
             {{"schema", kSchemaVersion}, {"ok", false}, {"reason", reason}});
    return kExitNo;
  }
  std::vector<SpanningTree> family = BuildCase1Witness(g, inst->k, inst->ell);
  EmitJson(cfg, out,
           {{"schema", kSchemaVersion},
            {"ok", true},
            {"witness",
             {{"instance", ToJson(*inst)}, {"trees", TreesToJson(family)}}}});
  return kExitYes;
}

Graph BaseGraph(const std::string& base, std::uint64_t seed) {
  const auto colon = base.find(':');
  if (colon == std::string::npos) return ReadGraph(ReadFile(base));
  FamilyParams params;
  try {
    params.n = std::stoi(base.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--base expects a file or family:n, got '" + base + "'");
  }
  return Generate(base.substr(0, colon), params, seed);
}

int Gen(RunConfig cfg, std::ostream& out) {
  if (!cfg.base.empty()) cfg.params.base = BaseGraph(cfg.base, cfg.seed);
  Graph g = Generate(cfg.family, cfg.params, cfg.seed);
  if (cfg.problem.empty()) {
    Emit(cfg, out, WriteGraph(g));
  } else if (cfg.problem == "li") {
    Instance inst{g, cfg.p.value_or(0), cfg.q.value_or(0), cfg.k.value_or(1),
                  cfg.ell.value_or(1)};
    inst.Validate();
    Emit(cfg, out, WriteInstance(inst));
  } else {
    if (cfg.q) throw UsageError("-q is only valid with --problem li");
    InstanceNT inst{g, ParseVertexList(cfg.nt, g.num_vertices()),
                    cfg.p.value_or(0), cfg.k.value_or(1), cfg.ell.value_or(1)};
    inst.Validate();
    Emit(cfg, out, WriteInstance(inst));
  }
  return kExitYes;
}

int Audit(const RunConfig& cfg, std::ostream& out) {
  if (cfg.problem.empty()) throw UsageError("audit needs --problem");
  AuditOptions options;
  options.instances.max_n = cfg.max_n;
  options.instances.max_m = cfg.max_m;
  options.limits = MakeLimits(cfg);
  options.blackbox = MakeBlackBox(cfg);
  options.jobs = cfg.jobs;
  const Problem problem =
      cfg.problem == "li" ? Problem::kLeafInternal : Problem::kNonterminal;
  std::vector<AuditRecord> records =
      RunAudit(problem, cfg.count, cfg.seed, options);
  int passed = 0;
  int inconclusive = 0;
  for (const AuditRecord& r : records) {
    passed += r.passed();
    inconclusive += r.error.empty() && r.inconclusive();
  }
  const int failed = static_cast<int>(records.size()) - passed - inconclusive;
  if (cfg.json_output) {
    json rows = json::array();
    for (const AuditRecord& r : records) {
      rows.push_back({{"index", r.index},
                      {"seed", r.seed},
                      {"n", r.n},
                      {"m", r.m},
                      {"outcome", OutcomeName(r.outcome)},
                      {"rules", r.rules},
                      {"kernel_n", r.kernel_n},
                      {"before", AnswerName(r.before)},
                      {"after", AnswerName(r.after)},
                      {"replay_ok", r.replay_ok},
                      {"bound_ok", r.bound_ok},
                      {"error", r.error},
                      {"passed", r.passed()}});
    }
    EmitJson(cfg, out,
             {{"schema", kSchemaVersion},
              {"problem", cfg.problem},
              {"passed", passed},
              {"inconclusive", inconclusive},
              {"failed", failed},
              {"records", std::move(rows)}});
  } else {
    std::ostringstream table;
    char line[256];
    std::snprintf(line, sizeof line, "%5s %3s %3s %-23s %5s %4s %-6s %-6s %s\n",
                  "index", "n", "m", "outcome", "rules", "kn", "before",
                  "after", "status");
    table << line;
    for (const AuditRecord& r : records) {
      const char* status = r.passed() ? "pass"
                           : (r.error.empty() && r.inconclusive())
                               ? "skip"
                               : "FAIL";
      std::snprintf(line, sizeof line,
                    "%5d %3d %3d %-23s %5d %4d %-6s %-6s %s\n", r.index, r.n,
                    r.m, std::string(OutcomeName(r.outcome)).c_str(), r.rules,
                    r.kernel_n, std::string(AnswerName(r.before)).c_str(),
                    std::string(AnswerName(r.after)).c_str(), status);
      table << line;
      if (!r.error.empty()) table << "      error: " << r.error << "\n";
    }
    table << "passed " << passed << "/" << records.size() << " ("
          << inconclusive << " inconclusive, " << failed << " failed)\n";
    Emit(cfg, out, table.str());
  }
  return failed == 0 ? kExitYes : kExitNo;
}

void AddInstanceFlags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--problem", cfg.problem, "li or lnt")
      ->check(CLI::IsMember({"li", "lnt"}));
  sub->add_option("-p", cfg.p, "required leaves");
  sub->add_option("-q", cfg.q, "required internal vertices (li)");
  sub->add_option("-k", cfg.k, "diversity threshold");
  sub->add_option("-l,--ell", cfg.ell, "number of trees");
  sub->add_option("--nt", cfg.nt, "non-terminals, e.g. 1,4,5 (lnt)");
  sub->add_option("--nt-file", cfg.nt_file, "file of non-terminal ids (lnt)");
  sub->add_option("-i,--input", cfg.input, "edge-list or instance file");
  sub->add_option("-o,--output", cfg.output, "write output here");
}

void AddLimitFlags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--max-trees", cfg.max_trees, "enumeration limit")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-clique-nodes", cfg.max_clique_nodes,
                  "clique search limit")
      ->check(CLI::PositiveNumber);
}

void AddBlackBoxFlag(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--blackbox", cfg.blackbox, "exact or none")
      ->check(CLI::IsMember({"exact", "none"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Kernelization and exact solving for diverse spanning trees",
               "divtree"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* kernelize = app.add_subcommand("kernelize", "run a kernelization");
  AddInstanceFlags(kernelize, cfg);
  AddBlackBoxFlag(kernelize, cfg);
  AddLimitFlags(kernelize, cfg);
  kernelize->add_flag("--witness", cfg.witness, "construct yes-certificates");
  kernelize->add_option("--transcript", cfg.transcript,
                        "write the transcript as NDJSON");
  kernelize->add_option("--kernel", cfg.kernel,
                        "write the output instance file");

  CLI::App* solve = app.add_subcommand("solve", "solve exactly (small inputs)");
  AddInstanceFlags(solve, cfg);
  AddLimitFlags(solve, cfg);

  CLI::App* verify = app.add_subcommand("verify", "check a family of trees");
  AddInstanceFlags(verify, cfg);
  verify->add_option("--family", cfg.family_file, "JSON family file");

  CLI::App* construct =
      app.add_subcommand("construct", "build a diverse family (p = q = 0)");
  AddInstanceFlags(construct, cfg);

  CLI::App* gen = app.add_subcommand("gen", "generate a graph");
  AddInstanceFlags(gen, cfg);
  gen->add_option("--family", cfg.family, "graph family")
      ->required()
      ->check(CLI::IsMember(FamilyNames()));
  gen->add_option("-n", cfg.params.n, "vertices");
  gen->add_option("-m", cfg.params.m, "edges");
  gen->add_option("-a", cfg.params.a, "theta path a");
  gen->add_option("-b", cfg.params.b, "theta path b");
  gen->add_option("-c", cfg.params.c, "theta path c");
  gen->add_option("--factor", cfg.params.factor, "subdivision factor");
  gen->add_option("--count", cfg.params.count, "twin pendant pairs");
  gen->add_option("--base", cfg.base, "base graph file or family:n");
  gen->add_option("--seed", cfg.seed, "random seed");

  CLI::App* audit = app.add_subcommand("audit", "random safety audit");
  audit->add_option("--problem", cfg.problem, "li or lnt")
      ->required()
      ->check(CLI::IsMember({"li", "lnt"}));
  audit->add_option("--count", cfg.count, "instances")->check(CLI::NonNegativeNumber);
  audit->add_option("--max-n", cfg.max_n, "largest n")->check(CLI::Range(3, 64));
  audit->add_option("--max-m", cfg.max_m, "largest m")->check(CLI::PositiveNumber);
  audit->add_option("--seed", cfg.seed, "random seed");
  audit->add_option("-j,--jobs", cfg.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  audit->add_flag("--json", cfg.json_output, "JSON instead of a table");
  audit->add_option("-o,--output", cfg.output, "write output here");
  AddBlackBoxFlag(audit, cfg);
  AddLimitFlags(audit, cfg);

  std::vector<const char*> argv = {"divtree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "divtree: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (kernelize->parsed()) return Kernelize(cfg, out);
    if (solve->parsed()) return Solve(cfg, out);
    if (verify->parsed()) return Verify(cfg, out);
    if (construct->parsed()) return Construct(cfg, out);
    if (gen->parsed()) return Gen(cfg, out);
    if (audit->parsed()) return Audit(cfg, out);
  } catch (const UsageError& e) {
    err << "divtree: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "divtree: " << e.what() << "\n";
    return kExitDataFormat;
  } catch (const InvariantError& e) {
    err << "divtree: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const PreconditionError& e) {
    err << "divtree: " << e.what() << "\n";
    return kExitDataFormat;
  } catch (const std::exception& e) {
    err << "divtree: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace divtree::cli
