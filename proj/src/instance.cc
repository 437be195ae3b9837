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

#include "divtree/instance.h"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "divtree/error.h"

namespace divtree {
namespace {

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> ParseInt(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> Lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    out.push_back({number, text.substr(pos, end - pos)});
    pos = end + 1;
  }
  return out;
}

Graph ParseGraphLines(const std::vector<Line>& lines) {
  size_t i = 0;
  auto next_data_line = [&]() -> const Line* {
    while (i < lines.size()) {
      const Line& line = lines[i++];
      std::string_view t = Trim(line.text);
      if (t.empty() || t.front() == '#') continue;
      return &line;
    }
    return nullptr;
  };

  const Line* header = next_data_line();
  if (header == nullptr) throw FormatError("missing `n m` header");
  auto fields = SplitWhitespace(header->text);
  if (fields.size() != 2) Fail(header->number, "header must be `n m`");
  auto n = ParseInt(fields[0]);
  auto m = ParseInt(fields[1]);
  if (!n || !m || *n < 1 || *m < 0) {
    Fail(header->number, "header must hold a positive n and m >= 0");
  }
  if (*n > 10'000'000 || *m > 50'000'000) Fail(header->number, "graph too large");

  std::vector<Edge> edges;
  edges.reserve(*m);
  std::map<Edge, int> seen;
  for (long long e = 0; e < *m; ++e) {
    const Line* line = next_data_line();
    if (line == nullptr) {
      throw FormatError("expected " + std::to_string(*m) + " edges, found " +
                        std::to_string(e));
    }
    auto uv = SplitWhitespace(line->text);
    if (uv.size() != 2) Fail(line->number, "edge line must be `u v`");
    auto u = ParseInt(uv[0]);
    auto v = ParseInt(uv[1]);
    if (!u || !v) Fail(line->number, "vertex ids must be integers");
    for (long long x : {*u, *v}) {
      if (x < 1 || x > *n) {
        Fail(line->number, "vertex " + std::to_string(x) + " out of range [1," +
                               std::to_string(*n) + "]");
      }
    }
    if (*u == *v) Fail(line->number, "self-loop at vertex " + std::to_string(*u));
    Edge edge = Edge::Of(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    auto [it, inserted] = seen.emplace(edge, line->number);
    if (!inserted) {
      Fail(line->number, "duplicate edge " + std::to_string(edge.u) + " " +
                             std::to_string(edge.v) + " (first on line " +
                             std::to_string(it->second) + ")");
    }
    edges.push_back(edge);
  }
  if (const Line* extra = next_data_line()) {
    Fail(extra->number, "more edge lines than the header announces");
  }
  return Graph::FromEdges(static_cast<int>(*n), std::move(edges));
}

}  // namespace

void Instance::Validate() const {
  const int n = graph.num_vertices();
  if (p < 0 || q < 0) throw PreconditionError("p and q must be >= 0");
  if (p > n || q > n) throw PreconditionError("p and q must not exceed n");
  if (k < 1 || ell < 1) throw PreconditionError("k and ell must be >= 1");
}

void InstanceNT::Validate() const {
  const int n = graph.num_vertices();
  if (p < 0 || p > n) throw PreconditionError("p must lie in [0, n]");
  if (k < 1 || ell < 1) throw PreconditionError("k and ell must be >= 1");
  if (nonterminals != MakeVertexSet(nonterminals)) {
    throw PreconditionError("non-terminal set must be sorted and unique");
  }
  for (Vertex v : nonterminals) {
    if (!graph.has_vertex(v)) {
      throw PreconditionError("non-terminal " + std::to_string(v) +
                              " is not a vertex");
    }
  }
}

Graph ReadGraph(std::string_view text) { return ParseGraphLines(Lines(text)); }

std::string WriteGraph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

VertexSet ParseVertexList(std::string_view text, int n) {
  std::vector<Vertex> out;
  std::string normalized(text);
  for (char& c : normalized) {
    if (c == ',' || c == '\n' || c == '\t') c = ' ';
  }
  for (std::string_view token : SplitWhitespace(normalized)) {
    auto v = ParseInt(token);
    if (!v) throw FormatError("bad vertex id '" + std::string(token) + "'");
    if (*v < 1 || (n > 0 && *v > n)) {
      throw FormatError("non-terminal " + std::to_string(*v) +
                        " out of range [1," + std::to_string(n) + "]");
    }
    out.push_back(static_cast<Vertex>(*v));
  }
  return MakeVertexSet(std::move(out));
}

std::string FormatVertexList(const VertexSet& set) {
  std::string out;
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(set[i]);
  }
  return out;
}

AnyInstance ReadInstance(std::string_view text) {
  auto lines = Lines(text);
  std::optional<Line> directive;
  for (const Line& line : lines) {
    std::string_view t = Trim(line.text);
    if (t.empty() || t.front() != '#') continue;
    auto words = SplitWhitespace(t.substr(1));
    if (!words.empty() && words[0] == "divtree") {
      if (directive) Fail(line.number, "second parameter line");
      directive = line;
    }
  }
  if (!directive) throw FormatError("missing `# divtree li|lnt ...` line");

  auto words = SplitWhitespace(Trim(directive->text).substr(1));
  if (words.size() < 2 || (words[1] != "li" && words[1] != "lnt")) {
    Fail(directive->number, "problem must be `li` or `lnt`");
  }
  const bool nt_problem = words[1] == "lnt";
  std::map<std::string, std::string, std::less<>> params;
  for (size_t i = 2; i < words.size(); ++i) {
    auto eq = words[i].find('=');
    if (eq == std::string_view::npos) {
      Fail(directive->number, "expected key=value, got '" +
                                  std::string(words[i]) + "'");
    }
    params.emplace(std::string(words[i].substr(0, eq)),
                   std::string(words[i].substr(eq + 1)));
  }
  auto take_int = [&](std::string_view key, int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    auto v = ParseInt(it->second);
    if (!v) Fail(directive->number, "bad value for " + std::string(key));
    params.erase(it);
    return static_cast<int>(*v);
  };

  Graph g = ParseGraphLines(lines);
  try {
    if (nt_problem) {
      InstanceNT inst;
      inst.graph = g;
      inst.p = take_int("p", 0);
      inst.k = take_int("k", 1);
      inst.ell = take_int("ell", 1);
      if (auto it = params.find("nt"); it != params.end()) {
        inst.nonterminals = ParseVertexList(it->second, g.num_vertices());
        params.erase(it);
      }
      if (!params.empty()) {
        Fail(directive->number, "unknown key '" + params.begin()->first + "'");
      }
      inst.Validate();
      return inst;
    }
    Instance inst;
    inst.graph = g;
    inst.p = take_int("p", 0);
    inst.q = take_int("q", 0);
    inst.k = take_int("k", 1);
    inst.ell = take_int("ell", 1);
    if (!params.empty()) {
      Fail(directive->number, "unknown key '" + params.begin()->first + "'");
    }
    inst.Validate();
    return inst;
  } catch (const PreconditionError& e) {
    Fail(directive->number, e.what());
  }
}

std::string WriteInstance(const Instance& inst) {
  std::ostringstream out;
  out << "# divtree li p=" << inst.p << " q=" << inst.q << " k=" << inst.k
      << " ell=" << inst.ell << '\n'
      << WriteGraph(inst.graph);
  return out.str();
}

std::string WriteInstance(const InstanceNT& inst) {
  std::ostringstream out;
  out << "# divtree lnt p=" << inst.p << " k=" << inst.k << " ell=" << inst.ell;
  if (!inst.nonterminals.empty()) {
    out << " nt=" << FormatVertexList(inst.nonterminals);
  }
  out << '\n' << WriteGraph(inst.graph);
  return out.str();
}

}  // namespace divtree
