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

#include "divtree/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "divtree/error.h"

namespace divtree {

VertexSet MakeVertexSet(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool Contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

Graph::Graph() : data_(std::make_shared<const Data>(Data{0, {}, {0, 0}, {}})) {}

Graph Graph::FromEdges(int n, std::vector<Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
    e = Edge::Of(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "} leaves [1," +
                              std::to_string(n) + "]");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw PreconditionError("parallel edge {" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + "}");
  }

  Data data;
  data.n = n;
  data.offsets.assign(n + 2, 0);
  for (const Edge& e : edges) {
    ++data.offsets[e.u + 1];
    ++data.offsets[e.v + 1];
  }
  for (int v = 1; v <= n; ++v) data.offsets[v + 1] += data.offsets[v];
  data.adjacency.resize(2 * edges.size());
  std::vector<int> fill(data.offsets.begin(), data.offsets.end() - 1);
  for (const Edge& e : edges) {
    data.adjacency[fill[e.u]++] = e.v;
    data.adjacency[fill[e.v]++] = e.u;
  }
  // Edges are sorted, so each row is already ascending for the u side but not
  // for the v side.
  for (int v = 1; v <= n; ++v) {
    std::sort(data.adjacency.begin() + data.offsets[v],
              data.adjacency.begin() + data.offsets[v + 1]);
  }
  data.edges = std::move(edges);
  return Graph(std::make_shared<const Data>(std::move(data)));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!has_vertex(v)) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  const int begin = data_->offsets[v];
  const int end = data_->offsets[v + 1];
  return {data_->adjacency.data() + begin, static_cast<size_t>(end - begin)};
}

int Graph::degree(Vertex v) const {
  if (!has_vertex(v)) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  return data_->offsets[v + 1] - data_->offsets[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<int> Graph::EdgeIndex(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key = Edge::Of(a, b);
  auto it = std::lower_bound(data_->edges.begin(), data_->edges.end(), key);
  if (it == data_->edges.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - data_->edges.begin());
}

bool Graph::IsConnected() const {
  const int n = num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> stack = {1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

bool Graph::IsTree() const {
  return num_vertices() >= 1 && num_edges() == num_vertices() - 1 &&
         IsConnected();
}

int Graph::MinDegree() const {
  int best = num_vertices() == 0 ? 0 : degree(1);
  for (Vertex v = 2; v <= num_vertices(); ++v) best = std::min(best, degree(v));
  return best;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.data_ == b.data_ ||
         (a.data_->n == b.data_->n && a.data_->edges == b.data_->edges);
}

Degree2Path::Degree2Path(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {}

std::span<const Vertex> Degree2Path::internal() const {
  if (vertices_.size() < 2) return {};
  return {vertices_.data() + 1, vertices_.size() - 2};
}

std::span<const Vertex> Degree2Path::strictly_internal() const {
  const int r = length();
  if (r < 6) {
    throw PreconditionError("strictly internal vertices need length >= 6");
  }
  return {vertices_.data() + 3, static_cast<size_t>(r - 5)};
}

bool IsDegree2Path(const Graph& g, const Degree2Path& path,
                   const VertexSet& forbidden) {
  const auto& vs = path.vertices();
  if (vs.size() < 2) return false;
  for (Vertex v : vs) {
    if (!g.has_vertex(v)) return false;
  }
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
  }
  // Distinct except for a possible closure.
  std::vector<Vertex> body(vs.begin(), path.closed() ? vs.end() - 1 : vs.end());
  std::sort(body.begin(), body.end());
  if (std::adjacent_find(body.begin(), body.end()) != body.end()) return false;
  // A closed walk of length 2 would reuse its single edge.
  if (path.closed() && path.length() < 3) return false;
  for (Vertex v : path.internal()) {
    if (g.degree(v) != 2 || Contains(forbidden, v)) return false;
  }
  return true;
}

Vertex Renaming::operator()(Vertex old_id) const {
  if (old_id == removed) {
    return merged_into == 0 ? 0 : (*this)(merged_into);
  }
  return old_id > removed ? old_id - 1 : old_id;
}

std::vector<Vertex> Renaming::AsVector() const {
  std::vector<Vertex> out(old_n + 1, 0);
  for (Vertex v = 1; v <= old_n; ++v) out[v] = (*this)(v);
  return out;
}

VertexSet Rename(const VertexSet& set, const Renaming& renaming) {
  std::vector<Vertex> out;
  out.reserve(set.size());
  for (Vertex v : set) {
    if (v == renaming.removed && renaming.merged_into == 0) continue;
    out.push_back(renaming(v));
  }
  return MakeVertexSet(std::move(out));
}

VertexSet PendantVertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Degree2Path> MaximalDegree2Paths(const Graph& g,
                                             const VertexSet& forbidden) {
  const int n = g.num_vertices();
  std::vector<char> passable(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    passable[v] = g.degree(v) == 2 && !Contains(forbidden, v);
  }
  std::vector<char> used(n + 1, 0);
  std::vector<Degree2Path> paths;

  auto walk = [&](Vertex anchor, Vertex first) {
    std::vector<Vertex> seq = {anchor};
    Vertex prev = anchor;
    Vertex cur = first;
    while (true) {
      seq.push_back(cur);
      if (!passable[cur] || (cur == anchor && seq.size() > 1)) break;
      used[cur] = 1;
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    paths.emplace_back(std::move(seq));
  };

  for (Vertex a = 1; a <= n; ++a) {
    if (passable[a]) continue;
    for (Vertex b : g.neighbors(a)) {
      if (passable[b] && !used[b]) walk(a, b);
    }
  }
  // Whatever is left lies on anchor-free cycle components.
  for (Vertex a = 1; a <= n; ++a) {
    if (!passable[a] || used[a]) continue;
    used[a] = 1;
    passable[a] = 0;  // acts as the anchor of its cycle
    walk(a, g.neighbors(a)[0]);
    passable[a] = 1;
  }
  return paths;
}

GraphEdit ContractPathEdge(const Graph& g, const Degree2Path& path) {
  if (path.length() < 3 || path.internal().size() < 2) {
    throw PreconditionError(
        "contraction needs a degree-2-path of length >= 3");
  }
  if (path.closed() && path.length() < 4) {
    throw PreconditionError(
        "contracting a closed path of length 3 creates a parallel edge");
  }
  if (!IsDegree2Path(g, path)) {
    throw PreconditionError("not a degree-2-path of the graph");
  }
  const Vertex a = path.vertices()[1];
  const Vertex b = path.vertices()[2];
  Renaming renaming{g.num_vertices(), std::max(a, b), std::min(a, b)};
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() - 1);
  for (const Edge& e : g.edges()) {
    if (e == Edge::Of(a, b)) continue;
    edges.push_back(Edge::Of(renaming(e.u), renaming(e.v)));
  }
  return {Graph::FromEdges(g.num_vertices() - 1, std::move(edges)), renaming};
}

GraphEdit DeleteVertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  Renaming renaming{g.num_vertices(), v, 0};
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e.Touches(v)) continue;
    edges.push_back(Edge::Of(renaming(e.u), renaming(e.v)));
  }
  return {Graph::FromEdges(g.num_vertices() - 1, std::move(edges)), renaming};
}

}  // namespace divtree
