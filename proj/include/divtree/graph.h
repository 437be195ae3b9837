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

#ifndef DIVTREE_GRAPH_H_
#define DIVTREE_GRAPH_H_

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace divtree {

// Vertices are 1-based ids in [1, n].
using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge Of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool Touches(Vertex x) const { return u == x || v == x; }
  Vertex Other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet MakeVertexSet(std::vector<Vertex> vertices);
bool Contains(const VertexSet& set, Vertex v);

// Simple undirected graph on [1, n]. Immutable; copies share storage.
class Graph {
 public:
  // The empty graph (n = 0). Only useful as a placeholder.
  Graph();

  // Throws PreconditionError on self-loops, parallel edges or endpoints
  // outside [1, n].
  static Graph FromEdges(int n, std::vector<Edge> edges);

  int num_vertices() const { return data_->n; }
  int num_edges() const { return static_cast<int>(data_->edges.size()); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return data_->edges; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  bool has_vertex(Vertex v) const { return v >= 1 && v <= data_->n; }
  bool has_edge(Vertex a, Vertex b) const;

  // Position of {a, b} in edges(), if present.
  std::optional<int> EdgeIndex(Vertex a, Vertex b) const;

  bool IsConnected() const;
  bool IsTree() const;
  int MinDegree() const;

  // True when both handles point at the same storage.
  bool SharesStorageWith(const Graph& other) const {
    return data_ == other.data_;
  }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> offsets;  // CSR row starts, indexed by vertex id
    std::vector<Vertex> adjacency;
  };

  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// A walk (v_0, ..., v_r) whose internal vertices have degree two in the host
// graph. Vertices are distinct except that v_0 = v_r is allowed (closed).
class Degree2Path {
 public:
  Degree2Path() = default;
  explicit Degree2Path(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  bool closed() const {
    return vertices_.size() > 1 && vertices_.front() == vertices_.back();
  }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  // v_1 .. v_{r-1}.
  std::span<const Vertex> internal() const;
  // v_3 .. v_{r-3}; requires length() >= 6.
  std::span<const Vertex> strictly_internal() const;

  friend bool operator==(const Degree2Path&, const Degree2Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Checks the degree-2-path conditions of `path` against `g`. When `forbidden`
// is given, internal vertices must also avoid it.
bool IsDegree2Path(const Graph& g, const Degree2Path& path,
                   const VertexSet& forbidden = {});

// Old-to-new vertex map after one vertex disappears. Ids above `removed`
// shift down by one; `removed` itself maps to the new id of `merged_into`
// (contraction) or to 0 (deletion).
struct Renaming {
  int old_n = 0;
  Vertex removed = 0;
  Vertex merged_into = 0;

  Vertex operator()(Vertex old_id) const;
  // Entry i holds the image of vertex i; entry 0 is unused.
  std::vector<Vertex> AsVector() const;

  friend bool operator==(const Renaming&, const Renaming&) = default;
};

// Applies `renaming` to a vertex set, dropping vertices that vanish.
VertexSet Rename(const VertexSet& set, const Renaming& renaming);

struct GraphEdit {
  Graph graph;
  Renaming renaming;
};

// Degree-1 vertices.
VertexSet PendantVertices(const Graph& g);

// All inclusion-maximal degree-2-paths with at least one internal vertex whose
// internal vertices avoid `forbidden`. Vertices of degree other than two and
// forbidden vertices act as end-vertices. A cycle component without such an
// anchor is reported once as a closed path anchored at its smallest id. Paths
// are oriented from the smaller anchor, leaving through its smaller neighbor,
// and listed in that order.
std::vector<Degree2Path> MaximalDegree2Paths(const Graph& g,
                                             const VertexSet& forbidden = {});

// Contracts the edge between the first two internal vertices of `path`. The
// merged vertex keeps the smaller of the two ids. Requires length >= 3 (>= 4
// for closed paths) so the result stays simple.
GraphEdit ContractPathEdge(const Graph& g, const Degree2Path& path);

// Removes `v` with its incident edges. Connectivity is not checked.
GraphEdit DeleteVertex(const Graph& g, Vertex v);

}  // namespace divtree

#endif  // DIVTREE_GRAPH_H_
