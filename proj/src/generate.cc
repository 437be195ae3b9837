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

#include "divtree/generate.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "divtree/error.h"

namespace divtree {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

template <typename T>
void Shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
    std::swap(items[i], items[UniformInt(rng, 0, i)]);
  }
}

}  // namespace

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

Graph PathGraph(int n) {
  Require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph::FromEdges(n, std::move(edges));
}

Graph CycleGraph(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return Graph::FromEdges(n, std::move(edges));
}

Graph CompleteGraph(int n) {
  Require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Graph::FromEdges(n, std::move(edges));
}

Graph StarGraph(int leaves) {
  Require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
  return Graph::FromEdges(leaves + 1, std::move(edges));
}

Graph RandomConnected(int n, int m, std::uint64_t seed) {
  Require(n >= 1, "random-connected needs n >= 1");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  Require(m >= n - 1, "random-connected needs m >= n - 1");
  Require(m <= max_m, "random-connected needs m <= n(n-1)/2");
  std::mt19937_64 rng(seed);

  std::vector<Vertex> label(n);
  for (int i = 0; i < n; ++i) label[i] = i + 1;
  Shuffle(label, rng);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.insert(Edge::Of(label[i], label[UniformInt(rng, 0, i - 1)]));
  }
  const long long extra = m - (n - 1);
  if (extra * 2 <= max_m) {
    while (static_cast<int>(edges.size()) < m) {
      Vertex u = UniformInt(rng, 1, n);
      Vertex v = UniformInt(rng, 1, n);
      if (u != v) edges.insert(Edge::Of(u, v));
    }
  } else {
    std::vector<Edge> missing;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (!edges.count({u, v})) missing.push_back({u, v});
      }
    }
    Shuffle(missing, rng);
    for (long long i = 0; i < extra; ++i) edges.insert(missing[i]);
  }
  return Graph::FromEdges(n, {edges.begin(), edges.end()});
}

Graph Theta(int a, int b, int c) {
  Require(a >= 1 && b >= 1 && c >= 1, "theta path lengths must be >= 1");
  Require((a == 1) + (b == 1) + (c == 1) <= 1,
          "theta allows at most one path of length 1");
  std::vector<Edge> edges;
  int n = 2;
  for (int len : {a, b, c}) {
    Vertex prev = 1;
    for (int i = 1; i < len; ++i) {
      ++n;
      edges.push_back(Edge::Of(prev, n));
      prev = n;
    }
    edges.push_back(Edge::Of(prev, 2));
  }
  return Graph::FromEdges(n, std::move(edges));
}

Graph Subdivided(const Graph& g, int factor) {
  Require(factor >= 1, "subdivision factor must be >= 1");
  std::vector<Edge> edges;
  int n = g.num_vertices();
  for (const Edge& e : g.edges()) {
    Vertex prev = e.u;
    for (int i = 1; i < factor; ++i) {
      ++n;
      edges.push_back(Edge::Of(prev, n));
      prev = n;
    }
    edges.push_back(Edge::Of(prev, e.v));
  }
  return Graph::FromEdges(n, std::move(edges));
}

Graph RandomlySubdivided(const Graph& g, int max_extra, std::uint64_t seed) {
  Require(max_extra >= 0, "max_extra must be >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  int n = g.num_vertices();
  for (const Edge& e : g.edges()) {
    const int extra = UniformInt(rng, 0, max_extra);
    Vertex prev = e.u;
    for (int i = 0; i < extra; ++i) {
      ++n;
      edges.push_back(Edge::Of(prev, n));
      prev = n;
    }
    edges.push_back(Edge::Of(prev, e.v));
  }
  return Graph::FromEdges(n, std::move(edges));
}

Graph TwinPendantGadget(const Graph& g, int count) {
  Require(g.num_vertices() >= 1, "gadget needs a non-empty base graph");
  Require(count >= 0, "pendant pair count must be >= 0");
  std::vector<Edge> edges = g.edges();
  int n = g.num_vertices();
  const int base_n = n;
  for (int i = 0; i < count; ++i) {
    const Vertex anchor = i % base_n + 1;
    edges.push_back(Edge::Of(anchor, ++n));
    edges.push_back(Edge::Of(anchor, ++n));
  }
  return Graph::FromEdges(n, std::move(edges));
}

Graph CubeLike(int n) {
  Require(n >= 4 && n % 2 == 0, "cube-like needs even n >= 4");
  if (n == 4) return CompleteGraph(4);
  const int half = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < half; ++i) {
    const Vertex a = i + 1;
    const Vertex b = (i + 1) % half + 1;
    edges.push_back(Edge::Of(a, b));
    edges.push_back(Edge::Of(a + half, b + half));
    edges.push_back(Edge::Of(a, a + half));
  }
  return Graph::FromEdges(n, std::move(edges));
}

Graph Generate(std::string_view family, const FamilyParams& params,
               std::uint64_t seed) {
  if (family == "random-connected") {
    return RandomConnected(params.n, params.m, seed);
  }
  if (family == "cycle") return CycleGraph(params.n);
  if (family == "path") return PathGraph(params.n);
  if (family == "complete") return CompleteGraph(params.n);
  if (family == "star") return StarGraph(params.n - 1);
  if (family == "theta") return Theta(params.a, params.b, params.c);
  if (family == "subdivided") return Subdivided(params.base, params.factor);
  if (family == "twin-pendant-gadget") {
    return TwinPendantGadget(params.base, params.count);
  }
  if (family == "cube-like") return CubeLike(params.n);
  throw PreconditionError("unknown family '" + std::string(family) + "'");
}

std::vector<std::string> FamilyNames() {
  return {"random-connected", "cycle",      "path",
          "complete",         "star",       "theta",
          "subdivided",       "twin-pendant-gadget", "cube-like"};
}

}  // namespace divtree
