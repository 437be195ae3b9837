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

#include "test_util.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace divtree::testing {

Graph MakeGraph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back(Edge::Of(u, v));
  return Graph::FromEdges(n, std::move(list));
}

std::int64_t KirchhoffCount(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return n == 1 ? 1 : 0;
  // Laplacian without the row and column of vertex n.
  const int d = n - 1;
  std::vector<std::vector<__int128>> a(d, std::vector<__int128>(d, 0));
  for (const Edge& e : g.edges()) {
    const int u = e.u - 1;
    const int v = e.v - 1;
    if (u < d) a[u][u] += 1;
    if (v < d) a[v][v] += 1;
    if (u < d && v < d) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  __int128 previous = 1;
  int sign = 1;
  for (int i = 0; i < d; ++i) {
    if (a[i][i] == 0) {
      int swap_row = -1;
      for (int r = i + 1; r < d; ++r) {
        if (a[r][i] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[i], a[swap_row]);
      sign = -sign;
    }
    for (int r = i + 1; r < d; ++r) {
      for (int c = i + 1; c < d; ++c) {
        a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / previous;
      }
      a[r][i] = 0;
    }
    previous = a[i][i];
  }
  return static_cast<std::int64_t>(sign * a[d - 1][d - 1]);
}

namespace {

// Stable colors over the disjoint union, so colors compare across graphs.
std::pair<std::vector<int>, std::vector<int>> JointColors(const Graph& a,
                                                          const Graph& b) {
  const int n = a.num_vertices();
  std::vector<int> ca(n + 1), cb(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], nb);
    };
    std::vector<std::pair<int, std::vector<int>>> sa(n + 1), sb(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> na(n + 1), nb(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      na[v] = ids[sa[v]];
      nb[v] = ids[sb[v]];
    }
    const bool stable = na == ca && nb == cb;
    ca.swap(na);
    cb.swap(nb);
    if (stable) break;
  }
  return {ca, cb};
}

bool Extend(const Graph& a, const Graph& b, const std::vector<int>& ca,
            const std::vector<int>& cb, std::vector<Vertex>& map,
            std::vector<char>& used, Vertex v) {
  const int n = a.num_vertices();
  if (v > n) return true;
  for (Vertex w = 1; w <= n; ++w) {
    if (used[w] || ca[v] != cb[w]) continue;
    bool ok = true;
    for (Vertex u = 1; u < v && ok; ++u) {
      ok = a.has_edge(u, v) == b.has_edge(map[u], w);
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (Extend(a, b, ca, cb, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  auto [ca, cb] = JointColors(a, b);
  std::vector<int> sa(ca.begin() + 1, ca.end());
  std::vector<int> sb(cb.begin() + 1, cb.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  const int n = a.num_vertices();
  std::vector<Vertex> map(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  return Extend(a, b, ca, cb, map, used, 1);
}

std::vector<Vertex> RandomPermutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

Graph Relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::Of(perm[e.u], perm[e.v]));
  return Graph::FromEdges(g.num_vertices(), std::move(edges));
}

VertexSet Relabel(const VertexSet& set, const std::vector<Vertex>& perm) {
  std::vector<Vertex> out;
  for (Vertex v : set) out.push_back(perm[v]);
  return MakeVertexSet(std::move(out));
}

}  // namespace divtree::testing
