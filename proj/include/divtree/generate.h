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

#ifndef DIVTREE_GENERATE_H_
#define DIVTREE_GENERATE_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "divtree/graph.h"

namespace divtree {

// Portable uniform integer in [lo, hi]; std distributions differ across
// standard libraries and would break seed reproducibility.
int UniformInt(std::mt19937_64& rng, int lo, int hi);

Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
// K_{1,leaves} with center 1.
Graph StarGraph(int leaves);

// Connected graph with n vertices and m edges: a random recursive tree plus
// m - (n - 1) random extra edges. Deterministic for a fixed seed.
Graph RandomConnected(int n, int m, std::uint64_t seed);

// Two poles joined by three internally disjoint paths of the given lengths.
Graph Theta(int a, int b, int c);

// Each edge becomes a path with `factor` edges.
Graph Subdivided(const Graph& g, int factor);

// Each edge gains a random number of subdivision vertices in [0, max_extra].
Graph RandomlySubdivided(const Graph& g, int max_extra, std::uint64_t seed);

// Attaches `count` pairs of pendant vertices; pair i hangs off vertex
// (i mod n) + 1.
Graph TwinPendantGadget(const Graph& g, int count);

// Minimum-degree-3 graph: K_4 for n = 4, the prism C_{n/2} x K_2 for even
// n >= 6. The cube Q_3 is CubeLike(8).
Graph CubeLike(int n);

struct FamilyParams {
  int n = 0;
  int m = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int factor = 2;
  int count = 1;
  Graph base;  // for subdivided / twin-pendant-gadget
};

// Family names: random-connected, cycle, path, complete, star, theta,
// subdivided, twin-pendant-gadget, cube-like. Throws PreconditionError on
// infeasible parameters.
Graph Generate(std::string_view family, const FamilyParams& params,
               std::uint64_t seed);

std::vector<std::string> FamilyNames();

}  // namespace divtree

#endif  // DIVTREE_GENERATE_H_
