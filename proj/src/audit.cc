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

#include "divtree/audit.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "divtree/error.h"
#include "divtree/generate.h"

namespace divtree {
namespace {

struct Shape {
  Graph graph;
  int n = 0;
};

Shape RandomShape(std::mt19937_64& rng, const RandomInstanceOptions& o) {
  const int n = UniformInt(rng, 3, std::max(3, o.max_n));
  const int max_m = std::min(o.max_m, n * (n - 1) / 2);
  const int m = UniformInt(rng, n - 1, std::max(n - 1, max_m));
  return {RandomConnected(n, m, rng()), n};
}

template <typename I>
std::int64_t ThresholdOf(const KernelResult<I>& result) {
  for (auto it = result.transcript.rbegin(); it != result.transcript.rend();
       ++it) {
    const RuleApplication& app = *it;
    const I& r = result.reduced;
    if constexpr (std::is_same_v<I, Instance>) {
      if (app.rule == Rule::kR5) return SimpleFinalBound(r.k, r.ell);
      if (app.rule == Rule::kR6) return AdvancedFinalBound(r.p, r.q, r.k, r.ell);
    } else {
      const int nt = static_cast<int>(r.nonterminals.size());
      if (app.rule == Rule::kR10) return SimpleFinalBoundNT(nt, r.k, r.ell);
      if (app.rule == Rule::kR11) {
        return AdvancedFinalBoundNT(r.p, nt, r.k, r.ell);
      }
    }
  }
  return -1;
}

template <typename I>
bool WithinBound(const KernelResult<I>& result) {
  if (result.outcome != Outcome::kReduced) return true;
  const std::int64_t bound = ThresholdOf(result);
  return bound >= 0 && result.instance.graph.num_vertices() < bound;
}

template <typename I>
void Check(const I& input, const KernelResult<I>& result,
           const OracleLimits& limits, AuditRecord& record) {
  record.outcome = result.outcome;
  record.kernel_n = result.instance.graph.num_vertices();
  record.rules = static_cast<int>(
      std::count_if(result.transcript.begin(), result.transcript.end(),
                    [](const RuleApplication& a) { return IsMutating(a.rule); }));
  record.replay_ok = Replay(input, result.transcript) == result.reduced;
  record.bound_ok = WithinBound(result) && result.bound_ok;
  if constexpr (std::is_same_v<I, Instance>) {
    record.before = SolveLI(input, limits).answer;
    record.after = SolveLI(result.instance, limits).answer;
  } else {
    record.before = SolveLNT(input, limits).answer;
    record.after = SolveLNT(result.instance, limits).answer;
  }
}

}  // namespace

Instance RandomInstance(std::uint64_t seed, const RandomInstanceOptions& o) {
  std::mt19937_64 rng(seed);
  Shape s = RandomShape(rng, o);
  Instance inst;
  inst.graph = s.graph;
  inst.p = UniformInt(rng, 0, std::min(o.max_p, s.n));
  inst.q = UniformInt(rng, 0, std::min(o.max_q, s.n));
  inst.k = UniformInt(rng, 1, std::max(1, o.max_k));
  inst.ell = UniformInt(rng, 1, std::max(1, o.max_ell));
  return inst;
}

InstanceNT RandomInstanceNT(std::uint64_t seed,
                            const RandomInstanceOptions& o) {
  std::mt19937_64 rng(seed);
  Shape s = RandomShape(rng, o);
  InstanceNT inst;
  inst.graph = s.graph;
  const int size = UniformInt(rng, 0, std::min(o.max_nt, s.n));
  std::vector<Vertex> all(s.n);
  for (int i = 0; i < s.n; ++i) all[i] = i + 1;
  for (int i = 0; i < size; ++i) {
    std::swap(all[i], all[UniformInt(rng, i, s.n - 1)]);
  }
  inst.nonterminals =
      MakeVertexSet(std::vector<Vertex>(all.begin(), all.begin() + size));
  inst.p = UniformInt(rng, 0, std::min(o.max_p, s.n));
  inst.k = UniformInt(rng, 1, std::max(1, o.max_k));
  inst.ell = UniformInt(rng, 1, std::max(1, o.max_ell));
  return inst;
}

AuditRecord AuditOne(Problem problem, int index, std::uint64_t seed,
                     const AuditOptions& options) {
  AuditRecord record;
  record.index = index;
  record.seed = seed;
  KernelOptions kernel_options;
  kernel_options.blackbox = options.blackbox;
  try {
    if (problem == Problem::kLeafInternal) {
      Instance inst = RandomInstance(seed, options.instances);
      record.n = inst.graph.num_vertices();
      record.m = inst.graph.num_edges();
      Check(inst, KernelizeLI(inst, kernel_options), options.limits, record);
    } else {
      InstanceNT inst = RandomInstanceNT(seed, options.instances);
      record.n = inst.graph.num_vertices();
      record.m = inst.graph.num_edges();
      Check(inst, KernelizeLNT(inst, kernel_options), options.limits, record);
    }
  } catch (const Error& e) {
    record.error = e.what();
  }
  return record;
}

std::vector<AuditRecord> RunAudit(Problem problem, int count,
                                  std::uint64_t seed,
                                  const AuditOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> seeds(std::max(0, count));
  for (auto& s : seeds) s = rng();
  std::vector<AuditRecord> records(seeds.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < seeds.size(); i = next++) {
      records[i] = AuditOne(problem, static_cast<int>(i), seeds[i], options);
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

bool ReducedWithinBound(const LiKernelResult& result) {
  return WithinBound(result);
}

bool ReducedWithinBound(const LntKernelResult& result) {
  return WithinBound(result);
}

}  // namespace divtree
