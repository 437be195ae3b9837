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

#ifndef DIVTREE_AUDIT_H_
#define DIVTREE_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "divtree/instance.h"
#include "divtree/kernelizer.h"
#include "divtree/oracle.h"

namespace divtree {

enum class Problem { kLeafInternal, kNonterminal };

struct RandomInstanceOptions {
  int max_n = 9;
  int max_m = 14;
  int max_p = 4;
  int max_q = 4;
  int max_nt = 3;
  int max_k = 4;
  int max_ell = 3;
};

// Connected graph with 3 <= n <= max_n and n - 1 <= m <= max_m, parameters
// uniform in their ranges (p, q and |V_NT| also capped by n).
Instance RandomInstance(std::uint64_t seed, const RandomInstanceOptions& o);
InstanceNT RandomInstanceNT(std::uint64_t seed, const RandomInstanceOptions& o);

struct AuditRecord {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  Outcome outcome = Outcome::kReduced;
  int rules = 0;  // mutating rule applications
  int kernel_n = 0;
  Answer before = Answer::kInconclusive;
  Answer after = Answer::kInconclusive;
  bool replay_ok = false;
  bool bound_ok = false;
  std::string error;

  bool inconclusive() const {
    return before == Answer::kInconclusive || after == Answer::kInconclusive;
  }
  bool passed() const {
    return error.empty() && replay_ok && bound_ok && !inconclusive() &&
           before == after;
  }
};

struct AuditOptions {
  RandomInstanceOptions instances;
  OracleLimits limits;
  BlackBox blackbox = BlackBox::Exact();
  int jobs = 1;
};

// Kernelizes one random instance, replays its transcript, checks the size
// bound of a Reduced outcome and compares oracle verdicts of input and output.
AuditRecord AuditOne(Problem problem, int index, std::uint64_t seed,
                     const AuditOptions& options);

// `count` instances with seeds drawn from `seed`; records come back in index
// order whatever the number of jobs.
std::vector<AuditRecord> RunAudit(Problem problem, int count,
                                  std::uint64_t seed,
                                  const AuditOptions& options);

// Whether a Reduced outcome respects the threshold of the rule that ended the
// run (the last threshold entry of the transcript). True for other outcomes.
bool ReducedWithinBound(const LiKernelResult& result);
bool ReducedWithinBound(const LntKernelResult& result);

}  // namespace divtree

#endif  // DIVTREE_AUDIT_H_
