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

#include <gtest/gtest.h>

namespace divtree {
namespace {

TEST(AuditTest, RandomInstancesStayInRange) {
  RandomInstanceOptions o;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance li = RandomInstance(seed, o);
    EXPECT_TRUE(li.graph.IsConnected());
    EXPECT_GE(li.graph.num_vertices(), 3);
    EXPECT_LE(li.graph.num_vertices(), o.max_n);
    EXPECT_LE(li.graph.num_edges(), o.max_m);
    EXPECT_LE(li.p, o.max_p);
    EXPECT_LE(li.q, o.max_q);
    InstanceNT nt = RandomInstanceNT(seed, o);
    EXPECT_LE(static_cast<int>(nt.nonterminals.size()), o.max_nt);
    EXPECT_EQ(RandomInstanceNT(seed, o), nt);
  }
}

TEST(AuditTest, JobsDoNotChangeTheRecords) {
  AuditOptions one;
  AuditOptions four;
  four.jobs = 4;
  auto a = RunAudit(Problem::kNonterminal, 40, 8, one);
  auto b = RunAudit(Problem::kNonterminal, 40, 8, four);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].index, static_cast<int>(i));
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].outcome, b[i].outcome);
    EXPECT_EQ(a[i].before, b[i].before);
    EXPECT_TRUE(a[i].passed()) << a[i].error;
  }
}

TEST(AuditTest, TinyLimitsAreInconclusiveNotFailures) {
  AuditOptions options;
  options.limits.max_trees = 1;
  int inconclusive = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    AuditRecord r = AuditOne(Problem::kLeafInternal, 0, seed, options);
    EXPECT_TRUE(r.error.empty()) << r.error;
    if (!r.inconclusive()) continue;
    ++inconclusive;
    EXPECT_FALSE(r.passed());
  }
  EXPECT_GT(inconclusive, 10);
}

}  // namespace
}  // namespace divtree
