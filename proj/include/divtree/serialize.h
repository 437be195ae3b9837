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

#ifndef DIVTREE_SERIALIZE_H_
#define DIVTREE_SERIALIZE_H_

#include <string>
#include <vector>

#include "divtree/diversify.h"
#include "divtree/instance.h"
#include "divtree/kernelizer.h"
#include "divtree/oracle.h"
#include "json.hpp"

namespace divtree {

inline constexpr int kSchemaVersion = 1;

nlohmann::json ToJson(const Graph& g);
nlohmann::json ToJson(const Instance& inst);
nlohmann::json ToJson(const InstanceNT& inst);
nlohmann::json ToJson(const RuleApplication& app);
nlohmann::json ToJson(const LiKernelResult& result);
nlohmann::json ToJson(const LntKernelResult& result);
nlohmann::json ToJson(const FamilyReport& report);
nlohmann::json ToJson(const OracleVerdict& verdict);
nlohmann::json TreesToJson(const std::vector<SpanningTree>& trees);

// One JSON object per line.
std::string TranscriptNdjson(const std::vector<RuleApplication>& transcript);

// Inverses of the ToJson overloads above. Throw FormatError on bad input.
Graph GraphFromJson(const nlohmann::json& j);
AnyInstance InstanceFromJson(const nlohmann::json& j);
std::vector<std::vector<Edge>> TreesFromJson(const nlohmann::json& j);
RuleApplication RuleApplicationFromJson(const nlohmann::json& j);

}  // namespace divtree

#endif  // DIVTREE_SERIALIZE_H_
