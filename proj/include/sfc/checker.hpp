// Copyright 2026 The sfc-design Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfc/intent.hpp"
#include "sfc/network.hpp"
#include "sfc/request_tree.hpp"
#include "sfc/solution.hpp"

namespace sfc {

/// Satisfaction conditions of a tree against a request and its domain
/// constraints. Structure covers the tree shape itself (subgraph of the
/// network, rooted, gateway internal nodes, non-gateway leaves).
enum class Condition {
  Structure,
  RootAndDestination,  // i
  Mapping,             // ii
  GatewayPath,         // iii
  Proximity,           // iv
  DomainCount,         // v
};

/// Short label: "structure", "i", "ii", "iii", "iv", "v".
std::string_view to_string(Condition c);

struct Violation {
  Condition condition;
  std::string detail;
};

using SatisfactionReport = std::vector<Violation>;

bool violates(const SatisfactionReport& report, Condition c);

/// Checks `t` against every condition; the report is empty iff `t` is an
/// admissible solution. The request mapping checked is t.assignment.
/// Gateway paths for condition iii are taken in the undirected tree, and
/// root-anchored request nodes are joined to the tree root.
SatisfactionReport check_satisfaction(const SfcTree& t, const NetworkGraph& g, const BoundIntent& intent,
                                      const RequestTree& tree);

std::string format_report(const SatisfactionReport& report);

}  // namespace sfc
