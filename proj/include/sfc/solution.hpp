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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/network.hpp"

namespace sfc {

/// A candidate solution: a tree of the network rooted at the source gateway
/// whose internal nodes are gateways and whose leaves are the VNFs assigned
/// to the request nodes.
struct SfcTree {
  NodeId root = 0;
  /// assignment[i] is the network node serving request node i.
  std::vector<NodeId> assignment;
  /// Selected arcs between gateways of different domains.
  std::vector<Arc> gateway_arcs;
  /// Selected arcs from a gateway to a node of its own domain.
  std::vector<Arc> intra_arcs;

  /// Both arc lists, gateway arcs first.
  std::vector<Arc> all_arcs() const;

  friend bool operator==(const SfcTree&, const SfcTree&) = default;
};

/// Sum of the costs of all selected arcs.
Cost tree_cost(const SfcTree& t);

enum class OutcomeKind { Optimal, Feasible, Unsat, Timeout };

std::string_view to_string(OutcomeKind k);

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  double wall_ms = 0.0;
};

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::Unsat;
  /// Present for Optimal and Feasible; the incumbent (if any) for Timeout.
  std::optional<SfcTree> tree;
  SolveStats stats;

  bool has_tree() const { return tree.has_value(); }
  std::optional<Cost> cost() const;
};

/// Solution file format:
///   {"outcome": "optimal", "cost": 5, "root": 1, "assignment": [2, 4],
///    "gateway_arcs": [{"from": 1, "to": 3, "cost": 5}],
///    "intra_arcs": [{"from": 1, "to": 2, "cost": 0}, ...],
///    "statistics": {"nodes_explored": 7, "wall_ms": 0.12}}
/// Tree fields are omitted when no tree is available.
std::string outcome_to_json(const SolveOutcome& outcome, bool include_statistics = true);

/// Reads the tree part of a solution file. Throws std::invalid_argument when
/// the file carries no tree or is malformed.
SfcTree tree_from_json(std::string_view json_text);

}  // namespace sfc
