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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfc/vnf_type.hpp"

namespace sfc {

/// 1-based index into the node table of a NetworkGraph.
using NodeId = int;
/// 1-based index into the domain table of a NetworkGraph.
using DomainId = int;
/// Abstract integer cost units.
using Cost = std::int64_t;

struct Node {
  NodeId id = 0;
  VnfType type = VnfType::GATEWAY;
  DomainId domain = 0;
};

struct Arc {
  NodeId from = 0;
  NodeId to = 0;
  Cost cost = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct NodeSpec {
  VnfType type;
  DomainId domain;
};

using DomainPair = std::pair<DomainId, DomainId>;
using InterDomainCosts = std::map<DomainPair, Cost>;

class NetworkError : public std::runtime_error {
 public:
  enum class Kind { MissingGateway, DuplicateGateway, InvalidCost, InvalidDomain };

  NetworkError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Multi-domain topology: one gateway per domain, zero-cost arcs from each
/// gateway to the other nodes of its domain, and directed weighted arcs
/// between gateways of distinct domains. Immutable once built.
class NetworkGraph {
 public:
  NetworkGraph() = default;

  /// Assembles a graph from raw parts without checking any invariant.
  /// Intended for tooling and tests; use build_network for real inputs.
  static NetworkGraph from_parts(int domain_count, std::vector<Node> nodes, std::vector<Arc> arcs);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int domain_count() const { return domain_count_; }

  const Node& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id - 1)); }
  bool contains(NodeId id) const { return id >= 1 && id <= node_count(); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Arc> arcs() const { return arcs_; }

  /// Gateway node of a domain, or 0 when the domain has none.
  NodeId gateway(DomainId d) const;
  /// Non-gateway nodes of a domain in id order.
  std::span<const NodeId> members(DomainId d) const;

  std::optional<Cost> inter_cost(DomainId from, DomainId to) const;
  /// Cost of the arc from -> to, if that arc exists.
  std::optional<Cost> arc_cost(NodeId from, NodeId to) const;

  /// Largest arc cost in the graph (0 for an arc-free graph).
  Cost max_arc_cost() const;

  bool is_gateway(NodeId id) const { return sfc::is_gateway(node(id).type); }

 private:
  int domain_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
  std::vector<NodeId> gateway_of_;                 // index d-1
  std::vector<std::vector<NodeId>> members_;       // index d-1
  std::vector<std::optional<Cost>> domain_costs_;  // row-major (d1-1)*m + (d2-1)
  std::map<std::pair<NodeId, NodeId>, Cost> arc_index_;
};

/// Builds the arc set {gateway(d) -> v} for every non-gateway v of d (cost 0)
/// plus one gateway arc per entry of inter_domain_costs. Node ids follow the
/// order of `nodes`. The domain count is the largest domain referenced.
NetworkGraph build_network(std::span<const NodeSpec> nodes, const InterDomainCosts& inter_domain_costs);

struct NetworkIssue {
  enum class Kind {
    MissingGateway,
    DuplicateGateway,
    InvalidCost,
    InvalidDomain,
    BadNodeId,
    BadArc,
    UnreachableNode,
  };
  Kind kind;
  std::string detail;
};

std::string_view to_string(NetworkIssue::Kind k);

/// Lists every violated NetworkGraph invariant. Empty means valid.
std::vector<NetworkIssue> validate_network(const NetworkGraph& g);

/// Domain names used by request and constraint files, mapped to domain ids.
using DomainNameMap = std::map<std::string, DomainId, std::less<>>;

/// "1" -> 1, ..., "m" -> m.
DomainNameMap decimal_domain_names(const NetworkGraph& g);

struct NetworkDocument {
  NetworkGraph graph;
  DomainNameMap names;
};

/// Reads the network JSON file format:
///   {"domains": m,
///    "domain_names": ["s", "d", ...],             (optional)
///    "nodes": [{"type": "GW", "domain": 1}, ...],
///    "links": [{"from_domain": 1, "to_domain": 2, "cost": 5}, ...]}
/// Domains are always reachable by their decimal id; "domain_names" adds
/// aliases. Throws std::invalid_argument on schema problems and
/// NetworkError on topology problems.
NetworkDocument parse_network(std::string_view json_text);

std::string network_to_json(const NetworkGraph& g, const std::vector<std::string>& domain_names = {});

}  // namespace sfc
