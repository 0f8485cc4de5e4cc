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

#include "sfc/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sfc {

using nlohmann::json;

NetworkGraph NetworkGraph::from_parts(int domain_count, std::vector<Node> nodes, std::vector<Arc> arcs) {
  NetworkGraph g;
  g.domain_count_ = domain_count;
  g.nodes_ = std::move(nodes);
  g.arcs_ = std::move(arcs);
  const auto m = static_cast<std::size_t>(std::max(domain_count, 0));
  g.gateway_of_.assign(m, 0);
  g.members_.assign(m, {});
  g.domain_costs_.assign(m * m, std::nullopt);

  for (const Node& n : g.nodes_) {
    if (n.domain < 1 || n.domain > domain_count) continue;
    const auto d = static_cast<std::size_t>(n.domain - 1);
    if (sfc::is_gateway(n.type)) {
      if (g.gateway_of_[d] == 0) g.gateway_of_[d] = n.id;
    } else {
      g.members_[d].push_back(n.id);
    }
  }
  for (auto& list : g.members_) std::sort(list.begin(), list.end());

  for (const Arc& a : g.arcs_) {
    g.arc_index_.emplace(std::pair{a.from, a.to}, a.cost);
    if (!g.contains(a.from) || !g.contains(a.to)) continue;
    const Node& u = g.node(a.from);
    const Node& v = g.node(a.to);
    if (sfc::is_gateway(u.type) && sfc::is_gateway(v.type) && u.domain != v.domain && u.domain >= 1 &&
        v.domain >= 1 && u.domain <= domain_count && v.domain <= domain_count) {
      g.domain_costs_[static_cast<std::size_t>((u.domain - 1) * domain_count + (v.domain - 1))] = a.cost;
    }
  }
  return g;
}

NodeId NetworkGraph::gateway(DomainId d) const {
  if (d < 1 || d > domain_count_) return 0;
  return gateway_of_[static_cast<std::size_t>(d - 1)];
}

std::span<const NodeId> NetworkGraph::members(DomainId d) const {
  if (d < 1 || d > domain_count_) return {};
  return members_[static_cast<std::size_t>(d - 1)];
}

std::optional<Cost> NetworkGraph::inter_cost(DomainId from, DomainId to) const {
  if (from < 1 || to < 1 || from > domain_count_ || to > domain_count_) return std::nullopt;
  return domain_costs_[static_cast<std::size_t>((from - 1) * domain_count_ + (to - 1))];
}

std::optional<Cost> NetworkGraph::arc_cost(NodeId from, NodeId to) const {
  auto it = arc_index_.find({from, to});
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

Cost NetworkGraph::max_arc_cost() const {
  Cost best = 0;
  for (const Arc& a : arcs_) best = std::max(best, a.cost);
  return best;
}

NetworkGraph build_network(std::span<const NodeSpec> nodes, const InterDomainCosts& inter_domain_costs) {
  DomainId domain_count = 0;
  for (const NodeSpec& n : nodes) {
    if (n.domain < 1)
      throw NetworkError(NetworkError::Kind::InvalidDomain, "node references domain " + std::to_string(n.domain));
    domain_count = std::max(domain_count, n.domain);
  }
  for (const auto& [pair, cost] : inter_domain_costs) {
    const std::string label = "(" + std::to_string(pair.first) + ", " + std::to_string(pair.second) + ")";
    if (pair.first == pair.second)
      throw NetworkError(NetworkError::Kind::InvalidCost, "inter-domain cost on a self pair " + label);
    if (cost < 1)
      throw NetworkError(NetworkError::Kind::InvalidCost, "inter-domain cost " + std::to_string(cost) + " < 1 on " + label);
    if (pair.first < 1 || pair.second < 1)
      throw NetworkError(NetworkError::Kind::InvalidDomain, "inter-domain cost on unknown domain pair " + label);
    domain_count = std::max({domain_count, pair.first, pair.second});
  }

  std::vector<NodeId> gateway(static_cast<std::size_t>(domain_count), 0);
  std::vector<Node> table;
  table.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeId id = static_cast<NodeId>(i + 1);
    table.push_back({id, nodes[i].type, nodes[i].domain});
    if (!is_gateway(nodes[i].type)) continue;
    NodeId& slot = gateway[static_cast<std::size_t>(nodes[i].domain - 1)];
    if (slot != 0)
      throw NetworkError(NetworkError::Kind::DuplicateGateway,
                         "domain " + std::to_string(nodes[i].domain) + " has more than one gateway");
    slot = id;
  }
  for (DomainId d = 1; d <= domain_count; ++d)
    if (gateway[static_cast<std::size_t>(d - 1)] == 0)
      throw NetworkError(NetworkError::Kind::MissingGateway, "domain " + std::to_string(d) + " has no gateway");

  std::vector<Arc> arcs;
  arcs.reserve(nodes.size() + inter_domain_costs.size());
  for (const Node& n : table)
    if (!is_gateway(n.type)) arcs.push_back({gateway[static_cast<std::size_t>(n.domain - 1)], n.id, 0});
  for (const auto& [pair, cost] : inter_domain_costs)
    arcs.push_back({gateway[static_cast<std::size_t>(pair.first - 1)],
                    gateway[static_cast<std::size_t>(pair.second - 1)], cost});

  return NetworkGraph::from_parts(domain_count, std::move(table), std::move(arcs));
}

std::string_view to_string(NetworkIssue::Kind k) {
  switch (k) {
    case NetworkIssue::Kind::MissingGateway: return "MissingGateway";
    case NetworkIssue::Kind::DuplicateGateway: return "DuplicateGateway";
    case NetworkIssue::Kind::InvalidCost: return "InvalidCost";
    case NetworkIssue::Kind::InvalidDomain: return "InvalidDomain";
    case NetworkIssue::Kind::BadNodeId: return "BadNodeId";
    case NetworkIssue::Kind::BadArc: return "BadArc";
    case NetworkIssue::Kind::UnreachableNode: return "UnreachableNode";
  }
  return "?";
}

std::vector<NetworkIssue> validate_network(const NetworkGraph& g) {
  using Kind = NetworkIssue::Kind;
  std::vector<NetworkIssue> issues;
  auto report = [&](Kind k, std::string detail) { issues.push_back({k, std::move(detail)}); };

  const int m = g.domain_count();
  std::vector<int> gateways(static_cast<std::size_t>(std::max(m, 0)), 0);
  int position = 0;
  for (const Node& n : g.nodes()) {
    ++position;
    if (n.id != position)
      report(Kind::BadNodeId, "node at position " + std::to_string(position) + " has id " + std::to_string(n.id));
    if (n.domain < 1 || n.domain > m) {
      report(Kind::InvalidDomain, "node " + std::to_string(n.id) + " in domain " + std::to_string(n.domain));
      continue;
    }
    if (is_gateway(n.type)) ++gateways[static_cast<std::size_t>(n.domain - 1)];
  }
  for (DomainId d = 1; d <= m; ++d) {
    const int count = gateways[static_cast<std::size_t>(d - 1)];
    if (count == 0) report(Kind::MissingGateway, "domain " + std::to_string(d));
    if (count > 1) report(Kind::DuplicateGateway, "domain " + std::to_string(d) + " has " + std::to_string(count));
  }

  std::vector<int> in_degree(static_cast<std::size_t>(g.node_count()) + 1, 0);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Arc& a : g.arcs()) {
    const std::string label = std::to_string(a.from) + "->" + std::to_string(a.to);
    if (!g.contains(a.from) || !g.contains(a.to) || a.from == a.to) {
      report(Kind::BadArc, label + " has an invalid endpoint");
      continue;
    }
    if (!seen.insert({a.from, a.to}).second) report(Kind::BadArc, label + " appears twice");
    const Node& u = g.node(a.from);
    const Node& v = g.node(a.to);
    if (!is_gateway(u.type)) {
      report(Kind::BadArc, label + " leaves a non-gateway node");
    } else if (is_gateway(v.type)) {
      if (u.domain == v.domain) report(Kind::BadArc, label + " joins gateways of the same domain");
      else if (a.cost < 1) report(Kind::InvalidCost, label + " inter-domain cost " + std::to_string(a.cost));
    } else {
      if (u.domain != v.domain) report(Kind::BadArc, label + " crosses domains into a non-gateway node");
      else if (a.cost != 0) report(Kind::InvalidCost, label + " intra-domain cost " + std::to_string(a.cost));
      ++in_degree[static_cast<std::size_t>(a.to)];
    }
  }
  for (const Node& n : g.nodes()) {
    if (is_gateway(n.type) || !g.contains(n.id)) continue;
    const int deg = in_degree[static_cast<std::size_t>(n.id)];
    if (deg != 1)
      report(Kind::UnreachableNode,
             "node " + std::to_string(n.id) + " has " + std::to_string(deg) + " intra-domain arcs, expected 1");
  }
  return issues;
}

namespace {

int require_int(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw std::invalid_argument(where + ": field \"" + key + "\" must be an integer");
  return it->get<int>();
}

}  // namespace

NetworkDocument parse_network(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("network: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("network: top level must be an object");

  const int domains = require_int(doc, "domains", "network");
  if (domains < 1) throw std::invalid_argument("network: \"domains\" must be >= 1");

  std::vector<NodeSpec> nodes;
  const auto nodes_it = doc.find("nodes");
  if (nodes_it == doc.end() || !nodes_it->is_array()) throw std::invalid_argument("network: \"nodes\" must be an array");
  for (std::size_t i = 0; i < nodes_it->size(); ++i) {
    const json& n = (*nodes_it)[i];
    const std::string where = "network: nodes[" + std::to_string(i) + "]";
    if (!n.is_object()) throw std::invalid_argument(where + " must be an object");
    auto type_it = n.find("type");
    if (type_it == n.end() || !type_it->is_string()) throw std::invalid_argument(where + ": \"type\" must be a string");
    auto type = parse_node_type(type_it->get<std::string>());
    if (!type) throw std::invalid_argument(where + ": unknown node type \"" + type_it->get<std::string>() + "\"");
    const int domain = require_int(n, "domain", where);
    if (domain < 1 || domain > domains)
      throw std::invalid_argument(where + ": domain " + std::to_string(domain) + " outside 1.." + std::to_string(domains));
    nodes.push_back({*type, domain});
  }

  InterDomainCosts costs;
  if (auto links_it = doc.find("links"); links_it != doc.end()) {
    if (!links_it->is_array()) throw std::invalid_argument("network: \"links\" must be an array");
    for (std::size_t i = 0; i < links_it->size(); ++i) {
      const json& l = (*links_it)[i];
      const std::string where = "network: links[" + std::to_string(i) + "]";
      if (!l.is_object()) throw std::invalid_argument(where + " must be an object");
      const int from = require_int(l, "from_domain", where);
      const int to = require_int(l, "to_domain", where);
      const int cost = require_int(l, "cost", where);
      if (from < 1 || from > domains || to < 1 || to > domains)
        throw std::invalid_argument(where + ": domain outside 1.." + std::to_string(domains));
      if (!costs.emplace(DomainPair{from, to}, cost).second)
        throw std::invalid_argument(where + ": duplicate link " + std::to_string(from) + "->" + std::to_string(to));
    }
  }

  NetworkDocument out{build_network(nodes, costs), {}};
  if (out.graph.domain_count() != domains)
    throw NetworkError(NetworkError::Kind::MissingGateway,
                       "domain " + std::to_string(out.graph.domain_count() + 1) + " has no gateway");
  out.names = decimal_domain_names(out.graph);

  if (auto names_it = doc.find("domain_names"); names_it != doc.end()) {
    if (!names_it->is_array() || names_it->size() != static_cast<std::size_t>(domains))
      throw std::invalid_argument("network: \"domain_names\" must be an array of " + std::to_string(domains) + " strings");
    for (std::size_t i = 0; i < names_it->size(); ++i) {
      if (!(*names_it)[i].is_string()) throw std::invalid_argument("network: domain_names entries must be strings");
      const std::string name = (*names_it)[i].get<std::string>();
      const DomainId d = static_cast<DomainId>(i + 1);
      auto [it, inserted] = out.names.emplace(name, d);
      if (!inserted && it->second != d)
        throw std::invalid_argument("network: domain name \"" + name + "\" is ambiguous");
    }
  }
  return out;
}

DomainNameMap decimal_domain_names(const NetworkGraph& g) {
  DomainNameMap names;
  for (DomainId d = 1; d <= g.domain_count(); ++d) names.emplace(std::to_string(d), d);
  return names;
}

std::string network_to_json(const NetworkGraph& g, const std::vector<std::string>& domain_names) {
  json doc;
  doc["domains"] = g.domain_count();
  if (!domain_names.empty()) doc["domain_names"] = domain_names;
  json nodes = json::array();
  for (const Node& n : g.nodes()) nodes.push_back({{"type", std::string(to_string(n.type))}, {"domain", n.domain}});
  doc["nodes"] = std::move(nodes);
  json links = json::array();
  for (const Arc& a : g.arcs()) {
    if (!g.is_gateway(a.to)) continue;
    links.push_back({{"from_domain", g.node(a.from).domain}, {"to_domain", g.node(a.to).domain}, {"cost", a.cost}});
  }
  doc["links"] = std::move(links);
  return doc.dump(1);
}

}  // namespace sfc
