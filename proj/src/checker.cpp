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

#include "sfc/checker.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace sfc {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Structure: return "structure";
    case Condition::RootAndDestination: return "i";
    case Condition::Mapping: return "ii";
    case Condition::GatewayPath: return "iii";
    case Condition::Proximity: return "iv";
    case Condition::DomainCount: return "v";
  }
  return "?";
}

bool violates(const SatisfactionReport& report, Condition c) {
  return std::any_of(report.begin(), report.end(), [c](const Violation& v) { return v.condition == c; });
}

std::string format_report(const SatisfactionReport& report) {
  std::ostringstream out;
  for (const Violation& v : report) out << "condition " << to_string(v.condition) << ": " << v.detail << '\n';
  return out.str();
}

namespace {

std::string str(NodeId id) { return std::to_string(id); }

}  // namespace

SatisfactionReport check_satisfaction(const SfcTree& t, const NetworkGraph& g, const BoundIntent& intent,
                                      const RequestTree& tree) {
  SatisfactionReport report;
  auto flag = [&](Condition c, std::string detail) { report.push_back({c, std::move(detail)}); };

  const std::vector<Arc> arcs = t.all_arcs();

  if (!g.contains(t.root)) {
    flag(Condition::Structure, "root " + str(t.root) + " is not a network node");
    return report;
  }
  for (const Arc& a : arcs) {
    if (!g.contains(a.from) || !g.contains(a.to)) {
      flag(Condition::Structure, "arc " + str(a.from) + "->" + str(a.to) + " references an unknown node");
      return report;
    }
  }

  // Tree shape.
  std::set<NodeId> members{t.root};
  std::map<NodeId, std::vector<NodeId>> children;
  std::map<NodeId, std::vector<NodeId>> parents;
  std::map<NodeId, std::set<NodeId>> undirected;
  std::set<std::pair<NodeId, NodeId>> arc_set;
  for (const Arc& a : arcs) {
    const std::string label = str(a.from) + "->" + str(a.to);
    if (!arc_set.emplace(a.from, a.to).second) flag(Condition::Structure, "arc " + label + " selected twice");
    members.insert(a.from);
    members.insert(a.to);
    children[a.from].push_back(a.to);
    parents[a.to].push_back(a.from);
    undirected[a.from].insert(a.to);
    undirected[a.to].insert(a.from);
    const auto real = g.arc_cost(a.from, a.to);
    if (!real) flag(Condition::Structure, "arc " + label + " is not a network arc");
    else if (*real != a.cost)
      flag(Condition::Structure, "arc " + label + " carries cost " + std::to_string(a.cost) + ", network says " +
                                     std::to_string(*real));
  }
  if (!parents[t.root].empty()) flag(Condition::Structure, "root " + str(t.root) + " has an incoming arc");
  for (NodeId v : members) {
    if (v == t.root) continue;
    if (parents[v].size() != 1)
      flag(Condition::Structure, "node " + str(v) + " has " + std::to_string(parents[v].size()) + " parents");
  }
  {
    std::set<NodeId> reached{t.root};
    std::deque<NodeId> queue{t.root};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId w : children[u])
        if (reached.insert(w).second) queue.push_back(w);
    }
    for (NodeId v : members)
      if (!reached.contains(v)) flag(Condition::Structure, "node " + str(v) + " is not reachable from the root");
  }
  for (NodeId v : members) {
    const bool leaf = children[v].empty();
    if (leaf && g.is_gateway(v)) flag(Condition::Structure, "leaf " + str(v) + " is a gateway");
    if (!leaf && !g.is_gateway(v)) flag(Condition::Structure, "internal node " + str(v) + " is not a gateway");
  }

  // i) root in the source domain, some VNF leaf in the destination domain.
  if (g.node(t.root).domain != intent.src)
    flag(Condition::RootAndDestination, "root " + str(t.root) + " lies in domain " +
                                            std::to_string(g.node(t.root).domain) + ", expected " +
                                            std::to_string(intent.src));
  const bool has_dst_leaf = std::any_of(members.begin(), members.end(), [&](NodeId v) {
    return children[v].empty() && !g.is_gateway(v) && g.node(v).domain == intent.dst;
  });
  if (!has_dst_leaf)
    flag(Condition::RootAndDestination, "no leaf in destination domain " + std::to_string(intent.dst));

  // ii) injective, type-preserving mapping; extra nodes are gateways only.
  const int n = tree.size();
  std::vector<bool> mapped(static_cast<std::size_t>(n), false);
  if (static_cast<int>(t.assignment.size()) != n) {
    flag(Condition::Mapping, "assignment has " + std::to_string(t.assignment.size()) + " entries, request has " +
                                 std::to_string(n));
  } else {
    std::map<NodeId, int> image;
    for (int i = 0; i < n; ++i) {
      const NodeId v = t.assignment[static_cast<std::size_t>(i)];
      const std::string who = "request node " + std::to_string(i);
      if (!g.contains(v)) {
        flag(Condition::Mapping, who + " maps to unknown node " + str(v));
        continue;
      }
      bool ok = true;
      if (!members.contains(v)) {
        flag(Condition::Mapping, who + " maps to node " + str(v) + " which is not in the tree");
        ok = false;
      }
      if (g.node(v).type != tree.type(i)) {
        flag(Condition::Mapping, who + " (" + std::string(to_string(tree.type(i))) + ") maps to node " + str(v) +
                                     " of type " + std::string(to_string(g.node(v).type)));
        ok = false;
      }
      auto [it, fresh] = image.emplace(v, i);
      if (!fresh) {
        flag(Condition::Mapping, "request nodes " + std::to_string(it->second) + " and " + std::to_string(i) +
                                     " share node " + str(v));
        ok = false;
      }
      mapped[static_cast<std::size_t>(i)] = ok;
    }
    for (NodeId v : members)
      if (!g.is_gateway(v) && !image.contains(v))
        flag(Condition::Mapping, "node " + str(v) + " is neither a gateway nor an assigned VNF");
  }

  // iii) each request arc joins the gateways above its endpoints through
  // gateway-only tree paths. A root-anchored node is joined to the root.
  auto gateways_above = [&](int i) {
    std::vector<NodeId> out;
    if (i == RequestTree::kRoot) {
      if (g.is_gateway(t.root)) out.push_back(t.root);
      return out;
    }
    const NodeId v = t.assignment[static_cast<std::size_t>(i)];
    for (NodeId p : parents[v])
      if (g.is_gateway(p) && g.arc_cost(p, v)) out.push_back(p);
    return out;
  };
  auto gateway_connected = [&](NodeId from, NodeId to) {
    std::set<NodeId> seen{from};
    std::deque<NodeId> queue{from};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      if (u == to) return true;
      for (NodeId w : undirected[u])
        if (g.is_gateway(w) && seen.insert(w).second) queue.push_back(w);
    }
    return false;
  };
  if (static_cast<int>(t.assignment.size()) == n) {
    for (int j = 0; j < n; ++j) {
      const int p = tree.parent(j);
      if (!mapped[static_cast<std::size_t>(j)] || (p != RequestTree::kRoot && !mapped[static_cast<std::size_t>(p)]))
        continue;
      const std::string arc_label = (p == RequestTree::kRoot ? std::string("root") : std::to_string(p)) + "->" +
                                    std::to_string(j);
      const auto from = gateways_above(p);
      const auto to = gateways_above(j);
      if (from.empty() || to.empty()) {
        flag(Condition::GatewayPath, "request arc " + arc_label + ": an endpoint does not hang off a gateway");
        continue;
      }
      bool joined = false;
      for (NodeId a : from)
        for (NodeId b : to) joined = joined || gateway_connected(a, b);
      if (!joined) flag(Condition::GatewayPath, "request arc " + arc_label + ": no gateway-only path between its gateways");
    }
  }

  // iv) proximity masks.
  const SfcRequest& req = intent.request;
  for (int i = 0; i < n && i < static_cast<int>(t.assignment.size()); ++i) {
    const NodeId v = t.assignment[static_cast<std::size_t>(i)];
    if (!g.contains(v)) continue;
    const DomainId d = g.node(v).domain;
    const auto idx = static_cast<std::size_t>(i);
    if (idx < req.prox_to_src.size() && req.prox_to_src[idx] && d != intent.src)
      flag(Condition::Proximity, "request node " + std::to_string(i) + " must be in the source domain, found in " +
                                     std::to_string(d));
    if (idx < req.prox_to_dst.size() && req.prox_to_dst[idx] && d != intent.dst)
      flag(Condition::Proximity, "request node " + std::to_string(i) + " must be in the destination domain, found in " +
                                     std::to_string(d));
  }

  // v) per-domain counts for constrained types that the request uses.
  for (const BoundConstraint& c : intent.constraints) {
    if (!tree.contains_type(c.vnf_type)) continue;
    const auto num = std::count_if(members.begin(), members.end(), [&](NodeId v) {
      return g.node(v).type == c.vnf_type && g.node(v).domain == c.domain;
    });
    if (num < c.min_count || num > c.max_count)
      flag(Condition::DomainCount, "domain " + std::to_string(c.domain) + " hosts " + std::to_string(num) + " " +
                                       std::string(to_string(c.vnf_type)) + ", allowed [" +
                                       std::to_string(c.min_count) + ", " + std::to_string(c.max_count) + "]");
  }
  return report;
}

}  // namespace sfc
