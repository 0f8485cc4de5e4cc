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

#include "sfc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>

#include "sfc/checker.hpp"

namespace sfc {

namespace {

struct GatewayTree {
  Cost cost = 0;
  std::vector<Arc> arcs;  // sorted
};

void check_limits(const NetworkGraph& g, const RequestTree& tree, const OracleLimits& limits) {
  if (g.node_count() > limits.max_nodes)
    throw LimitsExceeded("oracle: " + std::to_string(g.node_count()) + " nodes exceed the limit of " +
                         std::to_string(limits.max_nodes));
  if (g.domain_count() > limits.max_domains)
    throw LimitsExceeded("oracle: " + std::to_string(g.domain_count()) + " domains exceed the limit of " +
                         std::to_string(limits.max_domains));
  if (tree.size() > limits.max_request_len)
    throw LimitsExceeded("oracle: request length " + std::to_string(tree.size()) + " exceeds the limit of " +
                         std::to_string(limits.max_request_len));
}

// Every typed, injective, mask-consistent assignment, in lexicographic order.
void for_each_assignment(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree,
                         const std::function<void(const std::vector<NodeId>&)>& visit) {
  const int n = tree.size();
  const SfcRequest& req = intent.request;
  std::vector<std::vector<NodeId>> options(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    for (const Node& v : g.nodes()) {
      if (v.type != tree.type(i)) continue;
      if (idx < req.prox_to_src.size() && req.prox_to_src[idx] && v.domain != intent.src) continue;
      if (idx < req.prox_to_dst.size() && req.prox_to_dst[idx] && v.domain != intent.dst) continue;
      options[idx].push_back(v.id);
    }
  }
  std::vector<NodeId> current(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(g.node_count()) + 1, 0);
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      visit(current);
      return;
    }
    for (NodeId v : options[static_cast<std::size_t>(i)]) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      current[static_cast<std::size_t>(i)] = v;
      place(i + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  place(0);
}

// All arborescences over the gateways of `domains` rooted at the gateway of
// `root`: every non-root gateway picks a parent inside the set, and the
// choice is kept when following parents always ends at the root.
void arborescences_over(const NetworkGraph& g, DomainId root, const std::vector<DomainId>& domains,
                        std::vector<GatewayTree>& out) {
  const std::size_t k = domains.size();
  std::vector<std::size_t> parent(k, 0);
  std::size_t root_pos = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (domains[i] == root) root_pos = i;

  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == k) {
      for (std::size_t s = 0; s < k; ++s) {
        std::size_t at = s;
        std::size_t steps = 0;
        while (at != root_pos && steps <= k) {
          at = parent[at];
          ++steps;
        }
        if (at != root_pos) return;
      }
      GatewayTree tree;
      for (std::size_t s = 0; s < k; ++s) {
        if (s == root_pos) continue;
        const DomainId from = domains[parent[s]];
        const DomainId to = domains[s];
        const Cost c = g.inter_cost(from, to).value();
        tree.arcs.push_back({g.gateway(from), g.gateway(to), c});
        tree.cost += c;
      }
      std::sort(tree.arcs.begin(), tree.arcs.end());
      out.push_back(std::move(tree));
      return;
    }
    if (i == root_pos) {
      choose(i + 1);
      return;
    }
    for (std::size_t p = 0; p < k; ++p) {
      if (p == i || !g.inter_cost(domains[p], domains[i])) continue;
      parent[i] = p;
      choose(i + 1);
    }
  };
  choose(0);
}

class GatewayTreeCache {
 public:
  GatewayTreeCache(const NetworkGraph& g, DomainId root) : g_(g), root_(root) {}

  // Arborescences over every gateway set containing `required` and the
  // root, sorted by (cost, arcs).
  const std::vector<GatewayTree>& covering(std::uint32_t required) {
    required |= bit(root_);
    auto it = cache_.find(required);
    if (it != cache_.end()) return it->second;
    std::vector<GatewayTree> all;
    const std::uint32_t universe = (1u << g_.domain_count()) - 1;
    for (std::uint32_t set = required; set <= universe; set = (set + 1) | required) {
      std::vector<DomainId> domains;
      for (DomainId d = 1; d <= g_.domain_count(); ++d)
        if (set & bit(d)) domains.push_back(d);
      arborescences_over(g_, root_, domains, all);
      if (set == universe) break;
    }
    std::sort(all.begin(), all.end(),
              [](const GatewayTree& a, const GatewayTree& b) { return a.cost < b.cost || (a.cost == b.cost && a.arcs < b.arcs); });
    return cache_.emplace(required, std::move(all)).first->second;
  }

  static std::uint32_t bit(DomainId d) { return 1u << (d - 1); }

 private:
  const NetworkGraph& g_;
  DomainId root_;
  std::map<std::uint32_t, std::vector<GatewayTree>> cache_;
};

SfcTree assemble(const NetworkGraph& g, const std::vector<NodeId>& assignment, const GatewayTree& gateways,
                 DomainId src) {
  SfcTree t;
  t.root = g.gateway(src);
  t.assignment = assignment;
  t.gateway_arcs = gateways.arcs;
  for (NodeId v : assignment) t.intra_arcs.push_back({g.gateway(g.node(v).domain), v, 0});
  std::sort(t.intra_arcs.begin(), t.intra_arcs.end());
  return t;
}

std::uint32_t used_domains(const NetworkGraph& g, const std::vector<NodeId>& assignment) {
  std::uint32_t mask = 0;
  for (NodeId v : assignment) mask |= GatewayTreeCache::bit(g.node(v).domain);
  return mask;
}

// Count bounds straight from the constraint tuples: nodes of the type in the
// domain are exactly the assigned ones, gateways never match a service type.
bool counts_hold(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree,
                 const std::vector<NodeId>& assignment) {
  for (const BoundConstraint& c : intent.constraints) {
    if (!tree.contains_type(c.vnf_type)) continue;
    const auto num = std::count_if(assignment.begin(), assignment.end(), [&](NodeId v) {
      return g.node(v).type == c.vnf_type && g.node(v).domain == c.domain;
    });
    if (num < c.min_count || num > c.max_count) return false;
  }
  return true;
}

}  // namespace

std::vector<ScoredTree> enumerate_admissible(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree,
                                             const OracleLimits& limits) {
  check_limits(g, tree, limits);
  GatewayTreeCache cache(g, intent.src);
  std::vector<ScoredTree> out;
  for_each_assignment(g, intent, tree, [&](const std::vector<NodeId>& assignment) {
    for (const GatewayTree& gw : cache.covering(used_domains(g, assignment))) {
      SfcTree t = assemble(g, assignment, gw, intent.src);
      if (check_satisfaction(t, g, intent, tree).empty()) out.push_back({std::move(t), gw.cost});
    }
  });
  return out;
}

SolveOutcome oracle_optimal(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree,
                            const OracleLimits& limits) {
  check_limits(g, tree, limits);
  const auto start = std::chrono::steady_clock::now();
  GatewayTreeCache cache(g, intent.src);
  std::optional<ScoredTree> best;
  std::uint64_t examined = 0;

  for_each_assignment(g, intent, tree, [&](const std::vector<NodeId>& assignment) {
    if (!counts_hold(g, intent, tree, assignment)) return;
    for (const GatewayTree& gw : cache.covering(used_domains(g, assignment))) {
      // Assignments arrive in lexicographic order, so a later one must be
      // strictly cheaper to win.
      if (best && gw.cost >= best->cost) break;
      ++examined;
      SfcTree t = assemble(g, assignment, gw, intent.src);
      if (!check_satisfaction(t, g, intent, tree).empty()) continue;
      best = ScoredTree{std::move(t), gw.cost};
      break;
    }
  });

  SolveOutcome out;
  out.kind = best ? OutcomeKind::Optimal : OutcomeKind::Unsat;
  if (best) out.tree = std::move(best->tree);
  out.stats.nodes_explored = examined;
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace sfc
