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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sfc/checker.hpp"
#include "sfc/oracle.hpp"
#include "support.hpp"

namespace sfc {
namespace {

TEST(Oracle, TwoDomainPairHasOneTree) {
  const test::Instance in = test::make_instance(test::two_domain_vpn(), test::vpn_pair_request(), {});
  const auto all = enumerate_admissible(in.g, in.intent, in.tree);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].cost, 5);
  EXPECT_EQ(all[0].tree.gateway_arcs, (std::vector<Arc>{{1, 3, 5}}));
}

TEST(Oracle, RelayIsCheapest) {
  const test::Instance in = test::make_instance(test::relay_network(), test::vpn_pair_request(), {});
  const SolveOutcome out = oracle_optimal(in.g, in.intent, in.tree);
  ASSERT_EQ(out.kind, OutcomeKind::Optimal);
  EXPECT_EQ(out.cost(), 5);
  EXPECT_EQ(out.tree->gateway_arcs, (std::vector<Arc>{{1, 5, 2}, {5, 3, 3}}));
  // Both the relay tree and the direct tree are admissible.
  EXPECT_EQ(enumerate_admissible(in.g, in.intent, in.tree).size(), 2u);
}

TEST(Oracle, DirectArcWhenCheapest) {
  const std::vector<NodeSpec> nodes{
      {VnfType::GATEWAY, 1}, {VnfType::VPN, 1}, {VnfType::GATEWAY, 2}, {VnfType::VPN, 2}, {VnfType::GATEWAY, 3}};
  const NetworkGraph g = build_network(nodes, {{{1, 3}, 4}, {{3, 2}, 4}, {{1, 2}, 6}});
  const test::Instance in = test::make_instance(g, test::vpn_pair_request(), {});
  const SolveOutcome out = oracle_optimal(in.g, in.intent, in.tree);
  ASSERT_TRUE(out.tree);
  EXPECT_EQ(out.tree->gateway_arcs, (std::vector<Arc>{{1, 3, 6}}));
}

TEST(Oracle, UnsatGivesEmptyList) {
  DomainConstraintSet c;
  c.constraints.push_back({"2", VnfType::VPN, 0, 0});
  const test::Instance in = test::make_instance(test::two_domain_vpn(), test::vpn_pair_request(), c);
  EXPECT_TRUE(enumerate_admissible(in.g, in.intent, in.tree).empty());
  EXPECT_EQ(oracle_optimal(in.g, in.intent, in.tree).kind, OutcomeKind::Unsat);
}

TEST(Oracle, SingleDomainSingleVnf) {
  const NetworkGraph g = build_network(std::vector<NodeSpec>{{VnfType::GATEWAY, 1}, {VnfType::DPI, 1}}, {});
  const test::Instance in =
      test::make_instance(g, test::make_request("1", "1", {VnfType::DPI}, {}, {true}, {true}), {});
  const auto all = enumerate_admissible(in.g, in.intent, in.tree);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].cost, 0);
}

TEST(Oracle, RefusesLargeInstances) {
  std::vector<NodeSpec> nodes{{VnfType::GATEWAY, 1}};
  for (int i = 0; i < 25; ++i) nodes.push_back({VnfType::VPN, 1});
  const NetworkGraph g = build_network(nodes, {});
  const test::Instance in =
      test::make_instance(g, test::make_request("1", "1", {VnfType::VPN}, {}, {false}, {true}), {});
  EXPECT_THROW(enumerate_admissible(in.g, in.intent, in.tree), LimitsExceeded);
  EXPECT_THROW(oracle_optimal(in.g, in.intent, in.tree), LimitsExceeded);
  OracleLimits wide;
  wide.max_nodes = 30;
  EXPECT_EQ(oracle_optimal(in.g, in.intent, in.tree, wide).kind, OutcomeKind::Optimal);
}

TEST(Oracle, EnumerationIsSoundAndDuplicateFree) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const test::Instance in = test::random_small_instance(seed);
    const auto all = enumerate_admissible(in.g, in.intent, in.tree);
    std::set<std::pair<std::vector<NodeId>, std::vector<Arc>>> seen;
    for (const ScoredTree& s : all) {
      EXPECT_TRUE(check_satisfaction(s.tree, in.g, in.intent, in.tree).empty()) << seed;
      EXPECT_EQ(s.cost, tree_cost(s.tree));
      EXPECT_TRUE(seen.insert({s.tree.assignment, s.tree.all_arcs()}).second) << "duplicate, seed " << seed;
    }
    const SolveOutcome best = oracle_optimal(in.g, in.intent, in.tree);
    EXPECT_EQ(best.has_tree(), !all.empty()) << seed;
    if (!best.tree) continue;
    const auto cheapest = std::min_element(all.begin(), all.end(), [](const ScoredTree& a, const ScoredTree& b) {
      return a.cost < b.cost || (a.cost == b.cost && a.tree.assignment < b.tree.assignment);
    });
    EXPECT_EQ(best.cost(), cheapest->cost) << seed;
    EXPECT_EQ(best.tree->assignment, cheapest->tree.assignment) << seed;
  }
}

}  // namespace
}  // namespace sfc
