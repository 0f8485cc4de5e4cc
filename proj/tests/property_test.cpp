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

#include "sfc/checker.hpp"
#include "sfc/model.hpp"
#include "sfc/oracle.hpp"
#include "sfc/solver.hpp"
#include "support.hpp"

namespace sfc {
namespace {

constexpr Budget kBudget{5000};
constexpr std::uint64_t kSeeds = 150;

SolveOutcome solve(const test::Instance& in, SearchMode mode = SearchMode::Optimal) {
  return solve_instance(in.g, in.intent, mode, kBudget);
}

TEST(Properties, SolverTreesPassTheChecker) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const test::Instance in = test::random_small_instance(5000 + seed);
    for (SearchMode mode : {SearchMode::Optimal, SearchMode::Feasible}) {
      const SolveOutcome out = solve(in, mode);
      ASSERT_NE(out.kind, OutcomeKind::Timeout) << seed;
      if (!out.tree) continue;
      const SatisfactionReport r = check_satisfaction(*out.tree, in.g, in.intent, in.tree);
      EXPECT_TRUE(r.empty()) << "seed " << seed << "\n" << format_report(r);
      EXPECT_EQ(out.cost(), tree_cost(*out.tree));
    }
  }
}

TEST(Properties, FeasibleNeverBeatsOptimal) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const test::Instance in = test::random_small_instance(6000 + seed);
    const SolveOutcome opt = solve(in);
    const SolveOutcome feas = solve(in, SearchMode::Feasible);
    EXPECT_EQ(opt.has_tree(), feas.has_tree()) << seed;
    if (opt.tree && feas.tree) EXPECT_GE(feas.cost(), opt.cost()) << seed;
  }
}

TEST(Properties, AddingAConstraintNeverLowersCost) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const test::Instance in = test::random_small_instance(7000 + seed);
    const SolveOutcome base = solve(in);
    // Forbid the first request type in the destination domain; any tree
    // of the tighter instance is admissible for the looser one.
    DomainConstraintSet tighter = in.constraints;
    const VnfType t = in.request.vnf_list.front();
    const std::string dom = in.request.dst;
    const bool taken = std::any_of(tighter.constraints.begin(), tighter.constraints.end(),
                                   [&](const DomainConstraint& c) { return c.domain == dom && c.vnf_type == t; });
    if (taken) continue;
    tighter.constraints.push_back({dom, t, 0, 0});
    const test::Instance tight = test::make_instance(in.g, in.request, tighter);
    const SolveOutcome constrained = solve(tight);
    if (!base.tree) {
      EXPECT_FALSE(constrained.tree) << seed;
      continue;
    }
    if (constrained.tree) {
      EXPECT_GE(constrained.cost(), base.cost()) << seed;
      EXPECT_TRUE(check_satisfaction(*constrained.tree, in.g, in.intent, in.tree).empty()) << seed;
    }
  }
}

TEST(Properties, SolverIsDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const test::Instance in = test::random_small_instance(8000 + seed);
    const SolveOutcome a = solve(in);
    const SolveOutcome b = solve(in);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.tree, b.tree) << seed;
  }
}

TEST(Properties, OptimalMatchesOracle) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const test::Instance in = test::random_small_instance(9000 + seed);
    const SolveOutcome mine = solve(in);
    const SolveOutcome ref = oracle_optimal(in.g, in.intent, in.tree);
    ASSERT_EQ(mine.has_tree(), ref.has_tree()) << seed;
    if (!ref.tree) continue;
    EXPECT_EQ(mine.cost(), ref.cost()) << seed;
    EXPECT_EQ(mine.tree->assignment, ref.tree->assignment) << seed;
  }
}

TEST(Properties, CompiledDomainsRespectMasks) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const test::Instance in = test::random_small_instance(10000 + seed);
    try {
      const ConstraintModel m = compile(in.g, in.intent, in.tree);
      for (int i = 0; i < m.variable_count(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        for (NodeId v : m.assignment_domain(i)) {
          EXPECT_EQ(in.g.node(v).type, in.request.vnf_list[idx]);
          if (in.request.prox_to_src[idx]) EXPECT_EQ(in.g.node(v).domain, in.intent.src);
          if (in.request.prox_to_dst[idx]) EXPECT_EQ(in.g.node(v).domain, in.intent.dst);
        }
      }
    } catch (const EmptyDomainError&) {
      EXPECT_EQ(oracle_optimal(in.g, in.intent, in.tree).kind, OutcomeKind::Unsat) << seed;
    }
  }
}

}  // namespace
}  // namespace sfc
