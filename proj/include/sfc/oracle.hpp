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

#include <stdexcept>
#include <vector>

#include "sfc/intent.hpp"
#include "sfc/network.hpp"
#include "sfc/request_tree.hpp"
#include "sfc/solution.hpp"

namespace sfc {

/// Exhaustive reference solver for small instances. Shares nothing with the
/// branch-and-bound solver except the satisfaction checker.
struct OracleLimits {
  int max_nodes = 20;
  int max_domains = 6;
  int max_request_len = 5;
};

class LimitsExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScoredTree {
  SfcTree tree;
  Cost cost = 0;
};

/// Every admissible tree: each injective typed assignment combined with each
/// arborescence rooted at the source gateway over every gateway set that
/// covers the used domains, filtered through check_satisfaction.
std::vector<ScoredTree> enumerate_admissible(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree,
                                             const OracleLimits& limits = {});

/// Cheapest admissible tree; ties go to the smallest assignment vector, then
/// the smallest sorted arc list. Returns Optimal or Unsat.
SolveOutcome oracle_optimal(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree,
                            const OracleLimits& limits = {});

}  // namespace sfc
