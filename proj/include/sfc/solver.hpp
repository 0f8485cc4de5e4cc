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

#include <chrono>

#include "sfc/intent.hpp"
#include "sfc/model.hpp"
#include "sfc/network.hpp"
#include "sfc/solution.hpp"

namespace sfc {

using Budget = std::chrono::milliseconds;

/// Branch and bound over the node assignment with an exact arborescence
/// per assignment.
///
/// Returns Optimal with the cheapest admissible tree; among equally cheap
/// trees the one with the lexicographically smallest assignment vector wins.
/// Returns Unsat when no admissible tree exists, and Timeout (carrying the
/// incumbent, if any) when the budget runs out first. Throws
/// std::invalid_argument for a non-positive budget.
SolveOutcome solve_optimal(const ConstraintModel& model, Budget budget);

/// Same search, stopping at the first admissible tree found.
SolveOutcome solve_feasible(const ConstraintModel& model, Budget budget);

enum class SearchMode { Optimal, Feasible };

/// Builds the request tree, compiles and solves. An empty variable domain at
/// compile time is reported as Unsat.
SolveOutcome solve_instance(const NetworkGraph& g, const BoundIntent& intent, SearchMode mode, Budget budget);

}  // namespace sfc
