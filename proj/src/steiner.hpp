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

// Directed Steiner arborescences over the gateway graph. Internal to the
// solver; domains are 0-based here.

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "sfc/network.hpp"

namespace sfc::detail {

inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max() / 4;

/// All-pairs cheapest directed gateway paths (Floyd-Warshall).
class GatewayMetric {
 public:
  explicit GatewayMetric(const NetworkGraph& g);

  int size() const { return m_; }
  Cost dist(int from, int to) const { return dist_[static_cast<std::size_t>(from * m_ + to)]; }
  /// Domains visited from `from` to `to`, both included. Empty if unreachable.
  std::vector<int> path(int from, int to) const;

 private:
  int m_ = 0;
  std::vector<Cost> dist_;
  std::vector<int> next_;
};

/// Dreyfus-Wagner style dynamic program: the cheapest arborescence rooted at
/// `root` that touches at least one domain of every group. With singleton
/// groups this is the exact directed Steiner arborescence; with larger groups
/// it is a group Steiner tree, used as a relaxation.
class SteinerSolver {
 public:
  explicit SteinerSolver(const GatewayMetric& metric) : metric_(&metric) {}

  /// Groups containing the root are satisfied for free and dropped, as are
  /// groups that contain another group.
  Cost cost(int root, std::vector<std::vector<int>> groups);

  /// Exact arborescence reaching every terminal. Returns the cost and the
  /// selected (from, to) domain arcs, or kUnreachable and no arcs.
  std::pair<Cost, std::vector<std::pair<int, int>>> arborescence(int root, const std::vector<int>& terminals);

 private:
  static std::vector<std::vector<int>> reduce(int root, std::vector<std::vector<int>> groups);
  void run(const std::vector<std::vector<int>>& groups, bool record);
  void unfold(std::uint32_t mask, int v, bool merged, std::vector<std::pair<int, int>>& out) const;

  const GatewayMetric* metric_;
  int terminals_ = 0;
  std::vector<Cost> merged_;  // [mask * m + v], best tree at v whose root merges subtrees
  std::vector<Cost> best_;    // [mask * m + v], best tree rooted at v
  std::vector<std::uint32_t> split_;
  std::vector<int> via_;
};

}  // namespace sfc::detail
