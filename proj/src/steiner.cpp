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

#include "steiner.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sfc::detail {

GatewayMetric::GatewayMetric(const NetworkGraph& g) : m_(g.domain_count()) {
  const auto cells = static_cast<std::size_t>(m_ * m_);
  dist_.assign(cells, kUnreachable);
  next_.assign(cells, -1);
  for (int a = 0; a < m_; ++a) {
    dist_[static_cast<std::size_t>(a * m_ + a)] = 0;
    next_[static_cast<std::size_t>(a * m_ + a)] = a;
    for (int b = 0; b < m_; ++b) {
      if (a == b) continue;
      if (auto c = g.inter_cost(a + 1, b + 1)) {
        dist_[static_cast<std::size_t>(a * m_ + b)] = *c;
        next_[static_cast<std::size_t>(a * m_ + b)] = b;
      }
    }
  }
  for (int k = 0; k < m_; ++k)
    for (int i = 0; i < m_; ++i) {
      const Cost ik = dist_[static_cast<std::size_t>(i * m_ + k)];
      if (ik >= kUnreachable) continue;
      for (int j = 0; j < m_; ++j) {
        const Cost through = ik + dist_[static_cast<std::size_t>(k * m_ + j)];
        Cost& direct = dist_[static_cast<std::size_t>(i * m_ + j)];
        if (through < direct) {
          direct = through;
          next_[static_cast<std::size_t>(i * m_ + j)] = next_[static_cast<std::size_t>(i * m_ + k)];
        }
      }
    }
}

std::vector<int> GatewayMetric::path(int from, int to) const {
  if (dist(from, to) >= kUnreachable) return {};
  std::vector<int> out{from};
  while (from != to) {
    from = next_[static_cast<std::size_t>(from * m_ + to)];
    out.push_back(from);
  }
  return out;
}

std::vector<std::vector<int>> SteinerSolver::reduce(int root, std::vector<std::vector<int>> groups) {
  for (auto& grp : groups) {
    std::sort(grp.begin(), grp.end());
    grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  std::vector<std::vector<int>> kept;
  for (auto& grp : groups) {
    if (std::binary_search(grp.begin(), grp.end(), root)) continue;
    const bool implied = std::any_of(kept.begin(), kept.end(), [&](const std::vector<int>& k) {
      return std::includes(grp.begin(), grp.end(), k.begin(), k.end());
    });
    if (!implied) kept.push_back(std::move(grp));
  }
  return kept;
}

void SteinerSolver::run(const std::vector<std::vector<int>>& groups, bool record) {
  const int m = metric_->size();
  terminals_ = static_cast<int>(groups.size());
  const std::uint32_t full = (1u << terminals_) - 1;
  const std::size_t cells = static_cast<std::size_t>(full + 1) * static_cast<std::size_t>(m);
  merged_.assign(cells, kUnreachable);
  best_.assign(cells, kUnreachable);
  if (record) {
    split_.assign(cells, 0);
    via_.assign(cells, -1);
  }
  auto at = [m](std::uint32_t mask, int v) { return static_cast<std::size_t>(mask) * static_cast<std::size_t>(m) + static_cast<std::size_t>(v); };

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::has_single_bit(mask)) {
      const auto j = static_cast<std::size_t>(std::countr_zero(mask));
      for (int v : groups[j]) merged_[at(mask, v)] = 0;
    } else {
      const std::uint32_t low = mask & (~mask + 1);
      for (int v = 0; v < m; ++v) {
        Cost best = kUnreachable;
        std::uint32_t choice = 0;
        for (std::uint32_t s = (mask - 1) & mask; s > 0; s = (s - 1) & mask) {
          if (!(s & low)) continue;
          const Cost c = best_[at(s, v)] + best_[at(mask ^ s, v)];
          if (c < best) {
            best = c;
            choice = s;
          }
        }
        merged_[at(mask, v)] = std::min(best, kUnreachable);
        if (record) split_[at(mask, v)] = choice;
      }
    }
    for (int v = 0; v < m; ++v) {
      Cost best = kUnreachable;
      int choice = -1;
      for (int u = 0; u < m; ++u) {
        const Cost mu = merged_[at(mask, u)];
        if (mu >= kUnreachable) continue;
        const Cost c = metric_->dist(v, u) + mu;
        if (c < best) {
          best = c;
          choice = u;
        }
      }
      best_[at(mask, v)] = std::min(best, kUnreachable);
      if (record) via_[at(mask, v)] = choice;
    }
  }
}

Cost SteinerSolver::cost(int root, std::vector<std::vector<int>> groups) {
  const auto reduced = reduce(root, std::move(groups));
  if (reduced.empty()) return 0;
  run(reduced, false);
  return best_[static_cast<std::size_t>((1u << reduced.size()) - 1) * static_cast<std::size_t>(metric_->size()) +
               static_cast<std::size_t>(root)];
}

void SteinerSolver::unfold(std::uint32_t mask, int v, bool merged, std::vector<std::pair<int, int>>& out) const {
  const auto m = static_cast<std::size_t>(metric_->size());
  const std::size_t cell = static_cast<std::size_t>(mask) * m + static_cast<std::size_t>(v);
  if (!merged) {
    const int u = via_[cell];
    const auto hops = metric_->path(v, u);
    for (std::size_t h = 1; h < hops.size(); ++h) out.emplace_back(hops[h - 1], hops[h]);
    unfold(mask, u, true, out);
    return;
  }
  if (std::has_single_bit(mask)) return;
  const std::uint32_t s = split_[cell];
  unfold(s, v, false, out);
  unfold(mask ^ s, v, false, out);
}

std::pair<Cost, std::vector<std::pair<int, int>>> SteinerSolver::arborescence(int root,
                                                                              const std::vector<int>& terminals) {
  std::vector<std::vector<int>> groups;
  for (int t : terminals) groups.push_back({t});
  const auto reduced = reduce(root, std::move(groups));
  if (reduced.empty()) return {0, {}};
  run(reduced, true);
  const std::uint32_t full = (1u << reduced.size()) - 1;
  const Cost total = best_[static_cast<std::size_t>(full) * static_cast<std::size_t>(metric_->size()) +
                           static_cast<std::size_t>(root)];
  if (total >= kUnreachable) return {kUnreachable, {}};
  std::vector<std::pair<int, int>> arcs;
  unfold(full, root, false, arcs);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return {total, std::move(arcs)};
}

}  // namespace sfc::detail
