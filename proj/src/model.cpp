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

#include "sfc/model.hpp"

#include <algorithm>
#include <map>

namespace sfc {

ConstraintModel compile(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree) {
  ConstraintModel model;
  model.graph_ = &g;
  model.intent_ = intent;
  model.tree_ = tree;

  std::map<std::pair<DomainId, VnfType>, CountBound> merged;
  for (const BoundConstraint& c : intent.constraints) {
    if (!tree.contains_type(c.vnf_type)) continue;
    auto [it, fresh] = merged.try_emplace({c.domain, c.vnf_type}, CountBound{c.domain, c.vnf_type, c.min_count, c.max_count});
    if (!fresh) {
      it->second.min_count = std::max(it->second.min_count, c.min_count);
      it->second.max_count = std::min(it->second.max_count, c.max_count);
    }
  }
  for (const auto& [key, bound] : merged) model.count_bounds_.push_back(bound);

  auto max_for = [&](DomainId d, VnfType t) -> std::optional<int> {
    auto it = merged.find({d, t});
    if (it == merged.end()) return std::nullopt;
    return it->second.max_count;
  };

  const SfcRequest& req = intent.request;
  for (int i = 0; i < tree.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const VnfType t = tree.type(i);
    const bool at_src = idx < req.prox_to_src.size() && req.prox_to_src[idx];
    const bool at_dst = idx < req.prox_to_dst.size() && req.prox_to_dst[idx];
    std::vector<NodeId> candidates;
    for (const Node& v : g.nodes()) {
      if (v.type != t) continue;
      if (at_src && v.domain != intent.src) continue;
      if (at_dst && v.domain != intent.dst) continue;
      if (auto cap = max_for(v.domain, t); cap && *cap == 0) continue;
      candidates.push_back(v.id);
    }
    if (candidates.empty())
      throw EmptyDomainError(i, "request node " + std::to_string(i) + " (" + std::string(to_string(t)) +
                                    ") has no admissible network node");
    model.assignment_domains_.push_back(std::move(candidates));
  }
  return model;
}

}  // namespace sfc
