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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfc/intent.hpp"
#include "sfc/network.hpp"
#include "sfc/request_tree.hpp"

namespace sfc {

/// Effective count bounds for one (domain, type) pair after merging every
/// constraint that names it. Only types present in the request are kept.
struct CountBound {
  DomainId domain = 0;
  VnfType type = VnfType::DPI;
  int min_count = 0;
  int max_count = 0;
};

/// Thrown by compile() when a decision variable has no value left, i.e. the
/// instance is trivially unsatisfiable.
class EmptyDomainError : public std::runtime_error {
 public:
  EmptyDomainError(int variable, const std::string& what) : std::runtime_error(what), variable_(variable) {}
  /// Request node whose assignment domain is empty.
  int variable() const { return variable_; }

 private:
  int variable_;
};

/// Finite-domain model of one design instance.
///
/// Decision variables:
///   - link_selection: one boolean per network arc (index into graph().arcs()),
///   - node_assignment: one variable per request node over the network nodes
///     of the same type that survive proximity masks and zero maxima.
/// Domain and node selection are channeled from the links: a selected arc
/// selects its endpoints, a selected node selects its domain.
///
/// Constraint groups:
///   - channeling between links, nodes and domains,
///   - request satisfaction: typed injective assignment, masks, count bounds,
///   - tree structure: source-gateway root, single parent per selected node,
///     acyclic, gateway-only internal nodes, a destination leaf.
///
/// The model keeps a pointer to the graph; the graph must outlive it.
class ConstraintModel {
 public:
  const NetworkGraph& graph() const { return *graph_; }
  const BoundIntent& intent() const { return intent_; }
  const RequestTree& request_tree() const { return tree_; }

  DomainId source_domain() const { return intent_.src; }
  DomainId target_domain() const { return intent_.dst; }
  std::size_t link_count() const { return graph_->arcs().size(); }
  int variable_count() const { return static_cast<int>(assignment_domains_.size()); }

  /// Candidate nodes for request node i, ascending.
  const std::vector<NodeId>& assignment_domain(int i) const {
    return assignment_domains_.at(static_cast<std::size_t>(i));
  }
  const std::vector<CountBound>& count_bounds() const { return count_bounds_; }

 private:
  friend ConstraintModel compile(const NetworkGraph&, const BoundIntent&, const RequestTree&);

  const NetworkGraph* graph_ = nullptr;
  BoundIntent intent_;
  RequestTree tree_;
  std::vector<std::vector<NodeId>> assignment_domains_;
  std::vector<CountBound> count_bounds_;
};

/// Builds the model; throws EmptyDomainError when a request node has no
/// candidate node at all.
ConstraintModel compile(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree);

}  // namespace sfc
