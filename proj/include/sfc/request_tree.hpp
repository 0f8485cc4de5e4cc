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

#include <string>
#include <utility>
#include <vector>

#include "sfc/intent.hpp"

namespace sfc {

/// Traversal-order tree of a request. Node indices are 0-based positions in
/// vnfList. Nodes without a predecessor hang off an implicit ingress root
/// (kRoot), realized by the source gateway in a solution.
class RequestTree {
 public:
  static constexpr int kRoot = -1;

  RequestTree() = default;
  RequestTree(std::vector<VnfType> types, std::vector<int> parents);

  int size() const { return static_cast<int>(types_.size()); }
  VnfType type(int i) const { return types_.at(static_cast<std::size_t>(i)); }
  const std::vector<VnfType>& types() const { return types_; }
  int parent(int i) const { return parents_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& parents() const { return parents_; }

  /// Arcs (parent, child) between request nodes; root-anchored nodes excluded.
  std::vector<std::pair<int, int>> arcs() const;
  std::vector<int> children(int i) const;
  bool is_leaf(int i) const { return children(i).empty(); }
  bool contains_type(VnfType t) const;

  friend bool operator==(const RequestTree&, const RequestTree&) = default;

 private:
  std::vector<VnfType> types_;
  std::vector<int> parents_;
};

/// parent(j) is the nearest i < j whose type is not duplicated, else kRoot.
RequestTree build_request_tree(const SfcRequest& req);

/// Graphviz rendering for diagnostics.
std::string to_dot(const RequestTree& tree);

}  // namespace sfc
