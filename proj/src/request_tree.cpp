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

#include "sfc/request_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sfc {

RequestTree::RequestTree(std::vector<VnfType> types, std::vector<int> parents)
    : types_(std::move(types)), parents_(std::move(parents)) {
  if (types_.size() != parents_.size()) throw std::invalid_argument("RequestTree: types/parents size mismatch");
  for (std::size_t j = 0; j < parents_.size(); ++j)
    if (parents_[j] != kRoot && (parents_[j] < 0 || parents_[j] >= static_cast<int>(j)))
      throw std::invalid_argument("RequestTree: parent must precede its child");
}

std::vector<std::pair<int, int>> RequestTree::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < size(); ++j)
    if (parent(j) != kRoot) out.emplace_back(parent(j), j);
  return out;
}

std::vector<int> RequestTree::children(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (parent(j) == i) out.push_back(j);
  return out;
}

bool RequestTree::contains_type(VnfType t) const {
  return std::find(types_.begin(), types_.end(), t) != types_.end();
}

RequestTree build_request_tree(const SfcRequest& req) {
  std::vector<int> parents;
  parents.reserve(req.size());
  int last_forwarding = RequestTree::kRoot;
  for (std::size_t j = 0; j < req.size(); ++j) {
    parents.push_back(last_forwarding);
    if (!req.duplicated(req.vnf_list[j])) last_forwarding = static_cast<int>(j);
  }
  return RequestTree(req.vnf_list, std::move(parents));
}

std::string to_dot(const RequestTree& tree) {
  std::ostringstream out;
  out << "digraph request_tree {\n  root [label=\"ingress\", shape=point];\n";
  for (int i = 0; i < tree.size(); ++i) out << "  v" << i << " [label=\"" << to_string(tree.type(i)) << "\"];\n";
  for (int i = 0; i < tree.size(); ++i) {
    if (tree.parent(i) == RequestTree::kRoot) out << "  root -> v" << i << ";\n";
    else out << "  v" << tree.parent(i) << " -> v" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sfc
