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

#include "sfc/solution.hpp"

#include <stdexcept>

#include <json.hpp>

namespace sfc {

using nlohmann::json;

std::vector<Arc> SfcTree::all_arcs() const {
  std::vector<Arc> out = gateway_arcs;
  out.insert(out.end(), intra_arcs.begin(), intra_arcs.end());
  return out;
}

Cost tree_cost(const SfcTree& t) {
  Cost total = 0;
  for (const Arc& a : t.gateway_arcs) total += a.cost;
  for (const Arc& a : t.intra_arcs) total += a.cost;
  return total;
}

std::string_view to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Optimal: return "optimal";
    case OutcomeKind::Feasible: return "feasible";
    case OutcomeKind::Unsat: return "unsat";
    case OutcomeKind::Timeout: return "timeout";
  }
  return "?";
}

std::optional<Cost> SolveOutcome::cost() const {
  if (!tree) return std::nullopt;
  return tree_cost(*tree);
}

namespace {

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({{"from", a.from}, {"to", a.to}, {"cost", a.cost}});
  return out;
}

std::vector<Arc> arcs_from(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) return {};
  if (!it->is_array()) throw std::invalid_argument(std::string("solution: \"") + key + "\" must be an array");
  std::vector<Arc> out;
  for (const json& a : *it) {
    if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a.contains("cost") ||
        !a["from"].is_number_integer() || !a["to"].is_number_integer() || !a["cost"].is_number_integer())
      throw std::invalid_argument(std::string("solution: malformed arc in \"") + key + "\"");
    out.push_back({a["from"].get<NodeId>(), a["to"].get<NodeId>(), a["cost"].get<Cost>()});
  }
  return out;
}

}  // namespace

std::string outcome_to_json(const SolveOutcome& outcome, bool include_statistics) {
  json doc;
  doc["outcome"] = std::string(to_string(outcome.kind));
  if (outcome.tree) {
    const SfcTree& t = *outcome.tree;
    doc["cost"] = tree_cost(t);
    doc["root"] = t.root;
    doc["assignment"] = t.assignment;
    doc["gateway_arcs"] = arcs_json(t.gateway_arcs);
    doc["intra_arcs"] = arcs_json(t.intra_arcs);
  }
  if (include_statistics)
    doc["statistics"] = {{"nodes_explored", outcome.stats.nodes_explored}, {"wall_ms", outcome.stats.wall_ms}};
  return doc.dump(2);
}

SfcTree tree_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("solution: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("solution: top level must be an object");
  if (!doc.contains("root") || !doc["root"].is_number_integer())
    throw std::invalid_argument("solution: no tree (missing integer \"root\")");
  if (!doc.contains("assignment") || !doc["assignment"].is_array())
    throw std::invalid_argument("solution: \"assignment\" must be an array");

  SfcTree t;
  t.root = doc["root"].get<NodeId>();
  for (const json& v : doc["assignment"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("solution: assignment entries must be integers");
    t.assignment.push_back(v.get<NodeId>());
  }
  t.gateway_arcs = arcs_from(doc, "gateway_arcs");
  t.intra_arcs = arcs_from(doc, "intra_arcs");
  return t;
}

}  // namespace sfc
