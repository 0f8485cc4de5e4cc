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

#include "sfc/intent.hpp"

#include <algorithm>

#include <json.hpp>

namespace sfc {

using nlohmann::json;

std::string_view to_string(IntentError::Kind k) {
  switch (k) {
    case IntentError::Kind::MalformedJson: return "MalformedJson";
    case IntentError::Kind::SchemaViolation: return "SchemaViolation";
    case IntentError::Kind::UnknownVnf: return "UnknownVnf";
    case IntentError::Kind::CardinalityMismatch: return "CardinalityMismatch";
    case IntentError::Kind::ProximityConflict: return "ProximityConflict";
    case IntentError::Kind::LastVnfNotAtDst: return "LastVnfNotAtDst";
    case IntentError::Kind::MinExceedsMax: return "MinExceedsMax";
    case IntentError::Kind::DuplicateConstraint: return "DuplicateConstraint";
    case IntentError::Kind::UnknownDomain: return "UnknownDomain";
  }
  return "?";
}

namespace {

using Kind = IntentError::Kind;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IntentError(Kind::MalformedJson, "", e.what());
  }
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw IntentError(Kind::SchemaViolation, key, "missing required field");
  return *it;
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) throw IntentError(Kind::SchemaViolation, key, "must be a string");
  return v.get<std::string>();
}

VnfType service_type(const json& v, const std::string& where) {
  if (!v.is_string()) throw IntentError(Kind::SchemaViolation, where, "must be a string");
  const auto name = v.get<std::string>();
  auto t = parse_service_type(name);
  if (!t) throw IntentError(Kind::UnknownVnf, where, "unknown VNF \"" + name + "\"");
  return *t;
}

std::vector<VnfType> type_list(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) throw IntentError(Kind::SchemaViolation, key, "must be an array");
  std::vector<VnfType> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(service_type(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<bool> mask(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) throw IntentError(Kind::SchemaViolation, key, "must be an array");
  std::vector<bool> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& e = v[i];
    if (e.is_boolean()) {
      out.push_back(e.get<bool>());
    } else if (e.is_number_integer() && (e.get<std::int64_t>() == 0 || e.get<std::int64_t>() == 1)) {
      out.push_back(e.get<std::int64_t>() == 1);
    } else {
      throw IntentError(Kind::SchemaViolation, std::string(key) + "[" + std::to_string(i) + "]",
                        "must be a boolean or 0/1");
    }
  }
  return out;
}

json mask_json(const std::vector<bool>& m) {
  json out = json::array();
  for (bool b : m) out.push_back(b ? 1 : 0);
  return out;
}

}  // namespace

SfcRequest parse_request(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw IntentError(Kind::SchemaViolation, "", "request must be a JSON object");

  SfcRequest req;
  req.src = string_field(doc, "src");
  req.dst = string_field(doc, "dst");
  req.qos = string_field(doc, "qos");
  req.qos_type = string_field(doc, "qos_type");
  req.qos_thr = string_field(doc, "qos_thr");
  const json& value = field(doc, "qos_value");
  if (!value.is_number_integer()) throw IntentError(Kind::SchemaViolation, "qos_value", "must be an integer");
  req.qos_value = value.get<std::int64_t>();

  req.vnf_list = type_list(doc, "vnfList");
  for (VnfType t : type_list(doc, "dupList")) req.dup_list.insert(t);
  req.prox_to_src = mask(doc, "prox_to_src");
  req.prox_to_dst = mask(doc, "prox_to_dst");

  const std::size_t n = req.vnf_list.size();
  if (n == 0) throw IntentError(Kind::SchemaViolation, "vnfList", "must name at least one VNF");
  if (req.prox_to_src.size() != n)
    throw IntentError(Kind::CardinalityMismatch, "prox_to_src",
                      "expected " + std::to_string(n) + " entries, got " + std::to_string(req.prox_to_src.size()));
  if (req.prox_to_dst.size() != n)
    throw IntentError(Kind::CardinalityMismatch, "prox_to_dst",
                      "expected " + std::to_string(n) + " entries, got " + std::to_string(req.prox_to_dst.size()));

  if (req.src != req.dst) {
    for (std::size_t i = 0; i < n; ++i)
      if (req.prox_to_src[i] && req.prox_to_dst[i])
        throw IntentError(Kind::ProximityConflict, "prox_to_src[" + std::to_string(i) + "]",
                          "VNF is pinned to both the source and the destination domain");
  }
  for (VnfType t : req.dup_list) {
    if (std::find(req.vnf_list.begin(), req.vnf_list.end(), t) == req.vnf_list.end())
      throw IntentError(Kind::SchemaViolation, "dupList",
                        "type " + std::string(to_string(t)) + " does not occur in vnfList");
  }
  if (!req.prox_to_dst.back())
    throw IntentError(Kind::LastVnfNotAtDst, "prox_to_dst[" + std::to_string(n - 1) + "]",
                      "the last VNF must be located in the destination domain");
  return req;
}

std::string request_to_json(const SfcRequest& req) {
  json doc;
  doc["src"] = req.src;
  doc["dst"] = req.dst;
  doc["qos"] = req.qos;
  doc["qos_type"] = req.qos_type;
  doc["qos_thr"] = req.qos_thr;
  doc["qos_value"] = req.qos_value;
  json vnfs = json::array();
  for (VnfType t : req.vnf_list) vnfs.push_back(std::string(to_string(t)));
  doc["vnfList"] = std::move(vnfs);
  json dups = json::array();
  for (VnfType t : req.dup_list) dups.push_back(std::string(to_string(t)));
  doc["dupList"] = std::move(dups);
  doc["prox_to_src"] = mask_json(req.prox_to_src);
  doc["prox_to_dst"] = mask_json(req.prox_to_dst);
  return doc.dump();
}

DomainConstraintSet parse_domain_constraints(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_array()) throw IntentError(Kind::SchemaViolation, "", "constraints must be a JSON array");

  DomainConstraintSet out;
  std::set<std::pair<std::string, VnfType>> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& tuple = doc[i];
    const std::string at = "[" + std::to_string(i) + "]";
    if (!tuple.is_array() || tuple.size() != 4)
      throw IntentError(Kind::SchemaViolation, at, "must be a [domain, type, min, max] tuple");
    if (!tuple[0].is_string()) throw IntentError(Kind::SchemaViolation, at + "[0]", "domain must be a string");
    DomainConstraint c;
    c.domain = tuple[0].get<std::string>();
    c.vnf_type = service_type(tuple[1], at + "[1]");
    for (int k : {2, 3}) {
      const json& v = tuple[static_cast<std::size_t>(k)];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw IntentError(Kind::SchemaViolation, at + "[" + std::to_string(k) + "]", "must be a non-negative integer");
    }
    c.min_count = tuple[2].get<int>();
    c.max_count = tuple[3].get<int>();
    const std::string label = "(\"" + c.domain + "\", " + std::string(to_string(c.vnf_type)) + ")";
    if (c.min_count > c.max_count)
      throw IntentError(Kind::MinExceedsMax, at,
                        "min " + std::to_string(c.min_count) + " exceeds max " + std::to_string(c.max_count) + " for " +
                            label);
    if (!seen.emplace(c.domain, c.vnf_type).second)
      throw IntentError(Kind::DuplicateConstraint, at, "second constraint for " + label);
    out.constraints.push_back(std::move(c));
  }
  return out;
}

std::string constraints_to_json(const DomainConstraintSet& cons) {
  json doc = json::array();
  for (const auto& c : cons.constraints)
    doc.push_back(json::array({c.domain, std::string(to_string(c.vnf_type)), c.min_count, c.max_count}));
  return doc.dump();
}

BoundIntent bind_request(const SfcRequest& req, const DomainConstraintSet& cons, const NetworkGraph& g,
                         const DomainNameMap& names) {
  auto resolve = [&](const std::string& name, const std::string& where) {
    auto it = names.find(name);
    if (it == names.end() || it->second < 1 || it->second > g.domain_count())
      throw IntentError(Kind::UnknownDomain, where, "unknown domain \"" + name + "\"");
    return it->second;
  };

  BoundIntent out;
  out.request = req;
  out.src = resolve(req.src, "src");
  out.dst = resolve(req.dst, "dst");
  for (std::size_t i = 0; i < cons.constraints.size(); ++i) {
    const auto& c = cons.constraints[i];
    out.constraints.push_back(
        {resolve(c.domain, "[" + std::to_string(i) + "][0]"), c.vnf_type, c.min_count, c.max_count});
  }
  return out;
}

}  // namespace sfc
