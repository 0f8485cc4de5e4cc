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

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/network.hpp"
#include "sfc/vnf_type.hpp"

namespace sfc {

/// An intent-level service chain request, as received from a user.
/// QoS fields are carried through untouched; they do not influence solving.
struct SfcRequest {
  std::string src;
  std::string dst;
  std::string qos;
  std::string qos_type;
  std::string qos_thr;
  std::int64_t qos_value = 0;
  std::vector<VnfType> vnf_list;
  std::set<VnfType> dup_list;
  std::vector<bool> prox_to_src;
  std::vector<bool> prox_to_dst;

  bool duplicated(VnfType t) const { return dup_list.contains(t); }
  std::size_t size() const { return vnf_list.size(); }

  friend bool operator==(const SfcRequest&, const SfcRequest&) = default;
};

/// (domain, type, min, max): the domain hosts between min and max nodes of
/// the type in any solution that uses the type.
struct DomainConstraint {
  std::string domain;
  VnfType vnf_type = VnfType::DPI;
  int min_count = 0;
  int max_count = 0;

  friend bool operator==(const DomainConstraint&, const DomainConstraint&) = default;
};

struct DomainConstraintSet {
  std::vector<DomainConstraint> constraints;

  bool empty() const { return constraints.empty(); }
  std::size_t size() const { return constraints.size(); }

  friend bool operator==(const DomainConstraintSet&, const DomainConstraintSet&) = default;
};

class IntentError : public std::invalid_argument {
 public:
  enum class Kind {
    MalformedJson,
    SchemaViolation,
    UnknownVnf,
    CardinalityMismatch,
    ProximityConflict,
    LastVnfNotAtDst,
    MinExceedsMax,
    DuplicateConstraint,
    UnknownDomain,
  };

  IntentError(Kind kind, std::string field, const std::string& message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message), kind_(kind), field_(std::move(field)) {}

  Kind kind() const { return kind_; }
  /// Offending field path, e.g. "vnfList[2]" or "[1][3]".
  const std::string& field() const { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

std::string_view to_string(IntentError::Kind k);

/// Parses a request. Masks accept booleans or 0/1 integers.
SfcRequest parse_request(std::string_view json_text);
std::string request_to_json(const SfcRequest& req);

/// Parses a constraint list of [domain, type, min, max] tuples.
DomainConstraintSet parse_domain_constraints(std::string_view json_text);
std::string constraints_to_json(const DomainConstraintSet& cons);

struct BoundConstraint {
  DomainId domain = 0;
  VnfType vnf_type = VnfType::DPI;
  int min_count = 0;
  int max_count = 0;

  friend bool operator==(const BoundConstraint&, const BoundConstraint&) = default;
};

/// A request and constraint set whose domain names are resolved against
/// one network.
struct BoundIntent {
  SfcRequest request;
  DomainId src = 0;
  DomainId dst = 0;
  std::vector<BoundConstraint> constraints;
};

/// Resolves domain names; throws IntentError{UnknownDomain} for names that
/// are absent from `names` or map outside the graph.
BoundIntent bind_request(const SfcRequest& req, const DomainConstraintSet& cons, const NetworkGraph& g,
                         const DomainNameMap& names);

}  // namespace sfc
