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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace sfc {

/// Functionality offered by a network node. Gateways provide inter-domain
/// connectivity and never appear in a user request.
enum class VnfType { DPI, NAT, TS, WANA, VPN, GATEWAY };

/// The five request-facing types, in wire enum order.
inline constexpr std::array<VnfType, 5> kServiceTypes = {
    VnfType::DPI, VnfType::NAT, VnfType::TS, VnfType::WANA, VnfType::VPN};

std::string_view to_string(VnfType t);

/// Parses a request-facing VNF name ("DPI", "NAT", "TS", "WANA", "VPN").
/// Gateway names are rejected here; network files use parse_node_type.
std::optional<VnfType> parse_service_type(std::string_view name);

/// Parses a node type in a network file: the five service types or "GW".
std::optional<VnfType> parse_node_type(std::string_view name);

/// Integer code used by the constraint-model export: 0 for gateways,
/// 1..5 for the service types in wire order.
int type_code(VnfType t);

inline bool is_gateway(VnfType t) { return t == VnfType::GATEWAY; }

}  // namespace sfc
