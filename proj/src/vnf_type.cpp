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

#include "sfc/vnf_type.hpp"

namespace sfc {

std::string_view to_string(VnfType t) {
  switch (t) {
    case VnfType::DPI: return "DPI";
    case VnfType::NAT: return "NAT";
    case VnfType::TS: return "TS";
    case VnfType::WANA: return "WANA";
    case VnfType::VPN: return "VPN";
    case VnfType::GATEWAY: return "GW";
  }
  return "?";
}

std::optional<VnfType> parse_service_type(std::string_view name) {
  for (VnfType t : kServiceTypes)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::optional<VnfType> parse_node_type(std::string_view name) {
  if (name == "GW") return VnfType::GATEWAY;
  return parse_service_type(name);
}

int type_code(VnfType t) {
  switch (t) {
    case VnfType::GATEWAY: return 0;
    case VnfType::DPI: return 1;
    case VnfType::NAT: return 2;
    case VnfType::TS: return 3;
    case VnfType::WANA: return 4;
    case VnfType::VPN: return 5;
  }
  return -1;
}

}  // namespace sfc
