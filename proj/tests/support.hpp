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
#include <string_view>

#include "sfc/intent.hpp"
#include "sfc/network.hpp"
#include "sfc/request_tree.hpp"

namespace sfc::test {

inline constexpr std::string_view kRequestExample = R"({"src":"s","dst":"d","qos":"speed",
"qos_type":"bandwidth",
"qos_thr":"throughput","qos_value":90,
"vnfList":["DPI","VPN","VPN"],
"dupList":["DPI"],"prox_to_src":[1,1,0],
"prox_to_dst":[0,0,1]})";

inline constexpr std::string_view kConstraintsExample =
    R"([["s","WANA",1,2],["s","VPN",5,10],
["s","DPI",1,1],
["d","VPN",1,1],["d","NAT",1,1]])";

/// Three domains s, other_dom, d; cheap relay through other_dom.
inline constexpr std::string_view kThreeDomainNetwork = R"({"domains": 3, "domain_names": ["s", "other_dom", "d"],
 "nodes": [{"type":"GW","domain":1},{"type":"DPI","domain":1},{"type":"VPN","domain":1},{"type":"WANA","domain":1},
           {"type":"GW","domain":2},{"type":"DPI","domain":2},{"type":"VPN","domain":2},
           {"type":"GW","domain":3},{"type":"VPN","domain":3},{"type":"NAT","domain":3}],
 "links": [{"from_domain":1,"to_domain":2,"cost":3},{"from_domain":2,"to_domain":3,"cost":4},
           {"from_domain":1,"to_domain":3,"cost":10},{"from_domain":3,"to_domain":1,"cost":10},
           {"from_domain":2,"to_domain":1,"cost":3},{"from_domain":3,"to_domain":2,"cost":4}]})";

/// Everything needed to solve or check one instance. The graph is owned here
/// so a ConstraintModel built from it stays valid while the Instance lives.
struct Instance {
  NetworkGraph g;
  SfcRequest request;
  DomainConstraintSet constraints;
  BoundIntent intent;
  RequestTree tree;
};

Instance make_instance(NetworkGraph g, const SfcRequest& req, const DomainConstraintSet& cons);

SfcRequest make_request(std::string src, std::string dst, std::vector<VnfType> vnfs, std::set<VnfType> dups,
                        std::vector<bool> prox_src, std::vector<bool> prox_dst);

/// s=1, d=2, one VPN each, c(s,d)=5, c(d,s)=7. Node ids: g_s 1, VPN 2, g_d 3, VPN 4.
NetworkGraph two_domain_vpn();
/// [VPN, VPN] with masks [1,0] / [0,1] from "1" to "2".
SfcRequest vpn_pair_request();

/// s=1, d=2, x=3 with c(s,x)=2, c(x,d)=3, c(s,d)=10 (and symmetric back
/// arcs at 50). Node ids: g_s 1, VPN 2, g_d 3, VPN 4, g_x 5.
NetworkGraph relay_network();

/// Shape bounds for random_small_instance.
struct SmallShape {
  int max_nodes = 20;
  int max_domains = 5;
  int max_request_len = 4;
  int max_constraints = 2;
};

/// Seeded random instance inside the oracle limits: sparse gateway graph
/// with costs in [1, 20], a request over a few types biased to be present
/// in the network, and up to two constraints. The request always parses.
Instance random_small_instance(std::uint64_t seed, const SmallShape& shape = {});

}  // namespace sfc::test
