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

#include "support.hpp"

#include <algorithm>
#include <random>

namespace sfc::test {

Instance make_instance(NetworkGraph g, const SfcRequest& req, const DomainConstraintSet& cons) {
  Instance in;
  in.g = std::move(g);
  in.request = req;
  in.constraints = cons;
  in.intent = bind_request(req, cons, in.g, decimal_domain_names(in.g));
  in.tree = build_request_tree(req);
  return in;
}

SfcRequest make_request(std::string src, std::string dst, std::vector<VnfType> vnfs, std::set<VnfType> dups,
                        std::vector<bool> prox_src, std::vector<bool> prox_dst) {
  SfcRequest r;
  r.src = std::move(src);
  r.dst = std::move(dst);
  r.qos = "speed";
  r.qos_type = "bandwidth";
  r.qos_thr = "throughput";
  r.qos_value = 90;
  r.vnf_list = std::move(vnfs);
  r.dup_list = std::move(dups);
  r.prox_to_src = std::move(prox_src);
  r.prox_to_dst = std::move(prox_dst);
  return r;
}

NetworkGraph two_domain_vpn() {
  const std::vector<NodeSpec> nodes{
      {VnfType::GATEWAY, 1}, {VnfType::VPN, 1}, {VnfType::GATEWAY, 2}, {VnfType::VPN, 2}};
  return build_network(nodes, {{{1, 2}, 5}, {{2, 1}, 7}});
}

SfcRequest vpn_pair_request() {
  return make_request("1", "2", {VnfType::VPN, VnfType::VPN}, {}, {true, false}, {false, true});
}

NetworkGraph relay_network() {
  const std::vector<NodeSpec> nodes{
      {VnfType::GATEWAY, 1}, {VnfType::VPN, 1}, {VnfType::GATEWAY, 2}, {VnfType::VPN, 2}, {VnfType::GATEWAY, 3}};
  return build_network(nodes, {{{1, 3}, 2}, {{3, 2}, 3}, {{1, 2}, 10}, {{3, 1}, 50}, {{2, 3}, 50}, {{2, 1}, 50}});
}

Instance random_small_instance(std::uint64_t seed, const SmallShape& shape) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

  const int m = chance(0.1) ? 1 : uniform(std::min(2, shape.max_domains), shape.max_domains);
  const int services = uniform(std::max(2 * m, (shape.max_nodes - m) / 2), std::max(2 * m, shape.max_nodes - m));

  // A few types carry most of the network so requests are often placeable.
  std::vector<VnfType> pool(kServiceTypes.begin(), kServiceTypes.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(uniform(2, 3)));
  auto any_type = [&] { return kServiceTypes[static_cast<std::size_t>(uniform(0, 4))]; };
  auto pool_type = [&] { return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))]; };

  std::vector<NodeSpec> nodes;
  for (DomainId d = 1; d <= m; ++d) nodes.push_back({VnfType::GATEWAY, d});
  for (int i = 0; i < services; ++i) nodes.push_back({chance(0.9) ? pool_type() : any_type(), uniform(1, m)});
  std::shuffle(nodes.begin(), nodes.end(), rng);

  InterDomainCosts costs;
  for (DomainId a = 1; a <= m; ++a)
    for (DomainId b = 1; b <= m; ++b)
      if (a != b && chance(0.8)) costs[{a, b}] = uniform(1, 20);
  NetworkGraph g = build_network(nodes, costs);

  const int len = uniform(std::min(2, shape.max_request_len), shape.max_request_len);
  const auto src = uniform(1, m);
  auto dst = src;
  if (m > 1 && !chance(0.1))
    while (dst == src) dst = uniform(1, m);
  std::vector<VnfType> vnfs;
  for (int i = 0; i < len; ++i) vnfs.push_back(chance(0.9) ? pool_type() : any_type());
  std::set<VnfType> dups;
  for (VnfType t : vnfs)
    if (chance(0.3)) dups.insert(t);
  std::vector<bool> ps, pd;
  for (int i = 0; i < len; ++i) {
    if (i == len - 1) {
      ps.push_back(src == dst && chance(0.5));
      pd.push_back(true);
      continue;
    }
    const int r = uniform(0, 9);
    ps.push_back(r < 3);
    pd.push_back(r >= 3 && r < 5);
  }
  SfcRequest req = make_request(std::to_string(src), std::to_string(dst), vnfs, dups, ps, pd);
  req = parse_request(request_to_json(req));

  DomainConstraintSet cons;
  const int k = uniform(0, shape.max_constraints);
  for (int attempt = 0; static_cast<int>(cons.size()) < k && attempt < 20; ++attempt) {
    DomainConstraint c;
    c.domain = std::to_string(uniform(1, m));
    c.vnf_type = chance(0.8) ? vnfs[static_cast<std::size_t>(uniform(0, len - 1))] : any_type();
    c.min_count = chance(0.2) ? 1 : 0;
    c.max_count = c.min_count + uniform(0, 2);
    const bool taken = std::any_of(cons.constraints.begin(), cons.constraints.end(), [&](const DomainConstraint& o) {
      return o.domain == c.domain && o.vnf_type == c.vnf_type;
    });
    if (!taken) cons.constraints.push_back(c);
  }
  cons = parse_domain_constraints(constraints_to_json(cons));
  return make_instance(std::move(g), req, cons);
}

}  // namespace sfc::test
