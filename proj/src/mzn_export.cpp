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

#include "sfc/mzn_export.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace sfc {

namespace {

constexpr int kTypeCount = 5;

constexpr std::string_view kModel = R"(% Service function chain design model.
%
% Type codes: 0 gateway, 1 DPI, 2 NAT, 3 TS, 4 WANA, 5 VPN.
% domain_link_costs holds 0 where no inter-domain arc exists (and on the
% diagonal); real arcs cost at least 1, so 0 means unavailable.
% vnf_arcs rows are (parent, child) request positions; parent 0 stands for
% the implicit root, realized by the gateway of start_domain.

include "globals.mzn";

% Network
int: n_nodes;
int: n_domains;
int: n_node_links;
int: M;
array[1..n_domains, 1..n_domains] of 0..M: domain_link_costs;
array[1..n_node_links, 1..2] of 1..n_nodes: node_links;
array[1..n_nodes, 1..3] of int: nodes;  % id, type code, domain

% Request
int: start_domain;
int: target_domain;
int: n_types;
int: vnflist_size;
int: n_dcons;
array[1..vnflist_size] of 1..n_types: vnflist;
array[1..vnflist_size - 1, 1..2] of 0..vnflist_size: vnf_arcs;
array[1..vnflist_size] of 0..1: proximity_to_source;
array[1..vnflist_size] of 0..1: proximity_to_destination;
array[1..n_dcons, 1..4] of int: domain_constraints;  % domain, type code, min, max

function int: node_domain(int: v) = nodes[v, 3];
function int: node_type(int: v) = nodes[v, 2];
function int: link_cost(int: l) =
  if node_domain(node_links[l, 1]) = node_domain(node_links[l, 2]) then 0
  else domain_link_costs[node_domain(node_links[l, 1]), node_domain(node_links[l, 2])] endif;

int: root = min([v | v in 1..n_nodes where node_type(v) = 0 /\ node_domain(v) = start_domain]);

% Decision variables
array[1..n_node_links] of var bool: link_selected;
array[1..n_nodes] of var bool: node_selected;
array[1..n_domains] of var bool: domain_selected;
array[1..vnflist_size] of var 1..n_nodes: assignment;
array[1..n_nodes] of var 0..n_nodes: depth;

% (a) channeling
constraint forall(l in 1..n_node_links)(
  link_selected[l] -> (node_selected[node_links[l, 1]] /\ node_selected[node_links[l, 2]]));
constraint forall(v in 1..n_nodes)(node_selected[v] -> domain_selected[node_domain(v)]);
constraint forall(d in 1..n_domains)(
  domain_selected[d] -> exists(v in 1..n_nodes where node_domain(v) = d)(node_selected[v]));

% (b) request satisfaction
constraint forall(i in 1..vnflist_size)(
  nodes[assignment[i], 2] = vnflist[i] /\ node_selected[assignment[i]]);
constraint alldifferent(assignment);
constraint forall(v in 1..n_nodes where node_type(v) > 0)(
  node_selected[v] -> exists(i in 1..vnflist_size)(assignment[i] = v));
constraint forall(i in 1..vnflist_size)(
  (proximity_to_source[i] = 1 -> nodes[assignment[i], 3] = start_domain) /\
  (proximity_to_destination[i] = 1 -> nodes[assignment[i], 3] = target_domain));
constraint forall(c in 1..n_dcons where exists(i in 1..vnflist_size)(vnflist[i] = domain_constraints[c, 2]))(
  let {
    var int: placed = sum(v in 1..n_nodes where node_domain(v) = domain_constraints[c, 1]
                                           /\ node_type(v) = domain_constraints[c, 2])(bool2int(node_selected[v]))
  } in domain_constraints[c, 3] <= placed /\ placed <= domain_constraints[c, 4]);

% (c) tree structure: rooted at the source gateway, one parent per selected
% node, depth strictly increasing along links, gateways internal and
% service nodes leaves, some service node in the target domain. Paths
% between leaves of such a tree run through gateways only, which covers
% the request arcs in vnf_arcs.
constraint node_selected[root] /\ depth[root] = 0;
constraint forall(v in 1..n_nodes)(
  sum(l in 1..n_node_links where node_links[l, 2] = v)(bool2int(link_selected[l])) =
    if v = root then 0 else bool2int(node_selected[v]) endif);
constraint forall(l in 1..n_node_links)(
  link_selected[l] -> depth[node_links[l, 2]] = depth[node_links[l, 1]] + 1);
constraint forall(v in 1..n_nodes where node_type(v) = 0)(
  node_selected[v] -> exists(l in 1..n_node_links where node_links[l, 1] = v)(link_selected[l]));
constraint forall(l in 1..n_node_links where node_type(node_links[l, 1]) > 0)(not link_selected[l]);
constraint exists(i in 1..vnflist_size)(nodes[assignment[i], 3] = target_domain);

var 0..M * n_node_links: total_cost = sum(l in 1..n_node_links)(link_cost(l) * bool2int(link_selected[l]));

solve minimize total_cost;

output ["cost = ", show(total_cost), "\nassignment = ", show(assignment), "\n"];
)";

void write_list(std::ostringstream& os, const std::vector<std::int64_t>& values) {
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << ']';
}

void write_2d(std::ostringstream& os, std::string_view name, std::size_t rows, std::size_t cols,
              const std::vector<std::int64_t>& values) {
  os << name << " = array2d(1.." << rows << ", 1.." << cols << ", [";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i % cols == 0) os << (i ? ",\n  " : "\n  ");
    else os << ", ";
    os << values[i];
  }
  os << (values.empty() ? "]);\n" : "\n]);\n");
}

void require_bound(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree) {
  auto in_range = [&](DomainId d) { return d >= 1 && d <= g.domain_count(); };
  if (!in_range(intent.src) || !in_range(intent.dst))
    throw UnboundInput("export: source or destination domain is not bound to the network");
  if (g.gateway(intent.src) == 0) throw UnboundInput("export: source domain has no gateway");
  for (const BoundConstraint& c : intent.constraints)
    if (!in_range(c.domain)) throw UnboundInput("export: constraint domain is not bound to the network");
  if (tree.size() == 0 || tree.types() != intent.request.vnf_list)
    throw UnboundInput("export: request tree does not match the request");
}

}  // namespace

MznInstance export_instance(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree) {
  require_bound(g, intent, tree);
  const auto n = static_cast<std::size_t>(g.node_count());
  const auto m = static_cast<std::size_t>(g.domain_count());
  const auto arcs = g.arcs();
  const auto k = static_cast<std::size_t>(tree.size());
  const SfcRequest& req = intent.request;

  std::ostringstream os;
  os << "n_nodes = " << n << ";\n";
  os << "n_domains = " << m << ";\n";
  os << "n_node_links = " << arcs.size() << ";\n";
  os << "M = " << 1 + g.max_arc_cost() << ";\n";

  std::vector<std::int64_t> costs(m * m, 0);
  for (DomainId a = 1; a <= g.domain_count(); ++a)
    for (DomainId b = 1; b <= g.domain_count(); ++b)
      if (a != b)
        if (auto c = g.inter_cost(a, b)) costs[static_cast<std::size_t>(a - 1) * m + static_cast<std::size_t>(b - 1)] = *c;
  write_2d(os, "domain_link_costs", m, m, costs);

  std::vector<std::int64_t> links;
  for (const Arc& a : arcs) {
    links.push_back(a.from);
    links.push_back(a.to);
  }
  write_2d(os, "node_links", arcs.size(), 2, links);

  std::vector<std::int64_t> rows;
  for (const Node& v : g.nodes()) {
    rows.push_back(v.id);
    rows.push_back(type_code(v.type));
    rows.push_back(v.domain);
  }
  write_2d(os, "nodes", n, 3, rows);

  os << "start_domain = " << intent.src << ";\n";
  os << "target_domain = " << intent.dst << ";\n";
  os << "n_types = " << kTypeCount << ";\n";
  os << "vnflist_size = " << k << ";\n";
  os << "n_dcons = " << intent.constraints.size() << ";\n";

  std::vector<std::int64_t> list;
  for (VnfType t : tree.types()) list.push_back(type_code(t));
  os << "vnflist = ";
  write_list(os, list);
  os << ";\n";

  std::vector<std::int64_t> vnf_arcs;
  for (std::size_t j = 1; j < k; ++j) {
    const int p = tree.parent(static_cast<int>(j));
    vnf_arcs.push_back(p == RequestTree::kRoot ? 0 : p + 1);
    vnf_arcs.push_back(static_cast<std::int64_t>(j) + 1);
  }
  write_2d(os, "vnf_arcs", k - 1, 2, vnf_arcs);

  auto mask = [&](const std::vector<bool>& bits) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(i < bits.size() && bits[i] ? 1 : 0);
    return out;
  };
  os << "proximity_to_source = ";
  write_list(os, mask(req.prox_to_src));
  os << ";\nproximity_to_destination = ";
  write_list(os, mask(req.prox_to_dst));
  os << ";\n";

  std::vector<std::int64_t> dcons;
  for (const BoundConstraint& c : intent.constraints) {
    dcons.push_back(c.domain);
    dcons.push_back(type_code(c.vnf_type));
    dcons.push_back(c.min_count);
    dcons.push_back(c.max_count);
  }
  write_2d(os, "domain_constraints", intent.constraints.size(), 4, dcons);

  return {std::string(kModel), os.str()};
}

std::int64_t DznValue::rows() const {
  if (ranges.empty()) throw std::invalid_argument("dzn: scalar has no rows");
  return std::max<std::int64_t>(0, ranges[0].second - ranges[0].first + 1);
}

std::int64_t DznValue::at(std::int64_t r, std::int64_t c) const {
  if (ranges.size() != 2) throw std::invalid_argument("dzn: not a 2-D array");
  const std::int64_t cols = ranges[1].second - ranges[1].first + 1;
  const std::int64_t idx = (r - ranges[0].first) * cols + (c - ranges[1].first);
  if (r < ranges[0].first || r > ranges[0].second || c < ranges[1].first || c > ranges[1].second)
    throw std::out_of_range("dzn: index out of range");
  return values.at(static_cast<std::size_t>(idx));
}

namespace {

class DznLexer {
 public:
  explicit DznLexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip();
    if (accept("true")) return 1;
    if (accept("false")) return 0;
    std::int64_t v = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::vector<std::int64_t> list() {
    expect("[");
    std::vector<std::int64_t> out;
    if (accept("]")) return out;
    do {
      out.push_back(integer());
    } while (accept(","));
    expect("]");
    return out;
  }

  std::pair<std::int64_t, std::int64_t> range() {
    const std::int64_t lo = integer();
    expect("..");
    return {lo, integer()};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("dzn: " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DznData parse_dzn(std::string_view text) {
  DznLexer lex(text);
  DznData out;
  while (!lex.done()) {
    const std::string name = lex.identifier();
    lex.expect("=");
    DznValue value;
    if (lex.accept("array2d")) {
      lex.expect("(");
      value.ranges.push_back(lex.range());
      lex.expect(",");
      value.ranges.push_back(lex.range());
      lex.expect(",");
      value.values = lex.list();
      lex.expect(")");
      const std::int64_t expected = std::max<std::int64_t>(0, value.ranges[0].second - value.ranges[0].first + 1) *
                                    std::max<std::int64_t>(0, value.ranges[1].second - value.ranges[1].first + 1);
      if (static_cast<std::int64_t>(value.values.size()) != expected)
        lex.fail("array2d of " + name + " has " + std::to_string(value.values.size()) + " entries, expected " +
                 std::to_string(expected));
    } else {
      if (lex.peek('[')) {
        value.values = lex.list();
        value.ranges.push_back({1, static_cast<std::int64_t>(value.values.size())});
      } else {
        value.values.push_back(lex.integer());
      }
    }
    lex.expect(";");
    if (!out.emplace(name, std::move(value)).second) lex.fail("duplicate assignment to " + name);
  }
  return out;
}

}  // namespace sfc
