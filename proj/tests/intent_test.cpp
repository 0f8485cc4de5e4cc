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

#include <gtest/gtest.h>

#include <string>

#include "sfc/intent.hpp"
#include "sfc/request_tree.hpp"
#include "support.hpp"

namespace sfc {
namespace {

using Kind = IntentError::Kind;

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

Kind error_kind(const std::string& text) {
  try {
    parse_request(text);
  } catch (const IntentError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return Kind::MalformedJson;
}

TEST(ParseRequest, AcceptsExampleVerbatim) {
  const SfcRequest r = parse_request(test::kRequestExample);
  EXPECT_EQ(r.src, "s");
  EXPECT_EQ(r.dst, "d");
  EXPECT_EQ(r.qos_value, 90);
  EXPECT_EQ(r.vnf_list, (std::vector<VnfType>{VnfType::DPI, VnfType::VPN, VnfType::VPN}));
  EXPECT_EQ(r.dup_list, (std::set<VnfType>{VnfType::DPI}));
  EXPECT_EQ(r.prox_to_src, (std::vector<bool>{true, true, false}));
  EXPECT_EQ(r.prox_to_dst, (std::vector<bool>{false, false, true}));
}

TEST(ParseRequest, UnknownVnf) {
  const std::string text = replace(std::string(test::kRequestExample), R"("vnfList":["DPI","VPN","VPN"])",
                                   R"("vnfList":["FW","VPN","VPN"])");
  try {
    parse_request(text);
    FAIL();
  } catch (const IntentError& e) {
    EXPECT_EQ(e.kind(), Kind::UnknownVnf);
    EXPECT_EQ(e.field(), "vnfList[0]");
    EXPECT_NE(std::string(e.what()).find("FW"), std::string::npos);
  }
}

TEST(ParseRequest, CardinalityMismatch) {
  const std::string text =
      replace(std::string(test::kRequestExample), R"("prox_to_src":[1,1,0])", R"("prox_to_src":[1,1])");
  try {
    parse_request(text);
    FAIL();
  } catch (const IntentError& e) {
    EXPECT_EQ(e.kind(), Kind::CardinalityMismatch);
    EXPECT_EQ(e.field(), "prox_to_src");
  }
}

TEST(ParseRequest, BooleanMasksAccepted) {
  const std::string text = replace(std::string(test::kRequestExample), R"("prox_to_src":[1,1,0])",
                                   R"("prox_to_src":[true,true,false])");
  EXPECT_EQ(parse_request(text), parse_request(test::kRequestExample));
}

TEST(ParseRequest, InvariantViolations) {
  const std::string base(test::kRequestExample);
  EXPECT_EQ(error_kind("{"), Kind::MalformedJson);
  EXPECT_EQ(error_kind(replace(base, R"("qos_value":90)", R"("qos_value":"90")")), Kind::SchemaViolation);
  EXPECT_EQ(error_kind(replace(base, R"("prox_to_dst":[0,0,1])", R"("prox_to_dst":[1,0,1])")),
            Kind::ProximityConflict);
  EXPECT_EQ(error_kind(replace(base, R"("prox_to_dst":[0,0,1])", R"("prox_to_dst":[0,0,0])")),
            Kind::LastVnfNotAtDst);
  EXPECT_EQ(error_kind(replace(base, R"("dupList":["DPI"])", R"("dupList":["NAT"])")), Kind::SchemaViolation);
}

TEST(ParseRequest, BothMasksAllowedWhenSourceIsDestination) {
  std::string text = replace(std::string(test::kRequestExample), R"("dst":"d")", R"("dst":"s")");
  text = replace(text, R"("prox_to_dst":[0,0,1])", R"("prox_to_dst":[1,0,1])");
  EXPECT_NO_THROW(parse_request(text));
}

TEST(ParseRequest, JsonRoundTrip) {
  const SfcRequest r = parse_request(test::kRequestExample);
  EXPECT_EQ(parse_request(request_to_json(r)), r);
}

TEST(ParseConstraints, Example) {
  const DomainConstraintSet c = parse_domain_constraints(test::kConstraintsExample);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c.constraints[0], (DomainConstraint{"s", VnfType::WANA, 1, 2}));
  EXPECT_EQ(c.constraints[4], (DomainConstraint{"d", VnfType::NAT, 1, 1}));
  EXPECT_EQ(parse_domain_constraints(constraints_to_json(c)), c);
}

TEST(ParseConstraints, EmptyAndErrors) {
  EXPECT_TRUE(parse_domain_constraints("[]").empty());
  try {
    parse_domain_constraints(R"([["s","VPN",3,1]])");
    FAIL();
  } catch (const IntentError& e) {
    EXPECT_EQ(e.kind(), Kind::MinExceedsMax);
    EXPECT_NE(std::string(e.what()).find("VPN"), std::string::npos);
  }
  try {
    parse_domain_constraints(R"([["s","VPN",1,1],["s","VPN",0,2]])");
    FAIL();
  } catch (const IntentError& e) {
    EXPECT_EQ(e.kind(), Kind::DuplicateConstraint);
  }
  EXPECT_THROW(parse_domain_constraints(R"([["s","GW",0,1]])"), IntentError);
  EXPECT_THROW(parse_domain_constraints(R"([["s","VPN",-1,1]])"), IntentError);
}

TEST(BindRequest, ResolvesNames) {
  const NetworkDocument doc = parse_network(test::kThreeDomainNetwork);
  const SfcRequest r = parse_request(test::kRequestExample);
  const DomainConstraintSet c = parse_domain_constraints(R"([["other_dom","VPN",1,10],["d","VPN",1,1]])");
  const BoundIntent b = bind_request(r, c, doc.graph, doc.names);
  EXPECT_EQ(b.src, 1);
  EXPECT_EQ(b.dst, 3);
  ASSERT_EQ(b.constraints.size(), 2u);
  EXPECT_EQ(b.constraints[0], (BoundConstraint{2, VnfType::VPN, 1, 10}));
}

TEST(BindRequest, UnknownDomain) {
  const NetworkDocument doc = parse_network(test::kThreeDomainNetwork);
  SfcRequest r = parse_request(test::kRequestExample);
  r.src = "zz";
  try {
    bind_request(r, {}, doc.graph, doc.names);
    FAIL();
  } catch (const IntentError& e) {
    EXPECT_EQ(e.kind(), Kind::UnknownDomain);
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(RequestTree, ExampleOneStructure) {
  const RequestTree t = build_request_tree(parse_request(test::kRequestExample));
  EXPECT_EQ(t.parent(0), RequestTree::kRoot);
  EXPECT_EQ(t.parent(1), RequestTree::kRoot);
  EXPECT_EQ(t.parent(2), 1);
  EXPECT_EQ(t.arcs(), (std::vector<std::pair<int, int>>{{1, 2}}));
}

TEST(RequestTree, DuplicatedSecondNode) {
  // a, b, c, d with b duplicated: (a,b), (a,c), (c,d).
  SfcRequest r = test::make_request("1", "2", {VnfType::DPI, VnfType::NAT, VnfType::TS, VnfType::VPN}, {VnfType::NAT},
                                    {true, false, false, false}, {false, false, false, true});
  const RequestTree t = build_request_tree(r);
  EXPECT_EQ(t.arcs(), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}}));
  EXPECT_EQ(t.parent(0), RequestTree::kRoot);
  EXPECT_TRUE(t.is_leaf(1));
  EXPECT_TRUE(t.is_leaf(3));
}

TEST(RequestTree, SingletonAndPath) {
  const RequestTree one = build_request_tree(test::make_request("1", "1", {VnfType::VPN}, {}, {false}, {true}));
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.parent(0), RequestTree::kRoot);
  EXPECT_TRUE(one.arcs().empty());

  const RequestTree path = build_request_tree(test::make_request(
      "1", "2", {VnfType::DPI, VnfType::NAT, VnfType::VPN}, {}, {false, false, false}, {false, false, true}));
  EXPECT_EQ(path.parents(), (std::vector<int>{RequestTree::kRoot, 0, 1}));
}

TEST(RequestTree, RejectsForwardParents) {
  EXPECT_THROW(RequestTree({VnfType::DPI, VnfType::NAT}, {1, RequestTree::kRoot}), std::invalid_argument);
}

TEST(RequestTree, DotOutputNamesNodes) {
  const std::string dot = to_dot(build_request_tree(parse_request(test::kRequestExample)));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("VPN"), std::string::npos);
}

}  // namespace
}  // namespace sfc
