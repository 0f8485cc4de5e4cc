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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfc/intent.hpp"
#include "sfc/network.hpp"
#include "sfc/request_tree.hpp"

namespace sfc {

/// A MiniZinc model and its data file.
struct MznInstance {
  std::string model_text;
  std::string data_text;
};

/// Thrown when the intent does not refer to the given graph (unresolved
/// domains, a request tree of the wrong shape, missing gateways).
class UnboundInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Emits the model and the instance data. Type codes: gateway 0, DPI 1,
/// NAT 2, TS 3, WANA 4, VPN 5. Output is a pure function of the input.
MznInstance export_instance(const NetworkGraph& g, const BoundIntent& intent, const RequestTree& tree);

/// One assigned parameter of a data file. Scalars have no ranges; 1-D
/// literals get the range 1..size.
struct DznValue {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  std::vector<std::int64_t> values;

  bool is_scalar() const { return ranges.empty(); }
  std::int64_t scalar() const { return values.at(0); }
  /// Number of rows of a 2-D array (size of the first range).
  std::int64_t rows() const;
  /// Entry (r, c) of a 2-D array using the declared index ranges.
  std::int64_t at(std::int64_t r, std::int64_t c) const;

  friend bool operator==(const DznValue&, const DznValue&) = default;
};

using DznData = std::map<std::string, DznValue, std::less<>>;

/// Minimal reader for the data files written by export_instance: integer
/// scalars, integer and boolean lists, and array2d(a..b, c..d, [...]).
/// Throws std::invalid_argument on anything else.
DznData parse_dzn(std::string_view text);

}  // namespace sfc
