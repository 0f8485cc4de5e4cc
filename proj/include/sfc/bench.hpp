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
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sfc/intent.hpp"
#include "sfc/network.hpp"
#include "sfc/solution.hpp"
#include "sfc/solver.hpp"

namespace sfc {

/// One random topology: n nodes over m domains, reproducible from seed.
struct ScenarioSpec {
  int n_nodes = 0;
  int n_domains = 0;
  std::uint64_t seed = 0;
};

class InvalidDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dimension {
  int nodes = 0;
  int domains = 0;

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

struct BenchConfig {
  std::vector<Dimension> dimensions{{300, 10}};
  int scenarios_per_dimension = 10;
  int requests_per_scenario = 10;
  int constraints_per_request = 2;
  Budget cutoff{5000};
  std::uint64_t master_seed = 20190603;
};

/// Throws std::invalid_argument unless every count is at least 1, the
/// cutoff is positive and each dimension has n/m > 2.
void validate(const BenchConfig& cfg);

/// Reads
///   {"dimensions": [{"nodes": 300, "domains": 10}], "scenarios_per_dimension": 10,
///    "requests_per_scenario": 10, "constraints_per_request": 2,
///    "cutoff_ms": 5000, "master_seed": 1}
/// Absent keys keep their defaults. Throws std::invalid_argument on malformed
/// or invalid configurations, including an empty dimension list.
BenchConfig parse_bench_config(std::string_view json_text);

/// Child seed `index` of `parent`; used for master -> dimension -> scenario
/// -> request derivation.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// m gateways at random positions (one per domain), every other node a
/// uniform service type in a uniform domain, and a complete gateway graph
/// with costs uniform in [1, 100]. Domains are named by their decimal id.
/// Throws InvalidDimension unless n > 2m and m >= 1.
NetworkGraph generate_scenario(const ScenarioSpec& spec);

struct GeneratedRequest {
  SfcRequest request;
  DomainConstraintSet constraints;
};

/// Random request over the domains of g: src != dst when g has two or more
/// domains, 2 to 5 VNFs of uniform type, each listed type duplicated with
/// probability 0.25, masks drawn per position (source 0.3, destination 0.2,
/// free 0.5) with the last VNF pinned to the destination, plus
/// `constraint_count` constraints on request types with distinct
/// (domain, type) pairs, min in 0..1 and max in min..min+2.
GeneratedRequest generate_request(const NetworkGraph& g, std::uint64_t seed, int constraint_count = 2);

struct RunRecord {
  Dimension dimension;
  std::uint64_t scenario_seed = 0;
  int request_index = 0;
  OutcomeKind outcome = OutcomeKind::Unsat;
  std::optional<Cost> cost;
  /// Tree returned by the solver, if any; not written to CSV.
  std::optional<SfcTree> tree;
  double wall_ms = 0.0;
};

struct DimensionAggregate {
  Dimension dimension;
  int runs = 0;
  /// Runs that hit the cutoff.
  int failures = 0;
  double failure_fraction = 0.0;
  /// Mean time with every failed run counted as twice the cutoff.
  double par2_ms = 0.0;
  /// Mean over completed runs (Optimal, Feasible, Unsat); absent if none.
  std::optional<double> mean_success_ms;
  /// Mean over Unsat runs; absent if none.
  std::optional<double> mean_unsat_ms;
};

struct BenchReport {
  std::vector<RunRecord> runs;
  std::vector<DimensionAggregate> aggregates;
};

DimensionAggregate aggregate(Dimension dim, std::span<const RunRecord> runs, Budget cutoff);

/// Called after each run; lets front ends show progress.
using RunObserver = std::function<void(const RunRecord&)>;

/// Runs every dimension, scenario and request sequentially with
/// solve_optimal under the cutoff. Wall time covers compile and solve.
BenchReport run_benchmark(const BenchConfig& cfg, const RunObserver& observer = {});

/// Writes the runs file and the aggregates file. Throws IoError.
void write_csv(const BenchReport& report, const std::filesystem::path& runs_path,
               const std::filesystem::path& aggregates_path);

}  // namespace sfc
