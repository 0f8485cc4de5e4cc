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

#include "sfc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sfc/model.hpp"
#include "sfc/request_tree.hpp"

namespace sfc {

namespace {

using json = nlohmann::json;

constexpr Cost kMinLinkCost = 1;
constexpr Cost kMaxLinkCost = 100;
constexpr int kMinRequestLength = 2;
constexpr int kMaxRequestLength = 5;
constexpr double kDuplicateProbability = 0.25;
constexpr double kSourceMaskProbability = 0.3;
constexpr double kDestinationMaskProbability = 0.2;

}  // namespace

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  // splitmix64 finalizer over a mixed pair
  std::uint64_t z = parent ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void validate(const BenchConfig& cfg) {
  if (cfg.dimensions.empty()) throw std::invalid_argument("bench: no dimensions");
  if (cfg.scenarios_per_dimension < 1) throw std::invalid_argument("bench: scenarios_per_dimension must be >= 1");
  if (cfg.requests_per_scenario < 1) throw std::invalid_argument("bench: requests_per_scenario must be >= 1");
  if (cfg.constraints_per_request < 0) throw std::invalid_argument("bench: constraints_per_request must be >= 0");
  if (cfg.cutoff.count() <= 0) throw std::invalid_argument("bench: cutoff must be positive");
  for (const Dimension& d : cfg.dimensions)
    if (d.domains < 1 || d.nodes <= 2 * d.domains)
      throw std::invalid_argument("bench: dimension " + std::to_string(d.nodes) + "/" + std::to_string(d.domains) +
                                  " needs nodes/domains > 2");
}

BenchConfig parse_bench_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bench config: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("bench config: expected an object");

  BenchConfig cfg;
  auto integer = [&](const char* key, auto& field) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_number_integer()) throw std::invalid_argument(std::string("bench config: \"") + key + "\" must be an integer");
    field = it->get<std::remove_reference_t<decltype(field)>>();
  };
  try {
    if (auto it = doc.find("dimensions"); it != doc.end()) {
      if (!it->is_array()) throw std::invalid_argument("bench config: \"dimensions\" must be an array");
      cfg.dimensions.clear();
      for (const auto& d : *it) {
        if (!d.is_object() || !d.contains("nodes") || !d.contains("domains") || !d["nodes"].is_number_integer() ||
            !d["domains"].is_number_integer())
          throw std::invalid_argument("bench config: dimension entries need integer \"nodes\" and \"domains\"");
        cfg.dimensions.push_back({d["nodes"].get<int>(), d["domains"].get<int>()});
      }
    }
    integer("scenarios_per_dimension", cfg.scenarios_per_dimension);
    integer("requests_per_scenario", cfg.requests_per_scenario);
    integer("constraints_per_request", cfg.constraints_per_request);
    std::int64_t cutoff_ms = cfg.cutoff.count();
    integer("cutoff_ms", cutoff_ms);
    cfg.cutoff = Budget(cutoff_ms);
    if (auto it = doc.find("master_seed"); it != doc.end()) {
      if (!it->is_number_unsigned() && !it->is_number_integer())
        throw std::invalid_argument("bench config: \"master_seed\" must be an integer");
      cfg.master_seed = it->get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bench config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

NetworkGraph generate_scenario(const ScenarioSpec& spec) {
  if (spec.n_domains < 1 || spec.n_nodes <= 2 * spec.n_domains)
    throw InvalidDimension("scenario: " + std::to_string(spec.n_nodes) + " nodes over " +
                           std::to_string(spec.n_domains) + " domains, need nodes/domains > 2");
  std::mt19937_64 rng(spec.seed);
  const auto n = static_cast<std::size_t>(spec.n_nodes);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<NodeSpec> nodes(n);
  std::vector<char> is_gw(n, 0);
  for (int d = 0; d < spec.n_domains; ++d) {
    const std::size_t at = order[static_cast<std::size_t>(d)];
    nodes[at] = {VnfType::GATEWAY, d + 1};
    is_gw[at] = 1;
  }
  std::uniform_int_distribution<std::size_t> pick_type(0, kServiceTypes.size() - 1);
  std::uniform_int_distribution<int> pick_domain(1, spec.n_domains);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_gw[i]) continue;
    const VnfType t = kServiceTypes[pick_type(rng)];
    nodes[i] = {t, pick_domain(rng)};
  }

  std::uniform_int_distribution<Cost> pick_cost(kMinLinkCost, kMaxLinkCost);
  InterDomainCosts costs;
  for (DomainId a = 1; a <= spec.n_domains; ++a)
    for (DomainId b = 1; b <= spec.n_domains; ++b)
      if (a != b) costs[{a, b}] = pick_cost(rng);
  return build_network(nodes, costs);
}

GeneratedRequest generate_request(const NetworkGraph& g, std::uint64_t seed, int constraint_count) {
  std::mt19937_64 rng(seed);
  const int m = g.domain_count();
  std::uniform_int_distribution<int> pick_domain(1, m);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const DomainId src = pick_domain(rng);
  DomainId dst = src;
  if (m >= 2) {
    std::uniform_int_distribution<int> other(1, m - 1);
    dst = other(rng);
    if (dst >= src) ++dst;
  }

  GeneratedRequest out;
  SfcRequest& req = out.request;
  req.src = std::to_string(src);
  req.dst = std::to_string(dst);
  req.qos = "speed";
  req.qos_type = "bandwidth";
  req.qos_thr = "throughput";
  req.qos_value = 90;

  const int length = std::uniform_int_distribution<int>(kMinRequestLength, kMaxRequestLength)(rng);
  std::uniform_int_distribution<std::size_t> pick_type(0, kServiceTypes.size() - 1);
  for (int i = 0; i < length; ++i) req.vnf_list.push_back(kServiceTypes[pick_type(rng)]);
  for (VnfType t : kServiceTypes)
    if (std::find(req.vnf_list.begin(), req.vnf_list.end(), t) != req.vnf_list.end() &&
        unit(rng) < kDuplicateProbability)
      req.dup_list.insert(t);

  for (int i = 0; i < length; ++i) {
    if (i == length - 1) {
      req.prox_to_src.push_back(false);
      req.prox_to_dst.push_back(true);
      continue;
    }
    const double r = unit(rng);
    req.prox_to_src.push_back(r < kSourceMaskProbability);
    req.prox_to_dst.push_back(r >= kSourceMaskProbability && r < kSourceMaskProbability + kDestinationMaskProbability);
  }

  std::vector<VnfType> types(req.vnf_list);
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  std::uniform_int_distribution<std::size_t> pick_request_type(0, types.size() - 1);
  std::uniform_int_distribution<int> pick_min(0, 1);
  std::uniform_int_distribution<int> pick_slack(0, 2);
  const int available = m * static_cast<int>(types.size());
  const int wanted = std::min(constraint_count, available);
  while (static_cast<int>(out.constraints.size()) < wanted) {
    DomainConstraint c;
    c.domain = std::to_string(pick_domain(rng));
    c.vnf_type = types[pick_request_type(rng)];
    c.min_count = pick_min(rng);
    c.max_count = c.min_count + pick_slack(rng);
    const bool taken = std::any_of(out.constraints.constraints.begin(), out.constraints.constraints.end(),
                                   [&](const DomainConstraint& o) { return o.domain == c.domain && o.vnf_type == c.vnf_type; });
    if (!taken) out.constraints.constraints.push_back(std::move(c));
  }
  return out;
}

DimensionAggregate aggregate(Dimension dim, std::span<const RunRecord> runs, Budget cutoff) {
  DimensionAggregate out;
  out.dimension = dim;
  out.runs = static_cast<int>(runs.size());
  const double penalty = 2.0 * static_cast<double>(cutoff.count());
  double penalized = 0.0;
  double success = 0.0;
  double unsat = 0.0;
  int successes = 0;
  int unsats = 0;
  for (const RunRecord& r : runs) {
    if (r.outcome == OutcomeKind::Timeout) {
      ++out.failures;
      penalized += penalty;
      continue;
    }
    penalized += r.wall_ms;
    success += r.wall_ms;
    ++successes;
    if (r.outcome == OutcomeKind::Unsat) {
      unsat += r.wall_ms;
      ++unsats;
    }
  }
  if (out.runs > 0) {
    out.par2_ms = penalized / out.runs;
    out.failure_fraction = static_cast<double>(out.failures) / out.runs;
  }
  if (successes > 0) out.mean_success_ms = success / successes;
  if (unsats > 0) out.mean_unsat_ms = unsat / unsats;
  return out;
}

BenchReport run_benchmark(const BenchConfig& cfg, const RunObserver& observer) {
  validate(cfg);
  BenchReport report;
  for (std::size_t di = 0; di < cfg.dimensions.size(); ++di) {
    const Dimension dim = cfg.dimensions[di];
    const std::uint64_t dim_seed = derive_seed(cfg.master_seed, di);
    const std::size_t first = report.runs.size();
    for (int s = 0; s < cfg.scenarios_per_dimension; ++s) {
      const std::uint64_t scenario_seed = derive_seed(dim_seed, static_cast<std::uint64_t>(s));
      const NetworkGraph g = generate_scenario({dim.nodes, dim.domains, scenario_seed});
      const DomainNameMap names = decimal_domain_names(g);
      for (int r = 0; r < cfg.requests_per_scenario; ++r) {
        const GeneratedRequest gen =
            generate_request(g, derive_seed(scenario_seed, static_cast<std::uint64_t>(r)), cfg.constraints_per_request);
        const BoundIntent intent = bind_request(gen.request, gen.constraints, g, names);
        const RequestTree tree = build_request_tree(gen.request);

        RunRecord rec{dim, scenario_seed, r, OutcomeKind::Unsat, std::nullopt, std::nullopt, 0.0};
        const auto start = std::chrono::steady_clock::now();
        try {
          const ConstraintModel model = compile(g, intent, tree);
          const SolveOutcome out = solve_optimal(model, cfg.cutoff);
          rec.outcome = out.kind;
          if (out.kind == OutcomeKind::Optimal) rec.cost = out.cost();
          rec.tree = out.tree;
        } catch (const EmptyDomainError&) {
          rec.outcome = OutcomeKind::Unsat;
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (observer) observer(rec);
        report.runs.push_back(rec);
      }
    }
    report.aggregates.push_back(
        aggregate(dim, std::span<const RunRecord>(report.runs).subspan(first), cfg.cutoff));
  }
  return report;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

std::string format_ms(std::optional<double> v) {
  if (!v) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << *v;
  return os.str();
}

}  // namespace

void write_csv(const BenchReport& report, const std::filesystem::path& runs_path,
               const std::filesystem::path& aggregates_path) {
  {
    std::ofstream out = open_for_write(runs_path);
    out << "dimension_nodes,dimension_domains,scenario_seed,request_index,outcome,wall_ms\n";
    for (const RunRecord& r : report.runs)
      out << r.dimension.nodes << ',' << r.dimension.domains << ',' << r.scenario_seed << ',' << r.request_index << ','
          << to_string(r.outcome) << ',' << format_ms(r.wall_ms) << '\n';
    if (!out) throw IoError("write failed: " + runs_path.string());
  }
  std::ofstream out = open_for_write(aggregates_path);
  out << "dimension_nodes,dimension_domains,runs,failures,par2_ms,mean_success_ms,mean_unsat_ms\n";
  for (const DimensionAggregate& a : report.aggregates)
    out << a.dimension.nodes << ',' << a.dimension.domains << ',' << a.runs << ',' << a.failures << ','
        << format_ms(a.par2_ms) << ',' << format_ms(a.mean_success_ms) << ',' << format_ms(a.mean_unsat_ms) << '\n';
  if (!out) throw IoError("write failed: " + aggregates_path.string());
}

}  // namespace sfc
