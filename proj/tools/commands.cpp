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

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sfc/bench.hpp"
#include "sfc/checker.hpp"
#include "sfc/intent.hpp"
#include "sfc/mzn_export.hpp"
#include "sfc/network.hpp"
#include "sfc/request_tree.hpp"
#include "sfc/solution.hpp"

namespace sfc::cli {

namespace {

namespace fs = std::filesystem;

// Raised for anything the user can fix: unreadable files, bad JSON, bad
// references between the inputs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

struct Inputs {
  NetworkDocument network;
  BoundIntent intent;
  RequestTree tree;
};

template <typename F>
auto with_context(const fs::path& path, F&& parse) {
  try {
    return parse();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const NetworkError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Inputs load_inputs(const fs::path& network, const fs::path& request, const std::optional<fs::path>& constraints) {
  Inputs in;
  const std::string network_text = read_file(network);
  in.network = with_context(network, [&] { return parse_network(network_text); });
  const std::string request_text = read_file(request);
  const SfcRequest req = with_context(request, [&] { return parse_request(request_text); });
  DomainConstraintSet cons;
  if (constraints) {
    const std::string cons_text = read_file(*constraints);
    cons = with_context(*constraints, [&] { return parse_domain_constraints(cons_text); });
  }
  in.intent = with_context(request, [&] { return bind_request(req, cons, in.network.graph, in.network.names); });
  in.tree = build_request_tree(req);
  return in;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace

std::optional<Budget> parse_duration(std::string_view text) {
  double scale = 1000.0;
  if (text.ends_with("ms")) {
    scale = 1.0;
    text.remove_suffix(2);
  } else if (text.ends_with("s")) {
    text.remove_suffix(1);
  } else if (text.ends_with("m")) {
    scale = 60000.0;
    text.remove_suffix(1);
  }
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value) || value <= 0.0)
    return std::nullopt;
  const auto ms = static_cast<Budget::rep>(std::llround(value * scale));
  if (ms <= 0) return std::nullopt;
  return Budget(ms);
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Inputs in = load_inputs(args.network, args.request, args.constraints);
    const SolveOutcome result = solve_instance(in.network.graph, in.intent,
                                               args.feasible ? SearchMode::Feasible : SearchMode::Optimal, args.timeout);
    const std::string text = outcome_to_json(result) + "\n";
    out << text;
    if (args.out) write_file(*args.out, text);
    switch (result.kind) {
      case OutcomeKind::Optimal:
      case OutcomeKind::Feasible:
        return static_cast<int>(kSuccess);
      case OutcomeKind::Unsat:
        err << "no admissible tree exists\n";
        return static_cast<int>(kUnsat);
      case OutcomeKind::Timeout:
        err << "time budget exhausted" << (result.has_tree() ? " (incumbent reported)" : "") << '\n';
        return static_cast<int>(kTimeout);
    }
    return static_cast<int>(kInternalError);
  });
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Inputs in = load_inputs(args.network, args.request, args.constraints);
    const std::string solution_text = read_file(args.solution);
    const SfcTree tree = with_context(args.solution, [&] { return tree_from_json(solution_text); });
    const SatisfactionReport report = check_satisfaction(tree, in.network.graph, in.intent, in.tree);
    if (report.empty()) {
      out << "admissible, cost " << tree_cost(tree) << '\n';
      return static_cast<int>(kSuccess);
    }
    out << format_report(report);
    return static_cast<int>(kUnsat);
  });
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    NetworkGraph g;
    try {
      g = generate_scenario({args.nodes, args.domains, args.seed});
    } catch (const InvalidDimension& e) {
      throw InputError(e.what());
    }
    const std::string text = network_to_json(g) + "\n";
    if (args.out)
      write_file(*args.out, text);
    else
      out << text;
    return static_cast<int>(kSuccess);
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BenchConfig cfg;
    if (args.config) {
      const std::string text = read_file(*args.config);
      cfg = with_context(*args.config, [&] { return parse_bench_config(text); });
    }
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) throw InputError("cannot create " + args.out_dir.string() + ": " + ec.message());

    const BenchReport report = run_benchmark(cfg, [&](const RunRecord& r) {
      err << r.dimension.nodes << '/' << r.dimension.domains << " scenario " << r.scenario_seed << " request "
          << r.request_index << ": " << to_string(r.outcome) << " in " << r.wall_ms << " ms\n";
    });
    try {
      write_csv(report, args.out_dir / "runs.csv", args.out_dir / "aggregates.csv");
    } catch (const IoError& e) {
      throw InputError(e.what());
    }
    for (const DimensionAggregate& a : report.aggregates) {
      out << a.dimension.nodes << " nodes / " << a.dimension.domains << " domains: " << a.runs << " runs, "
          << a.failures << " timeouts, par2 " << a.par2_ms << " ms";
      if (a.mean_success_ms) out << ", mean success " << *a.mean_success_ms << " ms";
      out << '\n';
    }
    return static_cast<int>(kSuccess);
  });
}

int cmd_export(const ExportArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Inputs in = load_inputs(args.network, args.request, args.constraints);
    MznInstance inst;
    try {
      inst = export_instance(in.network.graph, in.intent, in.tree);
    } catch (const UnboundInput& e) {
      throw InputError(e.what());
    }
    const fs::path model = args.out_dir / "instance.mzn";
    const fs::path data = args.out_dir / "instance.dzn";
    write_file(model, inst.model_text);
    write_file(data, inst.data_text);
    out << model.string() << '\n' << data.string() << '\n';
    return static_cast<int>(kSuccess);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-domain service function chain design"};
  app.require_subcommand(1);

  auto budget_validator = CLI::Validator(
      [](std::string& text) { return parse_duration(text) ? std::string() : "invalid duration: " + text; }, "DURATION");

  SolveArgs solve;
  std::string solve_timeout = "5s";
  bool optimal_flag = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal (or any admissible) tree");
  solve_cmd->add_option("network", solve.network, "Network JSON")->required();
  solve_cmd->add_option("request", solve.request, "Request JSON")->required();
  solve_cmd->add_option("constraints", solve.constraints, "Domain constraints JSON");
  auto* opt = solve_cmd->add_flag("--optimal", optimal_flag, "Minimize cost (default)");
  solve_cmd->add_flag("--feasible", solve.feasible, "Stop at the first admissible tree")->excludes(opt);
  solve_cmd->add_option("--timeout", solve_timeout, "Time budget, e.g. 5s or 500ms")->check(budget_validator);
  solve_cmd->add_option("--out", solve.out, "Also write the solution JSON here");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Verify a solution against the request");
  check_cmd->add_option("network", check.network, "Network JSON")->required();
  check_cmd->add_option("request", check.request, "Request JSON")->required();
  check_cmd->add_option("constraints", check.constraints, "Domain constraints JSON")->required();
  check_cmd->add_option("solution", check.solution, "Solution JSON")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random network");
  gen_cmd->add_option("--nodes", gen.nodes, "Number of nodes")->required();
  gen_cmd->add_option("--domains", gen.domains, "Number of domains")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output path (default: standard output)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark protocol");
  bench_cmd->add_option("config", bench.config, "Benchmark config JSON (defaults when omitted)");
  bench_cmd->add_option("--out-dir", bench.out_dir, "Directory for runs.csv and aggregates.csv");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Write a MiniZinc model and data file");
  export_cmd->add_option("network", exp.network, "Network JSON")->required();
  export_cmd->add_option("request", exp.request, "Request JSON")->required();
  export_cmd->add_option("constraints", exp.constraints, "Domain constraints JSON");
  export_cmd->add_option("--out-dir", exp.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kSuccess) : static_cast<int>(kInputError);
  }

  if (solve_cmd->parsed()) {
    solve.timeout = *parse_duration(solve_timeout);
    return cmd_solve(solve, out, err);
  }
  if (check_cmd->parsed()) return cmd_check(check, out, err);
  if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
  if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  return cmd_export(exp, out, err);
}

}  // namespace sfc::cli
