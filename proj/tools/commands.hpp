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
#include <iosfwd>
#include <optional>
#include <string_view>

#include "sfc/solver.hpp"

namespace sfc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUnsat = 1,
  kTimeout = 2,
  kInputError = 3,
  kInternalError = 4,
};

/// "5s", "500ms", "2m" or a bare number of seconds ("1.5").
std::optional<Budget> parse_duration(std::string_view text);

struct SolveArgs {
  std::filesystem::path network;
  std::filesystem::path request;
  std::optional<std::filesystem::path> constraints;
  bool feasible = false;
  Budget timeout{5000};
  std::optional<std::filesystem::path> out;
};

struct CheckArgs {
  std::filesystem::path network;
  std::filesystem::path request;
  std::optional<std::filesystem::path> constraints;
  std::filesystem::path solution;
};

struct GenArgs {
  int nodes = 0;
  int domains = 0;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
};

struct BenchArgs {
  std::optional<std::filesystem::path> config;
  std::filesystem::path out_dir = ".";
};

struct ExportArgs {
  std::filesystem::path network;
  std::filesystem::path request;
  std::optional<std::filesystem::path> constraints;
  std::filesystem::path out_dir = ".";
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int cmd_export(const ExportArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfc::cli
