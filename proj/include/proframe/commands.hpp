// Copyright 2026 The proframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROFRAME_COMMANDS_HPP_
#define PROFRAME_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proframe/document.hpp"

namespace proframe {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<Table> tables;
  // Set by commands that produce a document (dual, gen).
  std::optional<FrameDocument> document;

  bool passed() const;
  std::string to_markdown() const;
  std::string to_json() const;
};

struct CommandOptions {
  std::string frame;  // defaults to the first frame (or fusion system)
  std::string other;
  std::optional<std::uint64_t> seed;
  double tol = kDefaultTol;
  double rtol = kDefaultRtol;
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Dispatches one of: bounds, dual, verify-dual, reconstruct, compose,
/// transform, perturb, deviation, tensor, fusion, gen, selftest.
/// Throws Error(kUnknownName) for unknown commands or names.
Report run_command(const std::string& command, const FrameDocument& doc,
                   const CommandOptions& opts);

/// Invariant suite on seeded random instances over `space`.
Report run_selftest(const ModuleSpace& space, std::uint64_t seed, double tol,
                    double rtol);

/// Fixed-format number rendering shared by all reports.
std::string format_number(double v);

}  // namespace proframe

#endif  // PROFRAME_COMMANDS_HPP_
