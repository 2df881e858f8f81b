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

// Runs the proframe binary and compares against files in tests/golden.

#ifndef PROFRAME_TESTS_CLI_SUPPORT_HPP_
#define PROFRAME_TESTS_CLI_SUPPORT_HPP_

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace proframe::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline std::string golden_path(const std::string& name) {
  return std::string(PROFRAME_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Arguments are passed through the shell unquoted; callers only use plain
// paths and flags.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(PROFRAME_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Residual magnitudes depend on the floating-point environment; check names,
// verdicts and limits do not.
inline std::string mask_residuals(const std::string& s) {
  static const std::regex worst("worst [^ ]+");
  return std::regex_replace(s, worst, "worst *");
}

}  // namespace proframe::testing

#endif  // PROFRAME_TESTS_CLI_SUPPORT_HPP_
