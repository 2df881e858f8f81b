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

// proframe command-line front end.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "proframe/commands.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Operator frames over finite products of matrix algebras"};
  std::string command;
  std::string path;
  std::string out_path;
  bool json = false;
  std::uint64_t seed = 0;
  proframe::CommandOptions opts;

  app.add_option("command", command,
                 "bounds, dual, verify-dual, reconstruct, compose, transform, "
                 "perturb, deviation, tensor, fusion, gen or selftest")
      ->required();
  app.add_option("document", path, "JSON frame document")->required();
  app.add_option("--frame", opts.frame, "frame (or fusion system) name");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  app.add_option("--other", opts.other, "second object name");
  app.add_option("--tol", opts.tol, "structural tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--rtol", opts.rtol, "residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "emit the report as JSON");
  app.add_option("--out", out_path, "write produced documents here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return proframe::kExitInputError;
  }
  if (*seed_opt) opts.seed = seed;

  try {
    const proframe::FrameDocument doc = proframe::parse_document(path);
    const proframe::Report report = proframe::run_command(command, doc, opts);
    if (report.document && out_path.empty()) {
      std::cout << proframe::emit_document(*report.document);
    } else {
      if (report.document) {
        std::ofstream out(out_path, std::ios::binary);
        out << proframe::emit_document(*report.document);
        if (!out) {
          std::cerr << "error: cannot write '" << out_path << "'\n";
          return proframe::kExitInputError;
        }
      }
      std::cout << (json ? report.to_json() : report.to_markdown());
    }
    return report.passed() ? proframe::kExitPass
                           : proframe::kExitCheckFailed;
  } catch (const proframe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return proframe::is_math_error(e.kind()) ? proframe::kExitCheckFailed
                                             : proframe::kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
