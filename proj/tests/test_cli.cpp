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

#include <gtest/gtest.h>

#include <cstdio>

#include "cli_support.hpp"
#include "proframe/document.hpp"

namespace proframe {
namespace {

using testing::golden_path;
using testing::read_file;
using testing::run_cli;

std::string g(const std::string& name) { return golden_path(name); }

TEST(CliGolden, BoundsOnDiagExample) {
  const testing::CliResult r = run_cli("bounds " + g("diag.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, read_file(g("diag_bounds.md")));
  EXPECT_NE(r.out.find("| F | 1 | 4 | frame |"), std::string::npos);
}

TEST(CliGolden, DualDocumentRoundTrip) {
  const testing::CliResult r =
      run_cli("dual " + g("two_frames.json") + " --frame F");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, read_file(g("two_frames_dual.json")));
  // Re-running on the emitted document reproduces it byte for byte.
  const testing::CliResult again =
      run_cli("dual " + g("two_frames_dual.json") + " --frame F");
  EXPECT_EQ(again.out, r.out);
  // emit(parse(d)) parses to an equal document.
  const FrameDocument original = parse_document(g("two_frames.json"));
  const FrameDocument emitted = parse_document_text(emit_document(original));
  EXPECT_TRUE(emitted == original);
  const FrameDocument dual = parse_document_text(r.out);
  EXPECT_EQ(dual.frames.size(), 3u);
  EXPECT_EQ(dual.thetas.size(), 1u);
}

TEST(CliGolden, VerifyEmittedDual) {
  const testing::CliResult r = run_cli("verify-dual " + g("two_frames_dual.json") +
                                       " --frame F --other F_dual --json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"status\": \"pass\""), std::string::npos) << r.out;
}

TEST(CliGolden, OutFlagWritesDocument) {
  const std::string path = ::testing::TempDir() + "proframe_dual_out.json";
  const testing::CliResult r =
      run_cli("dual " + g("two_frames.json") + " --frame F --out " + path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("# proframe dual"), std::string::npos);
  EXPECT_EQ(read_file(path), read_file(g("two_frames_dual.json")));
  std::remove(path.c_str());
}

TEST(CliGolden, SelftestSeed7IsByteDeterministic) {
  const std::string args = "selftest " + g("selftest.json") + " --seed 7";
  const testing::CliResult a = run_cli(args);
  const testing::CliResult b = run_cli(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(testing::mask_residuals(a.out),
            testing::mask_residuals(read_file(g("selftest_seed7.md"))));
}

TEST(CliExitCodes, Contract) {
  EXPECT_EQ(run_cli("bounds " + g("diag.json")).exit_code, 0);
  // Mathematical failures.
  EXPECT_EQ(run_cli("verify-dual " + g("diag.json") + " --frame F --other F")
                .exit_code,
            1);
  EXPECT_EQ(run_cli("dual " + g("bessel.json")).exit_code, 1);
  // Input errors.
  EXPECT_EQ(run_cli("bounds " + g("bad_syntax.json")).exit_code, 2);
  EXPECT_EQ(run_cli("bounds " + g("bad_shape.json")).exit_code, 2);
  EXPECT_EQ(run_cli("bounds " + g("missing.json")).exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate " + g("diag.json")).exit_code, 2);
  EXPECT_EQ(run_cli("bounds " + g("diag.json") + " --frame nope").exit_code, 2);
  EXPECT_EQ(run_cli("bounds " + g("diag.json") + " --tol -1").exit_code, 2);
  EXPECT_EQ(run_cli("bounds").exit_code, 2);
}

}  // namespace
}  // namespace proframe
