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

// End-to-end pipelines through documents and several modules at once.

#include <gtest/gtest.h>

#include "proframe/commands.hpp"
#include "proframe/perturbation.hpp"
#include "proframe/random.hpp"
#include "proframe/tensor.hpp"
#include "support.hpp"

namespace proframe {
namespace {

using testing::max_abs;
using testing::sig;

TEST(Pipeline, GenerateDualVerifyThroughText) {
  FrameDocument d;
  d.signature = {2, 3};
  d.rank = 2;
  d.generate = GenerateSpec{"F", 5, "generic", 1.0};
  CommandOptions o;
  o.seed = 21;
  const Report gen = run_command("gen", d, o);
  ASSERT_TRUE(gen.document);
  const FrameDocument with_f = parse_document_text(emit_document(*gen.document));
  o.frame = "F";
  const Report dual = run_command("dual", with_f, o);
  ASSERT_TRUE(dual.passed());
  const FrameDocument both = parse_document_text(emit_document(*dual.document));
  o.other = "F_dual";
  EXPECT_TRUE(run_command("verify-dual", both, o).passed());
  // The serialized dual is exact to the last bit.
  const OperatorFrame f = document_frame(both, "F");
  const OperatorFrame g = document_frame(both, "F_dual");
  const OperatorFrame direct = canonical_dual(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_EQ(g.op(i).block(k), direct.op(i).block(k));
    }
  }
}

TEST(Pipeline, TransportThenTensorThenDual) {
  Rng rng(22);
  const ModuleSpace s(sig({1, 2}), 2);
  const OperatorFrame f = gen_frame(3, s, 3);
  const BlockHom phi(s.signature(), sig({2, 1}), {1, 0},
                     {rng.unitary(2), rng.unitary(1)});
  const ThetaMap theta(s, phi, {rng.unitary(4), rng.unitary(2)});
  const TransformResult moved = transform(f, theta);
  EXPECT_NEAR(moved.bounds.lower, optimal_bounds(f).lower, 1e-12);

  const ModuleSpace y(sig({2}), 1);
  const OperatorFrame g = gen_frame(4, y, 2, {GenMode::kParseval});
  const TensorFrame t = tensor_frame(moved.frame, g);
  EXPECT_NEAR(t.bounds.lower, moved.bounds.lower, 1e-9);
  EXPECT_NEAR(t.bounds.upper, moved.bounds.upper, 1e-9);
  const OperatorFrame td = canonical_dual(t.frame);
  EXPECT_LE(dual_residual(t.frame, td), 1e-10);
  EXPECT_LE(tensor_dual_residual(moved.frame, canonical_dual(moved.frame), g,
                                 canonical_dual(g)),
            1e-10);
}

TEST(Pipeline, ComposeThenPerturbBackToOriginal) {
  Rng rng(23);
  const ModuleSpace s(sig({2, 3}), 1);
  const OperatorFrame f = gen_frame(5, s, 4);
  // Q close to the identity: {T_i Q} is a small perturbation of {T_i}.
  const ModuleOperator h = rng.module_operator(s);
  const ModuleOperator q =
      ModuleOperator::identity(s) + (h + h.adjoint()).scaled(0.01);
  const ComposedFrame c = compose_right(f, q);
  const PerturbationReport p = perturb_check(f, difference_family(f, c.frame));
  ASSERT_TRUE(p.hypothesis);
  EXPECT_TRUE(p.satisfied);
  // T - (T - TQ) = TQ.
  const FrameBounds back = p.frame_diff;
  EXPECT_NEAR(back.lower, c.bounds.lower, 1e-10);
  EXPECT_NEAR(back.upper, c.bounds.upper, 1e-10);
  const EquivalenceReport e = equivalence_check(f, c.frame);
  EXPECT_TRUE(e.r_is_frame);
  EXPECT_TRUE(e.consistent);
}

TEST(Pipeline, FusionDocumentToDualPair) {
  Rng rng(24);
  FrameDocument d;
  d.signature = {1, 2};
  d.rank = 2;
  const ModuleSpace s = document_space(d);
  FusionSpec spec;
  spec.projections.push_back(ModuleOperator::identity(s).blocks());
  spec.weights.push_back({1.0, 0.5});
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < 2; ++k) {
    const int n = s.element_cols(k);
    const Matrix u = rng.unitary(n).leftCols(n / 2);
    blocks.push_back(u * u.adjoint());
  }
  spec.projections.push_back(blocks);
  spec.weights.push_back({2.0, 1.5});
  d.fusion["W"] = spec;
  const FrameDocument back = parse_document_text(emit_document(d));
  const FusionSystem sys = document_fusion(back, "W");
  const FusionDualPair pair = fusion_dual_pair(sys);
  EXPECT_LE(dual_residual(pair.t, pair.q), 1e-10);
  CommandOptions o;
  o.frame = "W";
  const Report r = run_command("fusion", back, o);
  EXPECT_TRUE(r.passed()) << r.to_markdown();
}

}  // namespace
}  // namespace proframe
