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

#include "proframe/fusion.hpp"
#include "proframe/random.hpp"
#include "support.hpp"

namespace proframe {
namespace {

using testing::diag;
using testing::max_abs;
using testing::order_margin;
using testing::sig;

const ModuleSpace kPlane(sig({1}), 2);

FusionSystem diag_system() {
  return FusionSystem(
      kPlane,
      {{SubmoduleProjection(ModuleOperator(kPlane, {diag({1, 0})})),
        CentralWeight({1.0})},
       {SubmoduleProjection(ModuleOperator(kPlane, {diag({0, 1})})),
        CentralWeight({2.0})}});
}

// Projection onto the span of the first `rank` columns of a random unitary.
ModuleOperator random_projection(Rng& rng, const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    const Matrix basis = rng.unitary(d).leftCols(1 + rng.index(d));
    blocks.push_back(basis * basis.adjoint());
  }
  return ModuleOperator(space, blocks);
}

// Unit-weight resolution of identity from a unitary's column groups.
FusionSystem random_resolution(Rng& rng, const ModuleSpace& space, int parts) {
  std::vector<std::vector<Matrix>> blocks(parts);
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    const Matrix u = rng.unitary(d);
    for (int p = 0; p < parts; ++p) {
      Matrix b = Matrix::Zero(d, d);
      for (int c = p; c < d; c += parts) b += u.col(c) * u.col(c).adjoint();
      blocks[p].push_back(b);
    }
  }
  std::vector<FusionPair> pairs;
  for (int p = 0; p < parts; ++p) {
    pairs.push_back({SubmoduleProjection(ModuleOperator(space, blocks[p])),
                     CentralWeight::uniform(space.signature(), 1.0)});
  }
  return FusionSystem(space, pairs);
}

TEST(Projection, Validation) {
  EXPECT_NO_THROW(SubmoduleProjection(ModuleOperator(kPlane, {diag({1, 0})})));
  try {
    SubmoduleProjection(ModuleOperator(kPlane, {diag({2, 0})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidProjection);
  }
  Matrix oblique(2, 2);
  oblique << 1, 1, 0, 0;
  EXPECT_THROW(SubmoduleProjection(ModuleOperator(kPlane, {oblique})), Error);
  EXPECT_THROW(CentralWeight({0.0}), Error);
  EXPECT_THROW(
      FusionSystem(kPlane, {{SubmoduleProjection(ModuleOperator::identity(kPlane)),
                             CentralWeight({1.0, 1.0})}}),
      Error);
}

TEST(Projection, BoundsAreZeroOrOne) {
  Rng rng(51);
  const ModuleSpace s(sig({1, 2}), 2);
  for (int trial = 0; trial < 100; ++trial) {
    const OperatorFrame f(s, {random_projection(rng, s)});
    const FrameBounds b = optimal_bounds(f);
    EXPECT_TRUE(std::abs(b.lower) < 1e-12 || std::abs(b.lower - 1) < 1e-12);
    EXPECT_NEAR(b.upper, 1.0, 1e-12);
  }
}

TEST(FusionOperator, Examples) {
  const FusionSystem single(
      kPlane, {{SubmoduleProjection(ModuleOperator::identity(kPlane)),
                CentralWeight({1.0})}});
  EXPECT_EQ(classify(fusion_to_operator_frame(single)).kind,
            FrameKind::kParseval);
  EXPECT_EQ(fusion_frame_operator(diag_system()).block(0), diag({1, 4}));
  const FrameBounds b = optimal_bounds(fusion_to_operator_frame(diag_system()));
  EXPECT_DOUBLE_EQ(b.lower, 1.0);
  EXPECT_DOUBLE_EQ(b.upper, 4.0);
  const SubmoduleProjection id(ModuleOperator::identity(kPlane));
  const FusionSystem twice(kPlane,
                           {{id, CentralWeight({1.0})}, {id, CentralWeight({1.0})}});
  const FrameClass c = classify(fusion_to_operator_frame(twice));
  EXPECT_EQ(c.kind, FrameKind::kTight);
  EXPECT_NEAR(c.lambda, 2.0, 1e-14);
}

// Eq. (4): C<x,x> <= sum v^2 <P x, P x> <= D<x,x> with the induced bounds.
TEST(FusionOperator, InducedBoundsMatchSampledOracle) {
  Rng rng(52);
  const ModuleSpace s(sig({1, 2}), 2);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<FusionPair> pairs;
    for (int i = 0; i < 4; ++i) {
      pairs.push_back({SubmoduleProjection(random_projection(rng, s)),
                       CentralWeight({rng.uniform(0.5, 2), rng.uniform(0.5, 2)})});
    }
    const FusionSystem sys(s, pairs);
    const FrameBounds b = optimal_bounds(fusion_to_operator_frame(sys));
    double lo = 1e300;
    double hi = 0.0;
    for (int sample = 0; sample < 1000; ++sample) {
      const ModuleElement x = rng.module_element(s);
      AlgebraElement e = AlgebraElement::zero(s.signature());
      for (const auto& p : sys.pairs()) {
        const ModuleElement px = p.projection.op().apply(x);
        AlgebraElement term = inner_product(px, px);
        std::vector<Matrix> wb;
        for (std::size_t k = 0; k < 2; ++k) {
          wb.push_back(term.block(k) * p.weight.at(k) * p.weight.at(k));
        }
        e = e + AlgebraElement(s.signature(), wb);
      }
      const AlgebraElement xx = inner_product(x, x);
      EXPECT_GE(order_margin(xx.scaled(b.lower), e), -1e-8);
      EXPECT_GE(order_margin(e, xx.scaled(b.upper)), -1e-8);
      // Rayleigh quotients on rank-one elements approach the extremes.
      for (std::size_t k = 0; k < 2; ++k) {
        Matrix row = x.block(k);
        row.bottomRows(row.rows() - 1).setZero();
        std::vector<Matrix> blocks = ModuleElement::zero(s).blocks();
        blocks[k] = row;
        const ModuleElement r(s, blocks);
        double num = 0.0;
        for (const auto& p : sys.pairs()) {
          const ModuleElement pr = p.projection.op().apply(r);
          num += p.weight.at(k) * p.weight.at(k) *
                 inner_product(pr, pr).block(k)(0, 0).real();
        }
        const double q = num / inner_product(r, r).block(k)(0, 0).real();
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
    }
    EXPECT_GE(lo, b.lower - 1e-8);
    EXPECT_LE(hi, b.upper + 1e-8);
  }
}

TEST(FusionDual, DiagExample) {
  const FusionDualPair d = fusion_dual_pair(diag_system());
  EXPECT_LE(max_abs(d.t.op(0).block(0) - diag({1, 0})), 1e-12);
  EXPECT_LE(max_abs(d.t.op(1).block(0) - diag({0, 2})), 1e-12);
  EXPECT_LE(max_abs(d.q.op(0).block(0) - diag({1, 0})), 1e-12);
  EXPECT_LE(max_abs(d.q.op(1).block(0) - diag({0, 0.5})), 1e-12);
  Matrix sum = Matrix::Zero(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    sum += d.q.op(i).block(0) * d.t.op(i).block(0).adjoint();
  }
  EXPECT_LE(max_abs(sum - Matrix::Identity(2, 2)), 1e-12);
  EXPECT_TRUE(verify_dual(d.t, d.q));
  EXPECT_FALSE(parseval_self_dual_check(diag_system()));
  EXPECT_TRUE(frame_operator_conjugation_check(diag_system()));
}

TEST(FusionDual, RandomCommutingAndNonCommuting) {
  Rng rng(53);
  const ModuleSpace s(sig({2, 1}), 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FusionPair> pairs;
    pairs.push_back({SubmoduleProjection(ModuleOperator::identity(s)),
                     CentralWeight({rng.uniform(0.5, 2), rng.uniform(0.5, 2)})});
    if (trial % 2 == 0) {
      // Commuting: coordinate projections.
      for (int i = 0; i < 2; ++i) {
        std::vector<Matrix> blocks;
        for (std::size_t k = 0; k < 2; ++k) {
          const int n = s.element_rows(k);
          Matrix b = Matrix::Zero(2 * n, 2 * n);
          b.block(i * n, i * n, n, n).setIdentity();
          blocks.push_back(b);
        }
        pairs.push_back({SubmoduleProjection(ModuleOperator(s, blocks)),
                         CentralWeight({rng.uniform(0.5, 2), rng.uniform(0.5, 2)})});
      }
    } else {
      for (int i = 0; i < 3; ++i) {
        pairs.push_back({SubmoduleProjection(random_projection(rng, s)),
                         CentralWeight({rng.uniform(0.5, 2), rng.uniform(0.5, 2)})});
      }
    }
    const FusionSystem sys(s, pairs);
    const FusionDualPair d = fusion_dual_pair(sys);
    EXPECT_LE(dual_residual(d.t, d.q), 1e-10);
    EXPECT_TRUE(frame_operator_conjugation_check(sys));
  }
}

TEST(FusionDual, ParsevalSystemsAreSelfDual) {
  Rng rng(54);
  const ModuleSpace s(sig({1, 2}), 3);
  for (int trial = 0; trial < 100; ++trial) {
    const FusionSystem sys = random_resolution(rng, s, 2 + trial % 2);
    EXPECT_TRUE(parseval_self_dual_check(sys));
    const FusionDualPair d = fusion_dual_pair(sys);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_LE(max_abs(d.t.op(i).block(k) - sys.pair(i).projection.op().block(k)),
                  1e-12);
        EXPECT_LE(max_abs(d.q.op(i).block(k) - sys.pair(i).projection.op().block(k)),
                  1e-12);
      }
    }
  }
}

TEST(FusionDual, RefusesNonFusionFrames) {
  const FusionSystem deficient(
      kPlane, {{SubmoduleProjection(ModuleOperator(kPlane, {diag({1, 0})})),
                CentralWeight({1.0})}});
  try {
    fusion_dual_pair(deficient);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFrame);
  }
}

}  // namespace
}  // namespace proframe
