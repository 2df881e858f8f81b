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

#include "proframe/fusion.hpp"

#include <algorithm>
#include <utility>

#include "proframe/error.hpp"

namespace proframe {
namespace {

ModuleOperator inverse_fusion_operator(const FusionSystem& sys, double tol) {
  const ModuleOperator s = fusion_frame_operator(sys);
  if (!op_is_invertible(s, tol)) {
    throw Error(ErrorKind::kNotAFrame, "system is not a fusion frame");
  }
  return op_calculus(s, Calculus::kInv, tol);
}

}  // namespace

SubmoduleProjection::SubmoduleProjection(ModuleOperator p, double tol)
    : p_(std::move(p)) {
  for (std::size_t k = 0; k < p_.blocks().size(); ++k) {
    const Matrix& b = p_.block(k);
    const double scale = std::max(1.0, linalg::spectral_norm(b));
    if (!linalg::is_hermitian(b, tol) ||
        linalg::spectral_norm(b * b - b) > tol * scale) {
      throw Error(ErrorKind::kInvalidProjection,
                  "block " + std::to_string(k) +
                      " is not a Hermitian idempotent");
    }
  }
}

CentralWeight::CentralWeight(std::vector<double> scalars)
    : scalars_(std::move(scalars)) {
  for (double v : scalars_) {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::kShapeMismatch, "weights must be positive");
    }
  }
}

CentralWeight CentralWeight::uniform(const AlgebraSignature& sig,
                                     double value) {
  return CentralWeight(std::vector<double>(sig.num_blocks(), value));
}

ModuleOperator weighted(const CentralWeight& v, const ModuleOperator& t) {
  if (v.scalars().size() != t.space().num_blocks()) {
    throw Error(ErrorKind::kShapeMismatch, "weight needs one entry per block");
  }
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < t.blocks().size(); ++k) {
    blocks.push_back(v.at(k) * t.block(k));
  }
  return ModuleOperator(t.space(), std::move(blocks));
}

FusionSystem::FusionSystem(ModuleSpace space, std::vector<FusionPair> pairs)
    : space_(std::move(space)), pairs_(std::move(pairs)) {
  if (pairs_.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "fusion system must be nonempty");
  }
  for (const auto& p : pairs_) {
    require_same_space(space_, p.projection.op().space());
    if (p.weight.scalars().size() != space_.num_blocks()) {
      throw Error(ErrorKind::kShapeMismatch,
                  "weight needs one entry per block");
    }
  }
}

ModuleOperator fusion_frame_operator(const FusionSystem& sys) {
  ModuleOperator acc = ModuleOperator::zero(sys.space());
  for (const auto& p : sys.pairs()) {
    acc = acc + weighted(p.weight, weighted(p.weight, p.projection.op()));
  }
  return acc;
}

OperatorFrame fusion_to_operator_frame(const FusionSystem& sys) {
  std::vector<ModuleOperator> ops;
  for (const auto& p : sys.pairs()) {
    ops.push_back(weighted(p.weight, p.projection.op()));
  }
  return OperatorFrame(sys.space(), std::move(ops));
}

FusionDualPair fusion_dual_pair(const FusionSystem& sys, double tol) {
  const ModuleOperator s = fusion_frame_operator(sys);
  const ModuleOperator s_inv = inverse_fusion_operator(sys, tol);
  std::vector<ModuleOperator> t_ops;
  std::vector<ModuleOperator> q_ops;
  for (const auto& p : sys.pairs()) {
    const ModuleOperator& proj = p.projection.op();
    t_ops.push_back(weighted(p.weight, op_compose(s, op_compose(proj, s_inv))));
    q_ops.push_back(weighted(p.weight, op_compose(s_inv, proj)));
  }
  return {OperatorFrame(sys.space(), std::move(t_ops)),
          OperatorFrame(sys.space(), std::move(q_ops))};
}

bool parseval_self_dual_check(const FusionSystem& sys, double tol) {
  const ModuleOperator s = fusion_frame_operator(sys);
  const ModuleOperator diff = s - ModuleOperator::identity(sys.space());
  if (op_uniform_norm(diff) > tol) return false;
  const OperatorFrame f = fusion_to_operator_frame(sys);
  return verify_dual(f, f, tol);
}

double conjugation_residual(const FusionSystem& sys, double tol) {
  const ModuleOperator s = fusion_frame_operator(sys);
  const ModuleOperator s_inv = inverse_fusion_operator(sys, tol);
  ModuleOperator acc = ModuleOperator::zero(sys.space());
  for (const auto& p : sys.pairs()) {
    const ModuleOperator conj = op_compose(s_inv, op_compose(p.projection.op(), s));
    acc = acc + weighted(p.weight, weighted(p.weight, conj));
  }
  return op_uniform_norm(acc - s) / std::max(1.0, op_uniform_norm(s));
}

bool frame_operator_conjugation_check(const FusionSystem& sys, double tol) {
  return conjugation_residual(sys, tol) <= tol;
}

}  // namespace proframe
