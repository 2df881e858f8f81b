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

#include "proframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "proframe/error.hpp"
#include "proframe/random.hpp"

namespace proframe {
namespace {

ModuleOperator inverse_frame_operator(const OperatorFrame& frame, double tol) {
  const FrameBounds b = optimal_bounds(frame, tol);
  if (!(b.lower > tol)) {
    std::ostringstream os;
    os << "family is not a frame (optimal lower bound " << b.lower << ")";
    throw Error(ErrorKind::kNotAFrame, os.str());
  }
  return op_calculus(frame_operator(frame), Calculus::kInv, tol);
}

double block_residual(const AlgebraElement& a, const AlgebraElement& b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    out = std::max(out, linalg::spectral_norm(a.block(k) - b.block(k)));
  }
  return out;
}

double max_block_norm(const AlgebraElement& a) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    out = std::max(out, seminorm(a, k));
  }
  return out;
}

}  // namespace

OperatorFrame::OperatorFrame(ModuleSpace space, std::vector<ModuleOperator> ops)
    : space_(std::move(space)), ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "operator frame must be nonempty");
  }
  for (const auto& t : ops_) require_same_space(space_, t.space());
}

ModuleOperator frame_operator(const OperatorFrame& frame) {
  const ModuleSpace& space = frame.space();
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    Matrix s = Matrix::Zero(d, d);
    for (const auto& t : frame.ops()) s += t.block(k) * t.block(k).adjoint();
    blocks.push_back(std::move(s));
  }
  return ModuleOperator(space, std::move(blocks));
}

CoefficientSequence analysis_apply(const OperatorFrame& frame,
                                   const ModuleElement& x) {
  require_same_space(frame.space(), x.space());
  CoefficientSequence out{frame.space(), {}};
  for (const auto& t : frame.ops()) out.items.push_back(t.apply(x));
  return out;
}

ModuleElement synthesis_apply(const OperatorFrame& frame,
                              const CoefficientSequence& coeffs) {
  require_same_space(frame.space(), coeffs.space);
  if (coeffs.items.size() != frame.size()) {
    throw Error(ErrorKind::kShapeMismatch,
                "synthesis needs " + std::to_string(frame.size()) +
                    " coefficients, got " +
                    std::to_string(coeffs.items.size()));
  }
  ModuleElement acc = ModuleElement::zero(frame.space());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    acc = acc + frame.op(i).adjoint().apply(coeffs.items[i]);
  }
  return acc;
}

std::vector<FrameBounds> block_bounds(const OperatorFrame& frame, double tol) {
  const ModuleOperator s = frame_operator(frame);
  std::vector<FrameBounds> out;
  for (const auto& b : s.blocks()) {
    const RealVector ev = linalg::hermitian_eigenvalues(b);
    out.push_back({std::max(0.0, ev(0)), std::max(0.0, ev(ev.size() - 1)),
                   true, tol});
  }
  return out;
}

FrameBounds optimal_bounds(const OperatorFrame& frame, double tol) {
  FrameBounds out{std::numeric_limits<double>::infinity(), 0.0, true, tol};
  for (const auto& b : block_bounds(frame, tol)) {
    out.lower = std::min(out.lower, b.lower);
    out.upper = std::max(out.upper, b.upper);
  }
  return out;
}

std::string FrameClass::name() const {
  std::ostringstream os;
  switch (kind) {
    case FrameKind::kNonBesselDegenerate: return "non_bessel_degenerate";
    case FrameKind::kBesselOnly: return "bessel_only";
    case FrameKind::kFrame: return "frame";
    case FrameKind::kParseval: return "parseval";
    case FrameKind::kTight:
      os << "tight(" << lambda << ")";
      return os.str();
  }
  return "unknown";
}

FrameClass classify(const FrameBounds& bounds, double tol) {
  if (!std::isfinite(bounds.lower) || !std::isfinite(bounds.upper) ||
      bounds.lower < -tol * std::max(1.0, std::abs(bounds.upper)) ||
      bounds.upper < bounds.lower) {
    return {FrameKind::kNonBesselDegenerate, 0.0};
  }
  if (bounds.lower <= tol) return {FrameKind::kBesselOnly, 0.0};
  const double a = bounds.lower;
  const double b = bounds.upper;
  if (std::abs(a - b) <= tol * std::max(1.0, b)) {
    const double lambda = 0.5 * (a + b);
    if (std::abs(a - 1.0) <= tol) return {FrameKind::kParseval, 1.0};
    return {FrameKind::kTight, lambda};
  }
  return {FrameKind::kFrame, 0.0};
}

FrameClass classify(const OperatorFrame& frame, double tol) {
  return classify(optimal_bounds(frame, tol), tol);
}

ModuleElement reconstruct(const OperatorFrame& frame, const ModuleElement& x,
                          double tol) {
  const ModuleOperator s_inv = inverse_frame_operator(frame, tol);
  ModuleElement acc = ModuleElement::zero(frame.space());
  for (const auto& t : frame.ops()) {
    acc = acc + s_inv.apply(t.adjoint().apply(t.apply(x)));
  }
  return acc;
}

OperatorFrame canonical_dual(const OperatorFrame& frame, double tol) {
  const ModuleOperator s_inv = inverse_frame_operator(frame, tol);
  std::vector<ModuleOperator> ops;
  for (const auto& t : frame.ops()) ops.push_back(op_compose(t, s_inv));
  return OperatorFrame(frame.space(), std::move(ops));
}

double dual_residual(const OperatorFrame& frame, const OperatorFrame& dual) {
  require_same_space(frame.space(), dual.space());
  if (frame.size() != dual.size()) {
    throw Error(ErrorKind::kShapeMismatch, "dual must have the same index set");
  }
  double out = 0.0;
  for (std::size_t k = 0; k < frame.space().num_blocks(); ++k) {
    const int d = frame.space().element_cols(k);
    Matrix acc = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      acc += dual.op(i).block(k) * frame.op(i).block(k).adjoint();
    }
    acc -= Matrix::Identity(d, d);
    out = std::max(out, linalg::spectral_norm(acc));
  }
  return out;
}

bool verify_dual(const OperatorFrame& frame, const OperatorFrame& dual,
                 double tol) {
  return dual_residual(frame, dual) <= tol;
}

ModuleOperator reconstruct_operator(const OperatorFrame& frame,
                                    const OperatorFrame& dual,
                                    const ModuleOperator& a) {
  require_same_space(frame.space(), dual.space());
  if (frame.size() != dual.size()) {
    throw Error(ErrorKind::kShapeMismatch, "dual must have the same index set");
  }
  ModuleOperator acc = ModuleOperator::zero(frame.space());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    acc = acc + op_compose(frame.op(i).adjoint(), op_compose(dual.op(i), a));
  }
  return acc;
}

ComposedFrame compose_right(const OperatorFrame& frame,
                            const ModuleOperator& q, double tol) {
  require_same_space(frame.space(), q.space());
  const auto q_bounds = surjectivity_bounds(q, tol);
  if (!q_bounds) {
    throw Error(ErrorKind::kNotSurjective, "Q is not surjective");
  }
  std::vector<ModuleOperator> ops;
  for (const auto& t : frame.ops()) ops.push_back(op_compose(t, q));
  OperatorFrame composed(frame.space(), std::move(ops));
  const FrameBounds original = optimal_bounds(frame, tol);
  FrameBounds bounds = optimal_bounds(composed, tol);
  return {std::move(composed), bounds, *q_bounds,
          original.lower * q_bounds->lower, original.upper * q_bounds->upper};
}

ThetaMap::ThetaMap(ModuleSpace source, BlockHom hom,
                   std::vector<Matrix> module_conjugators, double tol)
    : source_(std::move(source)),
      target_(hom.target(), source_.rank()),
      hom_(std::move(hom)),
      module_conjugators_(std::move(module_conjugators)) {
  if (!(hom_.source() == source_.signature())) {
    throw Error(ErrorKind::kIncompatibleTheta,
                "hom source differs from the module signature");
  }
  if (module_conjugators_.size() != target_.num_blocks()) {
    throw Error(ErrorKind::kIncompatibleTheta,
                "need one module conjugator per target block");
  }
  for (std::size_t l = 0; l < module_conjugators_.size(); ++l) {
    const Matrix& g = module_conjugators_[l];
    if (g.rows() != target_.element_cols(l) ||
        !linalg::is_unitary(g, tol)) {
      throw Error(ErrorKind::kIncompatibleTheta,
                  "module conjugator " + std::to_string(l) +
                      " is not a unitary of size " +
                      std::to_string(target_.element_cols(l)));
    }
  }
}

ThetaMap ThetaMap::identity(const ModuleSpace& space) {
  std::vector<Matrix> g;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    g.push_back(Matrix::Identity(d, d));
  }
  return ThetaMap(space, BlockHom::identity(space.signature()), std::move(g));
}

ModuleElement ThetaMap::apply(const ModuleElement& x) const {
  require_same_space(source_, x.space());
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < target_.num_blocks(); ++l) {
    out.push_back(hom_.conjugator(l) * x.block(hom_.source_block(l)) *
                  module_conjugators_[l]);
  }
  return ModuleElement(target_, std::move(out));
}

ModuleOperator ThetaMap::transport(const ModuleOperator& t) const {
  require_same_space(source_, t.space());
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < target_.num_blocks(); ++l) {
    const Matrix& g = module_conjugators_[l];
    out.push_back(g.adjoint() * t.block(hom_.source_block(l)) * g);
  }
  return ModuleOperator(target_, std::move(out));
}

double ThetaMap::compatibility_residual(std::uint64_t seed,
                                        int samples) const {
  Rng rng(seed);
  double out = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ModuleElement x = rng.module_element(source_);
    const ModuleElement y = rng.module_element(source_);
    const AlgebraElement expected = hom_.apply(inner_product(x, y));
    const AlgebraElement got = inner_product(apply(x), apply(y));
    out = std::max(out, block_residual(got, expected) /
                            std::max(1.0, max_block_norm(expected)));
  }
  return out;
}

TransformResult transform(const OperatorFrame& frame, const ThetaMap& theta,
                          double tol) {
  if (!(frame.space() == theta.source())) {
    throw Error(ErrorKind::kIncompatibleTheta,
                "frame space differs from the theta source space");
  }
  constexpr std::uint64_t kSampleSeed = 0x7e7a;
  constexpr int kSamples = 8;
  if (theta.compatibility_residual(kSampleSeed, kSamples) > tol) {
    throw Error(ErrorKind::kIncompatibleTheta,
                "<theta x, theta y> != phi(<x, y>) on sampled pairs");
  }
  std::vector<ModuleOperator> ops;
  for (const auto& t : frame.ops()) ops.push_back(theta.transport(t));
  OperatorFrame moved(theta.target(), std::move(ops));

  const ModuleOperator s_source = frame_operator(frame);
  const ModuleOperator s_target = frame_operator(moved);
  Rng rng(kSampleSeed + 1);
  double energy = 0.0;
  double transport_res = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const ModuleElement x = rng.module_element(frame.space());
    const ModuleElement y = rng.module_element(frame.space());
    AlgebraElement source_energy =
        AlgebraElement::zero(frame.space().signature());
    AlgebraElement target_energy = AlgebraElement::zero(theta.target().signature());
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const ModuleElement tx = frame.op(i).apply(x);
      const ModuleElement moved_tx = theta.apply(tx);
      source_energy = source_energy + inner_product(tx, tx);
      target_energy = target_energy + inner_product(moved_tx, moved_tx);
    }
    const AlgebraElement phi_energy = theta.hom().apply(source_energy);
    energy = std::max(energy, block_residual(target_energy, phi_energy) /
                                  std::max(1.0, max_block_norm(phi_energy)));

    const AlgebraElement lhs =
        inner_product(s_target.apply(theta.apply(x)), theta.apply(y));
    const AlgebraElement rhs =
        theta.hom().apply(inner_product(s_source.apply(x), y));
    transport_res = std::max(transport_res, block_residual(lhs, rhs) /
                                                std::max(1.0, max_block_norm(rhs)));
  }
  FrameBounds bounds = optimal_bounds(moved, tol);
  std::vector<FrameBounds> per_block = block_bounds(moved, tol);
  return {std::move(moved), bounds, std::move(per_block), energy,
          transport_res};
}

OperatorFrame vector_frame_lift(const std::vector<AlgebraElement>& xs,
                                double /*tol*/) {
  if (xs.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "vector frame must be nonempty");
  }
  const ModuleSpace space(xs.front().signature(), 1);
  std::vector<ModuleOperator> ops;
  for (const auto& x : xs) {
    require_same_signature(x.signature(), space.signature());
    ops.emplace_back(space, x.adjoint().blocks());
  }
  return OperatorFrame(space, std::move(ops));
}

OperatorFrame gen_frame(std::uint64_t seed, const ModuleSpace& space,
                        int count, GenSpec spec) {
  if (count < 1) {
    throw Error(ErrorKind::kShapeMismatch, "frame size must be >= 1");
  }
  Rng rng(seed);
  std::vector<ModuleOperator> ops;
  for (int i = 0; i < count; ++i) ops.push_back(rng.module_operator(space));
  if (spec.mode == GenMode::kGeneric) {
    return OperatorFrame(space, std::move(ops));
  }

  const OperatorFrame generic(space, ops);
  ModuleOperator whiten =
      op_calculus(frame_operator(generic), Calculus::kInvSqrt, kDefaultTol);
  double scale = 1.0;
  if (spec.mode == GenMode::kTight) scale = std::sqrt(spec.lambda);
  if (spec.mode == GenMode::kNearSingular) {
    // Replace the whitening on block 0 by D S^{-1/2} with D Hermitian having
    // a single eigenvalue sqrt(delta), so lambda_min(S) = delta.
    const double delta = rng.uniform(0.0, 1e-6);
    const int d = space.element_cols(0);
    Matrix u = rng.gaussian_matrix(d, 1);
    u /= u.norm();
    const Matrix damp = Matrix::Identity(d, d) -
                        (1.0 - std::sqrt(delta)) * (u * u.adjoint());
    std::vector<Matrix> blocks = whiten.blocks();
    blocks[0] = damp * blocks[0];
    whiten = ModuleOperator(space, std::move(blocks));
  }
  std::vector<ModuleOperator> shaped;
  for (const auto& t : ops) {
    shaped.push_back(op_compose(t, whiten).scaled(scale));
  }
  return OperatorFrame(space, std::move(shaped));
}

}  // namespace proframe
