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

#ifndef PROFRAME_FRAME_HPP_
#define PROFRAME_FRAME_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "proframe/algebra.hpp"
#include "proframe/module.hpp"

namespace proframe {

/// Finite ordered family {T_i} of adjointable operators on one module.
class OperatorFrame {
 public:
  OperatorFrame(ModuleSpace space, std::vector<ModuleOperator> ops);

  const ModuleSpace& space() const { return space_; }
  std::size_t size() const { return ops_.size(); }
  const ModuleOperator& op(std::size_t i) const { return ops_.at(i); }
  const std::vector<ModuleOperator>& ops() const { return ops_; }

 private:
  ModuleSpace space_;
  std::vector<ModuleOperator> ops_;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool optimal = false;
  double tol = kDefaultTol;
};

/// S = sum_i T_i^* T_i, block k = sum_i M_{i,k} M_{i,k}^H.
ModuleOperator frame_operator(const OperatorFrame& frame);

/// R x = (T_i x)_i.
CoefficientSequence analysis_apply(const OperatorFrame& frame,
                                   const ModuleElement& x);
/// R^* c = sum_i T_i^* c_i.
ModuleElement synthesis_apply(const OperatorFrame& frame,
                              const CoefficientSequence& coeffs);

/// Optimal constants in A<x,x> <= sum <T_i x, T_i x> <= B<x,x>: the extreme
/// eigenvalues of the frame operator over all blocks.
FrameBounds optimal_bounds(const OperatorFrame& frame,
                           double tol = kDefaultTol);
/// Same extremes restricted to each block.
std::vector<FrameBounds> block_bounds(const OperatorFrame& frame,
                                      double tol = kDefaultTol);

enum class FrameKind { kNonBesselDegenerate, kBesselOnly, kFrame, kTight,
                       kParseval };

struct FrameClass {
  FrameKind kind = FrameKind::kNonBesselDegenerate;
  double lambda = 0.0;  // tight constant when kind is kTight or kParseval

  std::string name() const;
};

FrameClass classify(const FrameBounds& bounds, double tol = kDefaultTol);
FrameClass classify(const OperatorFrame& frame, double tol = kDefaultTol);

/// sum_i S^{-1} T_i^* T_i x. Throws kNotAFrame when the lower bound is <= tol.
ModuleElement reconstruct(const OperatorFrame& frame, const ModuleElement& x,
                          double tol = kDefaultTol);

/// {T_i o S^{-1}}.
OperatorFrame canonical_dual(const OperatorFrame& frame,
                             double tol = kDefaultTol);

/// max_k || sum_i G_{i,k} M_{i,k}^H - I ||, the block residual of
/// sum_i T_i^* o G_i = I.
double dual_residual(const OperatorFrame& frame, const OperatorFrame& dual);
bool verify_dual(const OperatorFrame& frame, const OperatorFrame& dual,
                 double tol = kDefaultTol);

/// sum_i T_i^* o G_i o A, which equals A whenever G is a dual of T.
ModuleOperator reconstruct_operator(const OperatorFrame& frame,
                                    const OperatorFrame& dual,
                                    const ModuleOperator& a);

struct ComposedFrame {
  OperatorFrame frame;
  FrameBounds bounds;
  SurjectivityBounds q_bounds;
  double guaranteed_lower;  // A m'
  double guaranteed_upper;  // B M'
};

/// {T_i o Q} for self-adjoint surjective Q.
ComposedFrame compose_right(const OperatorFrame& frame,
                            const ModuleOperator& q, double tol = kDefaultTol);

/// Isometric module map theta(x)_l = U_l X_{sigma(l)} G_l compatible with a
/// block homomorphism phi: <theta x, theta y> = phi(<x, y>).
class ThetaMap {
 public:
  ThetaMap(ModuleSpace source, BlockHom hom,
           std::vector<Matrix> module_conjugators, double tol = kDefaultTol);

  static ThetaMap identity(const ModuleSpace& space);

  const ModuleSpace& source() const { return source_; }
  const ModuleSpace& target() const { return target_; }
  const BlockHom& hom() const { return hom_; }
  const std::vector<Matrix>& module_conjugators() const {
    return module_conjugators_;
  }

  ModuleElement apply(const ModuleElement& x) const;
  /// The operator N on the target with theta(T x) = N theta(x); block l is
  /// G_l^H M_{sigma(l)} G_l.
  ModuleOperator transport(const ModuleOperator& t) const;
  /// max block norm of <theta x, theta y> - phi(<x, y>) over seeded samples.
  double compatibility_residual(std::uint64_t seed, int samples) const;

 private:
  ModuleSpace source_;
  ModuleSpace target_;
  BlockHom hom_;
  std::vector<Matrix> module_conjugators_;
};

struct TransformResult {
  OperatorFrame frame;
  FrameBounds bounds;
  std::vector<FrameBounds> block_bounds;
  // Sampled residuals of sum <theta T_i x, theta T_i x> = phi(sum <T_i x,
  // T_i x>) and <S_B theta x, theta y> = phi(<S_A x, y>).
  double energy_residual;
  double transport_residual;
};

TransformResult transform(const OperatorFrame& frame, const ThetaMap& theta,
                          double tol = kDefaultTol);

/// T_i xi = <xi, x_i> on A as a module over itself (rank 1).
OperatorFrame vector_frame_lift(const std::vector<AlgebraElement>& xs,
                                double tol = kDefaultTol);

enum class GenMode { kGeneric, kParseval, kTight, kNearSingular };

struct GenSpec {
  GenMode mode = GenMode::kGeneric;
  double lambda = 1.0;  // tight constant for kTight
};

OperatorFrame gen_frame(std::uint64_t seed, const ModuleSpace& space,
                        int count, GenSpec spec = {});

}  // namespace proframe

#endif  // PROFRAME_FRAME_HPP_
