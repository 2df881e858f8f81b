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

#ifndef PROFRAME_FUSION_HPP_
#define PROFRAME_FUSION_HPP_

#include <vector>

#include "proframe/frame.hpp"

namespace proframe {

/// Orthogonal projection onto a complemented submodule: P = P^* = P o P.
class SubmoduleProjection {
 public:
  explicit SubmoduleProjection(ModuleOperator p, double tol = kDefaultTol);

  const ModuleOperator& op() const { return p_; }

 private:
  ModuleOperator p_;
};

/// Positive invertible central element: one positive scalar per block.
class CentralWeight {
 public:
  explicit CentralWeight(std::vector<double> scalars);

  static CentralWeight uniform(const AlgebraSignature& sig, double value);

  double at(std::size_t k) const { return scalars_.at(k); }
  const std::vector<double>& scalars() const { return scalars_; }

 private:
  std::vector<double> scalars_;
};

/// v * T with v central: block k scaled by v_k.
ModuleOperator weighted(const CentralWeight& v, const ModuleOperator& t);

struct FusionPair {
  SubmoduleProjection projection;
  CentralWeight weight;
};

class FusionSystem {
 public:
  FusionSystem(ModuleSpace space, std::vector<FusionPair> pairs);

  const ModuleSpace& space() const { return space_; }
  std::size_t size() const { return pairs_.size(); }
  const FusionPair& pair(std::size_t i) const { return pairs_.at(i); }
  const std::vector<FusionPair>& pairs() const { return pairs_; }

 private:
  ModuleSpace space_;
  std::vector<FusionPair> pairs_;
};

/// S_{W,v} = sum_i v_i^2 P_i.
ModuleOperator fusion_frame_operator(const FusionSystem& sys);

/// {v_i P_i}.
OperatorFrame fusion_to_operator_frame(const FusionSystem& sys);

struct FusionDualPair {
  OperatorFrame t;  // v_i S o P_i o S^{-1}
  OperatorFrame q;  // v_i S^{-1} o P_i
};

/// Throws kNotAFrame when S_{W,v} is not invertible.
FusionDualPair fusion_dual_pair(const FusionSystem& sys,
                                double tol = kDefaultTol);

/// S_{W,v} = I and {v_i P_i} is a dual of itself.
bool parseval_self_dual_check(const FusionSystem& sys,
                              double tol = kDefaultTol);

/// || sum_i v_i^2 (S^{-1} o P_i o S) - S_{W,v} ||, relative to
/// max(1, ||S_{W,v}||).
double conjugation_residual(const FusionSystem& sys, double tol = kDefaultTol);
bool frame_operator_conjugation_check(const FusionSystem& sys,
                                      double tol = kDefaultTol);

}  // namespace proframe

#endif  // PROFRAME_FUSION_HPP_
