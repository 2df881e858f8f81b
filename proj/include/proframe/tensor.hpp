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

#ifndef PROFRAME_TENSOR_HPP_
#define PROFRAME_TENSOR_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "proframe/frame.hpp"

namespace proframe {

// Every pairing below is row-major: block pairs (k, l), coordinate pairs
// (i, j) and frame index pairs all run with the left index outer.

struct TensorLayout {
  AlgebraSignature left;
  AlgebraSignature right;
  AlgebraSignature product;  // block dims n_k * n'_l
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t index(std::size_t k, std::size_t l) const {
    return k * right.num_blocks() + l;
  }
};

TensorLayout tensor_algebra(const AlgebraSignature& left,
                            const AlgebraSignature& right);

/// Block (k, l) is kron(a_k, b_l).
AlgebraElement tensor_element(const AlgebraElement& a, const AlgebraElement& b,
                              const TensorLayout& layout);

struct TensorModuleLayout {
  TensorLayout algebra;
  ModuleSpace left;
  ModuleSpace right;
  ModuleSpace product;  // rank p * q over the product algebra
};

TensorModuleLayout tensor_module(const ModuleSpace& left,
                                 const ModuleSpace& right);

/// Coordinate (i, j) of x (x) y is kron(x_i, y_j).
ModuleElement tensor_module_element(const ModuleElement& x,
                                    const ModuleElement& y,
                                    const TensorModuleLayout& layout);

/// The operator with (T (x) L)(x (x) y) = T x (x) L y. Writing M[a][b] for
/// the n x n sub-blocks of T's block, the ((a,c),(b,d)) sub-block of the
/// result is kron(M[a][b], N[c][d]).
ModuleOperator tensor_operator(const ModuleOperator& t, const ModuleOperator& l,
                               const TensorModuleLayout& layout);

struct TensorFrame {
  OperatorFrame frame;
  FrameBounds bounds;
  TensorModuleLayout layout;
};

/// {T_i (x) L_j}, (i, j) row-major.
TensorFrame tensor_frame(const OperatorFrame& f, const OperatorFrame& g,
                         double tol = kDefaultTol);
/// Left fold over two or more frames.
TensorFrame tensor_frames(const std::vector<OperatorFrame>& frames,
                          double tol = kDefaultTol);

/// Residual of {F~_i (x) G~_j} as a dual of {F_i (x) G_j}. Throws
/// kPreconditionViolated when a factor pair is not itself dual.
double tensor_dual_residual(const OperatorFrame& f, const OperatorFrame& f_dual,
                            const OperatorFrame& g, const OperatorFrame& g_dual,
                            double tol = kDefaultTol);
bool tensor_dual_check(const OperatorFrame& f, const OperatorFrame& f_dual,
                       const OperatorFrame& g, const OperatorFrame& g_dual,
                       double tol = kDefaultTol);
/// n-fold version: frames[i] paired with duals[i].
double tensor_dual_residual(const std::vector<OperatorFrame>& frames,
                            const std::vector<OperatorFrame>& duals,
                            double tol = kDefaultTol);

}  // namespace proframe

#endif  // PROFRAME_TENSOR_HPP_
