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

#include "proframe/tensor.hpp"

#include "proframe/error.hpp"

namespace proframe {
namespace {

AlgebraSignature product_signature(const AlgebraSignature& left,
                                   const AlgebraSignature& right) {
  std::vector<int> dims;
  for (int n : left.dims()) {
    for (int r : right.dims()) dims.push_back(n * r);
  }
  return AlgebraSignature(std::move(dims));
}

void require_layout(const TensorModuleLayout& layout, const ModuleSpace& left,
                    const ModuleSpace& right) {
  if (!(layout.left == left) || !(layout.right == right)) {
    throw Error(ErrorKind::kShapeMismatch,
                "operands do not match the tensor layout");
  }
}

}  // namespace

TensorLayout tensor_algebra(const AlgebraSignature& left,
                            const AlgebraSignature& right) {
  TensorLayout out{left, right, product_signature(left, right), {}};
  for (std::size_t k = 0; k < left.num_blocks(); ++k) {
    for (std::size_t l = 0; l < right.num_blocks(); ++l) {
      out.pairs.emplace_back(k, l);
    }
  }
  return out;
}

AlgebraElement tensor_element(const AlgebraElement& a, const AlgebraElement& b,
                              const TensorLayout& layout) {
  if (!(a.signature() == layout.left) || !(b.signature() == layout.right)) {
    throw Error(ErrorKind::kIncompatibleSignature,
                "operands do not match the tensor layout");
  }
  std::vector<Matrix> blocks;
  for (const auto& [k, l] : layout.pairs) {
    blocks.push_back(linalg::kron(a.block(k), b.block(l)));
  }
  return AlgebraElement(layout.product, std::move(blocks));
}

TensorModuleLayout tensor_module(const ModuleSpace& left,
                                 const ModuleSpace& right) {
  TensorLayout algebra = tensor_algebra(left.signature(), right.signature());
  ModuleSpace product(algebra.product, left.rank() * right.rank());
  return {std::move(algebra), left, right, std::move(product)};
}

ModuleElement tensor_module_element(const ModuleElement& x,
                                    const ModuleElement& y,
                                    const TensorModuleLayout& layout) {
  require_layout(layout, x.space(), y.space());
  const int p = layout.left.rank();
  const int q = layout.right.rank();
  std::vector<Matrix> blocks;
  for (const auto& [k, l] : layout.algebra.pairs) {
    const int n = layout.left.element_rows(k);
    const int r = layout.right.element_rows(l);
    const int nr = n * r;
    Matrix z(nr, p * q * nr);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        z.block(0, (i * q + j) * nr, nr, nr) =
            linalg::kron(x.block(k).block(0, i * n, n, n),
                         y.block(l).block(0, j * r, r, r));
      }
    }
    blocks.push_back(std::move(z));
  }
  return ModuleElement(layout.product, std::move(blocks));
}

ModuleOperator tensor_operator(const ModuleOperator& t, const ModuleOperator& l,
                               const TensorModuleLayout& layout) {
  require_layout(layout, t.space(), l.space());
  const int p = layout.left.rank();
  const int q = layout.right.rank();
  std::vector<Matrix> blocks;
  for (const auto& [k, kr] : layout.algebra.pairs) {
    const int n = layout.left.element_rows(k);
    const int r = layout.right.element_rows(kr);
    const int nr = n * r;
    const Matrix& m = t.block(k);
    const Matrix& w = l.block(kr);
    Matrix out(p * q * nr, p * q * nr);
    for (int a = 0; a < p; ++a) {
      for (int c = 0; c < q; ++c) {
        for (int b = 0; b < p; ++b) {
          for (int d = 0; d < q; ++d) {
            out.block((a * q + c) * nr, (b * q + d) * nr, nr, nr) =
                linalg::kron(m.block(a * n, b * n, n, n),
                             w.block(c * r, d * r, r, r));
          }
        }
      }
    }
    blocks.push_back(std::move(out));
  }
  return ModuleOperator(layout.product, std::move(blocks));
}

TensorFrame tensor_frame(const OperatorFrame& f, const OperatorFrame& g,
                         double tol) {
  TensorModuleLayout layout = tensor_module(f.space(), g.space());
  std::vector<ModuleOperator> ops;
  for (const auto& t : f.ops()) {
    for (const auto& l : g.ops()) ops.push_back(tensor_operator(t, l, layout));
  }
  OperatorFrame frame(layout.product, std::move(ops));
  FrameBounds bounds = optimal_bounds(frame, tol);
  return {std::move(frame), bounds, std::move(layout)};
}

TensorFrame tensor_frames(const std::vector<OperatorFrame>& frames,
                          double tol) {
  if (frames.size() < 2) {
    throw Error(ErrorKind::kShapeMismatch, "need at least two frames");
  }
  TensorFrame acc = tensor_frame(frames[0], frames[1], tol);
  for (std::size_t i = 2; i < frames.size(); ++i) {
    acc = tensor_frame(acc.frame, frames[i], tol);
  }
  return acc;
}

double tensor_dual_residual(const OperatorFrame& f, const OperatorFrame& f_dual,
                            const OperatorFrame& g, const OperatorFrame& g_dual,
                            double tol) {
  return tensor_dual_residual(std::vector<OperatorFrame>{f, g},
                              std::vector<OperatorFrame>{f_dual, g_dual}, tol);
}

bool tensor_dual_check(const OperatorFrame& f, const OperatorFrame& f_dual,
                       const OperatorFrame& g, const OperatorFrame& g_dual,
                       double tol) {
  return tensor_dual_residual(f, f_dual, g, g_dual, tol) <= tol;
}

double tensor_dual_residual(const std::vector<OperatorFrame>& frames,
                            const std::vector<OperatorFrame>& duals,
                            double tol) {
  if (frames.size() != duals.size()) {
    throw Error(ErrorKind::kShapeMismatch, "one dual per frame");
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (!verify_dual(frames[i], duals[i], tol)) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "factor " + std::to_string(i) + " is not paired with a dual");
    }
  }
  const TensorFrame product = tensor_frames(frames, tol);
  const TensorFrame product_dual = tensor_frames(duals, tol);
  return dual_residual(product.frame, product_dual.frame);
}

}  // namespace proframe
