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

#include "proframe/module.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "proframe/error.hpp"

namespace proframe {
namespace {

void check_block(const ModuleSpace& space, std::size_t k) {
  if (k >= space.num_blocks()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "block index " + std::to_string(k) + " out of range");
  }
}

}  // namespace

ModuleSpace::ModuleSpace(AlgebraSignature signature, int rank)
    : signature_(std::move(signature)), rank_(rank) {
  if (rank_ < 1) {
    throw Error(ErrorKind::kShapeMismatch, "module rank must be >= 1");
  }
}

void require_same_space(const ModuleSpace& a, const ModuleSpace& b) {
  require_same_signature(a.signature(), b.signature());
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::kIncompatibleSignature,
                "module rank " + std::to_string(a.rank()) + " vs " +
                    std::to_string(b.rank()));
  }
}

ModuleElement::ModuleElement(ModuleSpace space, std::vector<Matrix> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  if (blocks_.size() != space_.num_blocks()) {
    throw Error(ErrorKind::kShapeMismatch, "module element block count");
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].rows() != space_.element_rows(k) ||
        blocks_[k].cols() != space_.element_cols(k)) {
      throw Error(ErrorKind::kShapeMismatch,
                  "module element block " + std::to_string(k) + " must be " +
                      std::to_string(space_.element_rows(k)) + "x" +
                      std::to_string(space_.element_cols(k)));
    }
  }
}

ModuleElement ModuleElement::zero(const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    blocks.push_back(
        Matrix::Zero(space.element_rows(k), space.element_cols(k)));
  }
  return ModuleElement(space, std::move(blocks));
}

ModuleElement ModuleElement::from_coordinates(
    const ModuleSpace& space, const std::vector<AlgebraElement>& coords) {
  if (static_cast<int>(coords.size()) != space.rank()) {
    throw Error(ErrorKind::kShapeMismatch, "coordinate count must equal rank");
  }
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int n = space.element_rows(k);
    Matrix b(n, space.element_cols(k));
    for (int i = 0; i < space.rank(); ++i) {
      require_same_signature(coords[i].signature(), space.signature());
      b.block(0, i * n, n, n) = coords[i].block(k);
    }
    blocks.push_back(std::move(b));
  }
  return ModuleElement(space, std::move(blocks));
}

AlgebraElement ModuleElement::coordinate(int i) const {
  if (i < 0 || i >= space_.rank()) {
    throw Error(ErrorKind::kIndexOutOfRange, "coordinate index out of range");
  }
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int n = space_.element_rows(k);
    out.push_back(blocks_[k].block(0, i * n, n, n));
  }
  return AlgebraElement(space_.signature(), std::move(out));
}

ModuleElement ModuleElement::left_multiply(const AlgebraElement& a) const {
  require_same_signature(a.signature(), space_.signature());
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    out.push_back(a.block(k) * blocks_[k]);
  }
  return ModuleElement(space_, std::move(out));
}

ModuleElement ModuleElement::scaled(Complex factor) const {
  std::vector<Matrix> out;
  for (const auto& b : blocks_) out.push_back(factor * b);
  return ModuleElement(space_, std::move(out));
}

ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
  require_same_space(x.space_, y.space_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < x.blocks_.size(); ++k) {
    out.push_back(x.blocks_[k] + y.blocks_[k]);
  }
  return ModuleElement(x.space_, std::move(out));
}

ModuleElement operator-(const ModuleElement& x, const ModuleElement& y) {
  require_same_space(x.space_, y.space_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < x.blocks_.size(); ++k) {
    out.push_back(x.blocks_[k] - y.blocks_[k]);
  }
  return ModuleElement(x.space_, std::move(out));
}

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
  require_same_space(x.space(), y.space());
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < x.blocks().size(); ++k) {
    out.push_back(x.block(k) * y.block(k).adjoint());
  }
  return AlgebraElement(x.space().signature(), std::move(out));
}

double module_seminorm(const ModuleElement& x, std::size_t k) {
  check_block(x.space(), k);
  return linalg::spectral_norm(x.block(k));
}

ModuleOperator::ModuleOperator(ModuleSpace space, std::vector<Matrix> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  if (blocks_.size() != space_.num_blocks()) {
    throw Error(ErrorKind::kShapeMismatch, "operator block count");
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int d = space_.element_cols(k);
    if (blocks_[k].rows() != d || blocks_[k].cols() != d) {
      throw Error(ErrorKind::kShapeMismatch,
                  "operator block " + std::to_string(k) + " must be " +
                      std::to_string(d) + "x" + std::to_string(d));
    }
  }
}

ModuleOperator ModuleOperator::identity(const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    blocks.push_back(Matrix::Identity(d, d));
  }
  return ModuleOperator(space, std::move(blocks));
}

ModuleOperator ModuleOperator::zero(const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    blocks.push_back(Matrix::Zero(d, d));
  }
  return ModuleOperator(space, std::move(blocks));
}

ModuleElement ModuleOperator::apply(const ModuleElement& x) const {
  require_same_space(space_, x.space());
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    out.push_back(x.block(k) * blocks_[k]);
  }
  return ModuleElement(space_, std::move(out));
}

ModuleOperator ModuleOperator::adjoint() const {
  std::vector<Matrix> out;
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return ModuleOperator(space_, std::move(out));
}

ModuleOperator ModuleOperator::scaled(Complex factor) const {
  std::vector<Matrix> out;
  for (const auto& b : blocks_) out.push_back(factor * b);
  return ModuleOperator(space_, std::move(out));
}

ModuleOperator operator+(const ModuleOperator& a, const ModuleOperator& b) {
  require_same_space(a.space_, b.space_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    out.push_back(a.blocks_[k] + b.blocks_[k]);
  }
  return ModuleOperator(a.space_, std::move(out));
}

ModuleOperator operator-(const ModuleOperator& a, const ModuleOperator& b) {
  require_same_space(a.space_, b.space_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    out.push_back(a.blocks_[k] - b.blocks_[k]);
  }
  return ModuleOperator(a.space_, std::move(out));
}

ModuleOperator op_compose(const ModuleOperator& t, const ModuleOperator& u) {
  require_same_space(t.space(), u.space());
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < t.blocks().size(); ++k) {
    out.push_back(u.block(k) * t.block(k));
  }
  return ModuleOperator(t.space(), std::move(out));
}

double op_seminorm(const ModuleOperator& t, std::size_t k) {
  check_block(t.space(), k);
  return linalg::spectral_norm(t.block(k));
}

double op_uniform_norm(const ModuleOperator& t) {
  double out = 0.0;
  for (const auto& b : t.blocks()) {
    out = std::max(out, linalg::spectral_norm(b));
  }
  return out;
}

bool op_is_self_adjoint(const ModuleOperator& t, double tol) {
  return std::all_of(t.blocks().begin(), t.blocks().end(),
                     [tol](const Matrix& b) {
                       return linalg::is_hermitian(b, tol);
                     });
}

bool op_is_positive(const ModuleOperator& t, double tol) {
  return std::all_of(t.blocks().begin(), t.blocks().end(),
                     [tol](const Matrix& b) { return linalg::is_psd(b, tol); });
}

bool op_is_invertible(const ModuleOperator& t, double tol) {
  return std::all_of(t.blocks().begin(), t.blocks().end(),
                     [tol](const Matrix& b) {
                       Eigen::JacobiSVD<Matrix> svd(b);
                       const RealVector& s = svd.singularValues();
                       return s(s.size() - 1) > tol * std::max(1.0, s(0));
                     });
}

ModuleOperator op_calculus(const ModuleOperator& t, Calculus kind,
                           double tol) {
  // The block algebra M_{mn_k}(C) is itself a product algebra; reuse the
  // element-level calculus on it.
  std::vector<int> dims;
  for (std::size_t k = 0; k < t.space().num_blocks(); ++k) {
    dims.push_back(t.space().element_cols(k));
  }
  const AlgebraElement as_element(AlgebraSignature(dims), t.blocks());
  const AlgebraElement mapped = positive_calculus(as_element, kind, tol);
  return ModuleOperator(t.space(), mapped.blocks());
}

ModuleOperator op_inverse(const ModuleOperator& t, double tol) {
  if (!op_is_invertible(t, tol)) {
    throw Error(ErrorKind::kNotInvertible, "operator is not invertible");
  }
  std::vector<Matrix> out;
  for (const auto& b : t.blocks()) out.push_back(b.fullPivLu().inverse());
  return ModuleOperator(t.space(), std::move(out));
}

bool sandwich_check(const ModuleOperator& t, const ModuleElement& x,
                    double tol) {
  if (!op_is_invertible(t, tol)) {
    throw Error(ErrorKind::kNotInvertible, "sandwich check needs invertible T");
  }
  const double upper = op_uniform_norm(t);
  const double lower = 1.0 / op_uniform_norm(op_inverse(t, tol));
  const AlgebraElement xx = inner_product(x, x);
  const ModuleElement tx = t.apply(x);
  const AlgebraElement txtx = inner_product(tx, tx);
  return order_leq(xx.scaled(lower * lower), txtx, tol) &&
         order_leq(txtx, xx.scaled(upper * upper), tol);
}

std::optional<SurjectivityBounds> surjectivity_bounds(const ModuleOperator& t,
                                                      double tol) {
  if (!op_is_self_adjoint(t, tol)) {
    throw Error(ErrorKind::kNotSelfAdjoint, "operator is not self-adjoint");
  }
  if (!op_is_invertible(t, tol)) return std::nullopt;
  double smin = std::numeric_limits<double>::infinity();
  double smax = 0.0;
  for (const auto& b : t.blocks()) {
    smin = std::min(smin, linalg::min_singular_value(b));
    smax = std::max(smax, linalg::spectral_norm(b));
  }
  return SurjectivityBounds{smin * smin, smax * smax};
}

AlgebraElement l2_inner_product(const CoefficientSequence& c,
                                const CoefficientSequence& d) {
  require_same_space(c.space, d.space);
  if (c.items.size() != d.items.size()) {
    throw Error(ErrorKind::kShapeMismatch, "coefficient sequence lengths");
  }
  AlgebraElement acc = AlgebraElement::zero(c.space.signature());
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    acc = acc + inner_product(c.items[i], d.items[i]);
  }
  return acc;
}

}  // namespace proframe
