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

#ifndef PROFRAME_MODULE_HPP_
#define PROFRAME_MODULE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "proframe/algebra.hpp"

namespace proframe {

/// The free Hilbert module A^m.
///
/// Elements are stored as rows: block k of x is the n_k x (m n_k) matrix
/// [x_1 | x_2 | ... | x_m] obtained by concatenating the coordinates
/// restricted to block k. The inner product is <x, y>_k = X_k Y_k^H and
/// operators act by right multiplication X_k -> X_k M_k, so left
/// A-linearity T(a x) = a T(x) holds structurally.
class ModuleSpace {
 public:
  ModuleSpace(AlgebraSignature signature, int rank);

  const AlgebraSignature& signature() const { return signature_; }
  int rank() const { return rank_; }
  std::size_t num_blocks() const { return signature_.num_blocks(); }
  // Row count n_k and column count m n_k of the element block.
  int element_rows(std::size_t k) const { return signature_.dim(k); }
  int element_cols(std::size_t k) const { return rank_ * signature_.dim(k); }

  bool operator==(const ModuleSpace&) const = default;

 private:
  AlgebraSignature signature_;
  int rank_;
};

void require_same_space(const ModuleSpace& a, const ModuleSpace& b);

class ModuleElement {
 public:
  ModuleElement(ModuleSpace space, std::vector<Matrix> blocks);

  static ModuleElement zero(const ModuleSpace& space);
  static ModuleElement from_coordinates(
      const ModuleSpace& space, const std::vector<AlgebraElement>& coords);

  const ModuleSpace& space() const { return space_; }
  const Matrix& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  AlgebraElement coordinate(int i) const;
  // Left module action (a x)_i = a x_i.
  ModuleElement left_multiply(const AlgebraElement& a) const;
  ModuleElement scaled(Complex factor) const;

  friend ModuleElement operator+(const ModuleElement& x,
                                 const ModuleElement& y);
  friend ModuleElement operator-(const ModuleElement& x,
                                 const ModuleElement& y);

 private:
  ModuleSpace space_;
  std::vector<Matrix> blocks_;
};

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);

/// sqrt(p_k(<x, x>)), i.e. the spectral norm of X_k.
double module_seminorm(const ModuleElement& x, std::size_t k);

/// Adjointable operator acting by right multiplication on each block.
class ModuleOperator {
 public:
  ModuleOperator(ModuleSpace space, std::vector<Matrix> blocks);

  static ModuleOperator identity(const ModuleSpace& space);
  static ModuleOperator zero(const ModuleSpace& space);

  const ModuleSpace& space() const { return space_; }
  const Matrix& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  ModuleElement apply(const ModuleElement& x) const;
  ModuleOperator adjoint() const;
  ModuleOperator scaled(Complex factor) const;

  friend ModuleOperator operator+(const ModuleOperator& a,
                                  const ModuleOperator& b);
  friend ModuleOperator operator-(const ModuleOperator& a,
                                  const ModuleOperator& b);

 private:
  ModuleSpace space_;
  std::vector<Matrix> blocks_;
};

inline ModuleElement op_apply(const ModuleOperator& t, const ModuleElement& x) {
  return t.apply(x);
}
inline ModuleOperator op_adjoint(const ModuleOperator& t) {
  return t.adjoint();
}

/// T o U. Under the row convention the block matrix is matrix(U) matrix(T).
ModuleOperator op_compose(const ModuleOperator& t, const ModuleOperator& u);

double op_seminorm(const ModuleOperator& t, std::size_t k);
/// ||T||_inf, the maximum of the block seminorms.
double op_uniform_norm(const ModuleOperator& t);

bool op_is_self_adjoint(const ModuleOperator& t, double tol = kDefaultTol);
bool op_is_positive(const ModuleOperator& t, double tol = kDefaultTol);
/// min singular value > tol * max(1, max singular value) on every block.
bool op_is_invertible(const ModuleOperator& t, double tol = kDefaultTol);

ModuleOperator op_calculus(const ModuleOperator& t, Calculus kind,
                           double tol = kDefaultTol);
/// General (not necessarily Hermitian) inverse; throws kNotInvertible.
ModuleOperator op_inverse(const ModuleOperator& t, double tol = kDefaultTol);

/// ||T^{-1}||^{-2} <x,x> <= <Tx,Tx> <= ||T||^2 <x,x>.
bool sandwich_check(const ModuleOperator& t, const ModuleElement& x,
                    double tol = kDefaultTol);

struct SurjectivityBounds {
  double lower;  // m' = (min singular value)^2
  double upper;  // M' = (max singular value)^2
};

/// Constants certifying m' <x,x> <= <Tx,Tx> <= M' <x,x> for a self-adjoint
/// T, or nullopt when T has a kernel.
std::optional<SurjectivityBounds> surjectivity_bounds(
    const ModuleOperator& t, double tol = kDefaultTol);

/// Finite model of l^2(X).
struct CoefficientSequence {
  ModuleSpace space;
  std::vector<ModuleElement> items;
};

/// sum_i <x_i, y_i>.
AlgebraElement l2_inner_product(const CoefficientSequence& c,
                                const CoefficientSequence& d);

}  // namespace proframe

#endif  // PROFRAME_MODULE_HPP_
