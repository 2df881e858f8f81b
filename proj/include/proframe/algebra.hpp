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

#ifndef PROFRAME_ALGEBRA_HPP_
#define PROFRAME_ALGEBRA_HPP_

#include <cstddef>
#include <vector>

#include "proframe/error.hpp"
#include "proframe/linalg.hpp"

namespace proframe {

/// Block dimensions (n_1, ..., n_K) of the product algebra
/// M_{n_1}(C) x ... x M_{n_K}(C). Block k carries the C*-seminorm
/// p_k(a) = ||a_k||.
class AlgebraSignature {
 public:
  explicit AlgebraSignature(std::vector<int> block_dims);

  std::size_t num_blocks() const { return dims_.size(); }
  int dim(std::size_t k) const { return dims_.at(k); }
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const AlgebraSignature&) const = default;

 private:
  std::vector<int> dims_;
};

/// An element of the product algebra: one square complex matrix per block.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraSignature signature, std::vector<Matrix> blocks);

  static AlgebraElement zero(const AlgebraSignature& signature);
  static AlgebraElement identity(const AlgebraSignature& signature);

  const AlgebraSignature& signature() const { return signature_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const Matrix& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  AlgebraElement adjoint() const;
  AlgebraElement scaled(Complex factor) const;

  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);

 private:
  AlgebraSignature signature_;
  std::vector<Matrix> blocks_;
};

void require_same_signature(const AlgebraSignature& a,
                            const AlgebraSignature& b);

/// Spectral norm of block k (0-based).
double seminorm(const AlgebraElement& a, std::size_t k);

bool is_hermitian(const AlgebraElement& a, double tol = kDefaultTol);
bool is_positive(const AlgebraElement& a, double tol = kDefaultTol);

/// a <= b, i.e. b - a is positive.
bool order_leq(const AlgebraElement& a, const AlgebraElement& b,
               double tol = kDefaultTol);

/// Ascending eigenvalues per block. Throws kHermitianRequired otherwise.
std::vector<std::vector<double>> hermitian_spectrum(const AlgebraElement& a,
                                                    double tol = kDefaultTol);

enum class Calculus { kSqrt, kInv, kInvSqrt };

/// Continuous functional calculus on positive elements. The inverse kinds
/// require lambda_min > tol * max(1, lambda_max) on every block.
AlgebraElement positive_calculus(const AlgebraElement& a, Calculus kind,
                                 double tol = kDefaultTol);

/// Unital *-homomorphism phi(a)_l = U_l a_{sigma(l)} U_l^H, a block
/// reindexing composed with unitary conjugation.
class BlockHom {
 public:
  BlockHom(AlgebraSignature source, AlgebraSignature target,
           std::vector<std::size_t> block_map, std::vector<Matrix> conjugators,
           double tol = kDefaultTol);

  static BlockHom identity(const AlgebraSignature& signature);

  const AlgebraSignature& source() const { return source_; }
  const AlgebraSignature& target() const { return target_; }
  std::size_t source_block(std::size_t target_block) const {
    return block_map_.at(target_block);
  }
  const std::vector<std::size_t>& block_map() const { return block_map_; }
  const Matrix& conjugator(std::size_t target_block) const {
    return conjugators_.at(target_block);
  }
  const std::vector<Matrix>& conjugators() const { return conjugators_; }

  AlgebraElement apply(const AlgebraElement& a) const;

 private:
  AlgebraSignature source_;
  AlgebraSignature target_;
  std::vector<std::size_t> block_map_;
  std::vector<Matrix> conjugators_;
};

inline AlgebraElement hom_apply(const BlockHom& phi, const AlgebraElement& a) {
  return phi.apply(a);
}

}  // namespace proframe

#endif  // PROFRAME_ALGEBRA_HPP_
