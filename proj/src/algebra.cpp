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

#include "proframe/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "proframe/error.hpp"

namespace proframe {
namespace {

std::string dims_string(const AlgebraSignature& sig) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < sig.num_blocks(); ++k) {
    if (k) os << ",";
    os << sig.dim(k);
  }
  os << ")";
  return os.str();
}

void check_block(const AlgebraSignature& sig, std::size_t k) {
  if (k >= sig.num_blocks()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "block index " + std::to_string(k) + " out of range for " +
                    std::to_string(sig.num_blocks()) + " blocks");
  }
}

}  // namespace

AlgebraSignature::AlgebraSignature(std::vector<int> block_dims)
    : dims_(std::move(block_dims)) {
  if (dims_.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "signature needs at least one block");
  }
  for (int n : dims_) {
    if (n < 1) {
      throw Error(ErrorKind::kShapeMismatch, "block dimensions must be >= 1");
    }
  }
}

void require_same_signature(const AlgebraSignature& a,
                            const AlgebraSignature& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::kIncompatibleSignature,
                "signature " + dims_string(a) + " vs " + dims_string(b));
  }
}

AlgebraElement::AlgebraElement(AlgebraSignature signature,
                               std::vector<Matrix> blocks)
    : signature_(std::move(signature)), blocks_(std::move(blocks)) {
  if (blocks_.size() != signature_.num_blocks()) {
    throw Error(ErrorKind::kShapeMismatch,
                "expected " + std::to_string(signature_.num_blocks()) +
                    " blocks, got " + std::to_string(blocks_.size()));
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int n = signature_.dim(k);
    if (blocks_[k].rows() != n || blocks_[k].cols() != n) {
      throw Error(ErrorKind::kShapeMismatch,
                  "block " + std::to_string(k) + " must be " +
                      std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraSignature& signature) {
  std::vector<Matrix> blocks;
  for (int n : signature.dims()) blocks.push_back(Matrix::Zero(n, n));
  return AlgebraElement(signature, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const AlgebraSignature& signature) {
  std::vector<Matrix> blocks;
  for (int n : signature.dims()) blocks.push_back(Matrix::Identity(n, n));
  return AlgebraElement(signature, std::move(blocks));
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return AlgebraElement(signature_, std::move(out));
}

AlgebraElement AlgebraElement::scaled(Complex factor) const {
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(factor * b);
  return AlgebraElement(signature_, std::move(out));
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_signature(a.signature_, b.signature_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    out.push_back(a.blocks_[k] + b.blocks_[k]);
  }
  return AlgebraElement(a.signature_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_signature(a.signature_, b.signature_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    out.push_back(a.blocks_[k] - b.blocks_[k]);
  }
  return AlgebraElement(a.signature_, std::move(out));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_signature(a.signature_, b.signature_);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    out.push_back(a.blocks_[k] * b.blocks_[k]);
  }
  return AlgebraElement(a.signature_, std::move(out));
}

double seminorm(const AlgebraElement& a, std::size_t k) {
  check_block(a.signature(), k);
  return linalg::spectral_norm(a.block(k));
}

bool is_hermitian(const AlgebraElement& a, double tol) {
  return std::all_of(a.blocks().begin(), a.blocks().end(),
                     [tol](const Matrix& b) {
                       return linalg::is_hermitian(b, tol);
                     });
}

bool is_positive(const AlgebraElement& a, double tol) {
  return std::all_of(a.blocks().begin(), a.blocks().end(),
                     [tol](const Matrix& b) { return linalg::is_psd(b, tol); });
}

bool order_leq(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  return is_positive(b - a, tol);
}

std::vector<std::vector<double>> hermitian_spectrum(const AlgebraElement& a,
                                                    double tol) {
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    if (!linalg::is_hermitian(a.block(k), tol)) {
      throw Error(ErrorKind::kHermitianRequired,
                  "block " + std::to_string(k) + " is not Hermitian");
    }
    const RealVector ev = linalg::hermitian_eigenvalues(a.block(k));
    out.emplace_back(ev.data(), ev.data() + ev.size());
  }
  return out;
}

AlgebraElement positive_calculus(const AlgebraElement& a, Calculus kind,
                                 double tol) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    const Matrix& b = a.block(k);
    if (!linalg::is_psd(b, tol)) {
      throw Error(ErrorKind::kNotPositive,
                  "block " + std::to_string(k) + " is not positive");
    }
    const RealVector ev = linalg::hermitian_eigenvalues(b);
    const double top = std::max(1.0, ev(ev.size() - 1));
    if (kind != Calculus::kSqrt && ev(0) <= tol * top) {
      throw Error(ErrorKind::kNotInvertible,
                  "block " + std::to_string(k) + " is singular");
    }
    switch (kind) {
      case Calculus::kSqrt:
        out.push_back(linalg::hermitian_function(
            b, [](double x) { return std::sqrt(std::max(x, 0.0)); }));
        break;
      case Calculus::kInv:
        out.push_back(
            linalg::hermitian_function(b, [](double x) { return 1.0 / x; }));
        break;
      case Calculus::kInvSqrt:
        out.push_back(linalg::hermitian_function(
            b, [](double x) { return 1.0 / std::sqrt(x); }));
        break;
    }
  }
  return AlgebraElement(a.signature(), std::move(out));
}

BlockHom::BlockHom(AlgebraSignature source, AlgebraSignature target,
                   std::vector<std::size_t> block_map,
                   std::vector<Matrix> conjugators, double tol)
    : source_(std::move(source)),
      target_(std::move(target)),
      block_map_(std::move(block_map)),
      conjugators_(std::move(conjugators)) {
  const std::size_t n_target = target_.num_blocks();
  if (block_map_.size() != n_target || conjugators_.size() != n_target) {
    throw Error(ErrorKind::kShapeMismatch,
                "block map and conjugators need one entry per target block");
  }
  for (std::size_t l = 0; l < n_target; ++l) {
    const std::size_t k = block_map_[l];
    if (k >= source_.num_blocks()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "block map entry " + std::to_string(l) + " out of range");
    }
    if (source_.dim(k) != target_.dim(l)) {
      throw Error(ErrorKind::kShapeMismatch,
                  "target block " + std::to_string(l) +
                      " dimension differs from its source block");
    }
    const Matrix& u = conjugators_[l];
    if (u.rows() != target_.dim(l) || !linalg::is_unitary(u, tol)) {
      throw Error(ErrorKind::kShapeMismatch,
                  "conjugator " + std::to_string(l) + " is not unitary");
    }
  }
}

BlockHom BlockHom::identity(const AlgebraSignature& signature) {
  std::vector<std::size_t> map;
  std::vector<Matrix> conj;
  for (std::size_t k = 0; k < signature.num_blocks(); ++k) {
    map.push_back(k);
    conj.push_back(Matrix::Identity(signature.dim(k), signature.dim(k)));
  }
  return BlockHom(signature, signature, std::move(map), std::move(conj));
}

AlgebraElement BlockHom::apply(const AlgebraElement& a) const {
  require_same_signature(a.signature(), source_);
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < target_.num_blocks(); ++l) {
    const Matrix& u = conjugators_[l];
    out.push_back(u * a.block(block_map_[l]) * u.adjoint());
  }
  return AlgebraElement(target_, std::move(out));
}

}  // namespace proframe
