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

#include "proframe/linalg.hpp"

#include <algorithm>

#include "proframe/error.hpp"

namespace proframe {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIncompatibleSignature: return "incompatible-signature";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kHermitianRequired: return "hermitian-required";
    case ErrorKind::kNotPositive: return "not-positive";
    case ErrorKind::kNotInvertible: return "not-invertible";
    case ErrorKind::kNotSelfAdjoint: return "not-self-adjoint";
    case ErrorKind::kNotSurjective: return "not-surjective";
    case ErrorKind::kNotAFrame: return "not-a-frame";
    case ErrorKind::kShapeMismatch: return "shape-mismatch";
    case ErrorKind::kInvalidProjection: return "invalid-projection";
    case ErrorKind::kIncompatibleTheta: return "incompatible-theta";
    case ErrorKind::kPreconditionViolated: return "precondition-violated";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kUnknownName: return "unknown-name";
  }
  return "unknown";
}

bool is_math_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPositive:
    case ErrorKind::kNotInvertible:
    case ErrorKind::kNotSelfAdjoint:
    case ErrorKind::kNotSurjective:
    case ErrorKind::kNotAFrame:
    case ErrorKind::kInvalidProjection:
    case ErrorKind::kIncompatibleTheta:
    case ErrorKind::kPreconditionViolated:
    case ErrorKind::kHermitianRequired:
      return true;
    default:
      return false;
  }
}

namespace linalg {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double min_singular_value(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix diff = m - m.adjoint();
  return spectral_norm(diff) <= tol * std::max(1.0, spectral_norm(m));
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix diff = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return spectral_norm(diff) <= tol;
}

HermitianEigen hermitian_eigen(const Matrix& m) {
  const Matrix sym = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  const Matrix sym = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool is_psd(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (m.size() == 0) return true;
  const RealVector ev = hermitian_eigenvalues(m);
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(0) >= -tol * std::max(1.0, norm);
}

Matrix hermitian_function(const Matrix& m,
                          const std::function<double(double)>& f) {
  const HermitianEigen eig = hermitian_eigen(m);
  RealVector mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    mapped(i) = f(eig.values(i));
  }
  return eig.vectors * mapped.cast<Complex>().asDiagonal() *
         eig.vectors.adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace linalg
}  // namespace proframe
