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

#ifndef PROFRAME_LINALG_HPP_
#define PROFRAME_LINALG_HPP_

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace proframe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Structural tolerance used for Hermitian, positivity, idempotency and
// invertibility checks.
inline constexpr double kDefaultTol = 1e-9;
// Residual tolerance used for reconstruction-type checks.
inline constexpr double kDefaultRtol = 1e-8;

namespace linalg {

// Largest singular value.
double spectral_norm(const Matrix& m);
double min_singular_value(const Matrix& m);

// ||m - m^H|| <= tol * max(1, ||m||).
bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

// Eigen-decomposition of (m + m^H) / 2, eigenvalues ascending.
struct HermitianEigen {
  RealVector values;
  Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix& m);
RealVector hermitian_eigenvalues(const Matrix& m);

// Hermitian within tol and lambda_min >= -tol * max(1, ||m||).
bool is_psd(const Matrix& m, double tol);

// U f(Lambda) U^H on the symmetrized matrix.
Matrix hermitian_function(const Matrix& m,
                          const std::function<double(double)>& f);

// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace linalg
}  // namespace proframe

#endif  // PROFRAME_LINALG_HPP_
