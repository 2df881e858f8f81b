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

#include "proframe/random.hpp"

#include <cmath>

namespace proframe {

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(engine_);
}

std::size_t Rng::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

Matrix Rng::gaussian_matrix(int rows, int cols) {
  const double s = std::sqrt(0.5);
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = gaussian();
      const double im = gaussian();
      m(i, j) = Complex(s * re, s * im);
    }
  }
  return m;
}

Matrix Rng::unitary(int n) {
  const Matrix g = gaussian_matrix(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Fix the phases so the distribution is Haar.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Matrix Rng::positive_definite(int n, double lo, double hi) {
  const Matrix u = unitary(n);
  RealVector ev(n);
  for (int i = 0; i < n; ++i) ev(i) = uniform(lo, hi);
  return u * ev.cast<Complex>().asDiagonal() * u.adjoint();
}

AlgebraElement Rng::element(const AlgebraSignature& sig) {
  std::vector<Matrix> blocks;
  for (int n : sig.dims()) blocks.push_back(gaussian_matrix(n, n));
  return AlgebraElement(sig, std::move(blocks));
}

AlgebraElement Rng::positive_element(const AlgebraSignature& sig, double lo,
                                     double hi) {
  std::vector<Matrix> blocks;
  for (int n : sig.dims()) blocks.push_back(positive_definite(n, lo, hi));
  return AlgebraElement(sig, std::move(blocks));
}

ModuleElement Rng::module_element(const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    blocks.push_back(
        gaussian_matrix(space.element_rows(k), space.element_cols(k)));
  }
  return ModuleElement(space, std::move(blocks));
}

ModuleOperator Rng::module_operator(const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    blocks.push_back(gaussian_matrix(d, d));
  }
  return ModuleOperator(space, std::move(blocks));
}

ModuleOperator Rng::self_adjoint_invertible(const ModuleSpace& space,
                                            double min_abs, double max_abs) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    const Matrix u = unitary(d);
    RealVector ev(d);
    for (int i = 0; i < d; ++i) {
      const double sign = uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      ev(i) = sign * uniform(min_abs, max_abs);
    }
    blocks.push_back(u * ev.cast<Complex>().asDiagonal() * u.adjoint());
  }
  return ModuleOperator(space, std::move(blocks));
}

}  // namespace proframe
