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

// Test helpers and independent oracles. Nothing here calls frame_operator,
// optimal_bounds or the library eigen helpers; oracles recompute from the
// defining inner-product sums with a general (non-Hermitian) eigensolver.

#ifndef PROFRAME_TESTS_SUPPORT_HPP_
#define PROFRAME_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "proframe/frame.hpp"

namespace proframe::testing {

inline AlgebraSignature sig(std::vector<int> dims) {
  return AlgebraSignature(std::move(dims));
}

inline Matrix diag(std::vector<double> d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (const Complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Operator on a single-block, rank-m module over signature (1).
inline ModuleOperator scalar_op(const Matrix& m) {
  return ModuleOperator(ModuleSpace(sig({1}), static_cast<int>(m.rows())),
                        {m});
}

inline OperatorFrame scalar_frame(const std::vector<Matrix>& ms) {
  std::vector<ModuleOperator> ops;
  for (const Matrix& m : ms) ops.push_back(scalar_op(m));
  return OperatorFrame(ops.front().space(), ops);
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Unit row e_a placed in row 0 of block k, zero elsewhere.
inline ModuleElement basis_element(const ModuleSpace& space, std::size_t k,
                                   int a) {
  ModuleElement z = ModuleElement::zero(space);
  std::vector<Matrix> blocks = z.blocks();
  blocks[k](0, a) = 1.0;
  return ModuleElement(space, blocks);
}

// Energy matrix E_ab = sum_i <T_i e_a, T_i e_b>(0,0) on block k; this is the
// Gram matrix of the quadratic form x -> sum <T_i x, T_i x>.
inline Matrix energy_matrix(const OperatorFrame& f, std::size_t k) {
  const ModuleSpace& space = f.space();
  const int d = space.element_cols(k);
  Matrix e = Matrix::Zero(d, d);
  for (const auto& t : f.ops()) {
    std::vector<ModuleElement> images;
    for (int a = 0; a < d; ++a) images.push_back(t.apply(basis_element(space, k, a)));
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        e(a, b) += inner_product(images[a], images[b]).block(k)(0, 0);
      }
    }
  }
  return e;
}

// Ascending eigenvalues through the general complex eigensolver.
inline std::vector<double> eigs(const Matrix& h) {
  Eigen::ComplexEigenSolver<Matrix> es(h, false);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    out.push_back(es.eigenvalues()(i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleBounds {
  double lower;
  double upper;
};

inline OracleBounds oracle_bounds(const OperatorFrame& f) {
  OracleBounds b{1e300, -1e300};
  for (std::size_t k = 0; k < f.space().num_blocks(); ++k) {
    const std::vector<double> ev = eigs(energy_matrix(f, k));
    b.lower = std::min(b.lower, ev.front());
    b.upper = std::max(b.upper, ev.back());
  }
  return b;
}

// Smallest eigenvalue of a Hermitian block, scaled by max(1, |largest|).
inline double scaled_min_eig(const Matrix& h) {
  const std::vector<double> ev = eigs(h);
  const double scale =
      std::max({1.0, std::abs(ev.front()), std::abs(ev.back())});
  return ev.front() / scale;
}

// Worst scaled eigenvalue of b - a over blocks; >= -tol means a <= b.
inline double order_margin(const AlgebraElement& a, const AlgebraElement& b) {
  double worst = 1e300;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    worst = std::min(worst, scaled_min_eig(b.block(k) - a.block(k)));
  }
  return worst;
}

inline double rel_diff(const Matrix& a, const Matrix& b) {
  return max_abs(a - b) / std::max(1.0, max_abs(b));
}

}  // namespace proframe::testing

#endif  // PROFRAME_TESTS_SUPPORT_HPP_
