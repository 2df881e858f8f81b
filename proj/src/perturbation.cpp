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

#include "proframe/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include "proframe/error.hpp"

namespace proframe {
namespace {

void require_same_shape(const OperatorFrame& t, const OperatorFrame& r) {
  require_same_space(t.space(), r.space());
  if (t.size() != r.size()) {
    throw Error(ErrorKind::kShapeMismatch,
                "families must share the index set (" +
                    std::to_string(t.size()) + " vs " +
                    std::to_string(r.size()) + ")");
  }
}

struct PencilMax {
  double value = 0.0;
  std::size_t block = 0;
  Eigen::VectorXcd vector;  // generalized eigenvector v with D v = value G v
};

// max_k lambda_max(G_k^{-1/2} D_k G_k^{-1/2}).
PencilMax pencil_max(const ModuleOperator& g, const ModuleOperator& d,
                     double tol) {
  const ModuleOperator g_inv_sqrt = op_calculus(g, Calculus::kInvSqrt, tol);
  PencilMax out;
  out.value = -1.0;
  for (std::size_t k = 0; k < g.blocks().size(); ++k) {
    const Matrix& w = g_inv_sqrt.block(k);
    const linalg::HermitianEigen eig =
        linalg::hermitian_eigen(w * d.block(k) * w);
    const Eigen::Index top = eig.values.size() - 1;
    if (eig.values(top) > out.value) {
      out.value = eig.values(top);
      out.block = k;
      out.vector = w * eig.vectors.col(top);
    }
  }
  out.value = std::max(out.value, 0.0);
  return out;
}

bool is_frame(const OperatorFrame& f, double tol) {
  return optimal_bounds(f, tol).lower > tol;
}

}  // namespace

OperatorFrame difference_family(const OperatorFrame& t, const OperatorFrame& r) {
  require_same_shape(t, r);
  std::vector<ModuleOperator> ops;
  for (std::size_t i = 0; i < t.size(); ++i) ops.push_back(t.op(i) - r.op(i));
  return OperatorFrame(t.space(), std::move(ops));
}

PerturbationReport perturb_check(const OperatorFrame& t, const OperatorFrame& r,
                                 double tol) {
  require_same_shape(t, r);
  PerturbationReport out;
  out.bounds_T = optimal_bounds(t, tol);
  out.bessel_R = optimal_bounds(r, tol).upper;
  out.frame_diff = optimal_bounds(difference_family(t, r), tol);
  const double sa = std::sqrt(out.bounds_T.lower);
  const double sb = std::sqrt(out.bounds_T.upper);
  const double sm = std::sqrt(out.bessel_R);
  out.guaranteed_lower = sa > sm ? (sa - sm) * (sa - sm) : 0.0;
  out.guaranteed_upper = (sb + sm) * (sb + sm);
  out.hypothesis = out.bessel_R < out.bounds_T.lower;
  out.satisfied = !out.hypothesis || out.frame_diff.lower > tol;
  return out;
}

std::optional<double> DeviationConstants::inequality_constant() const {
  if (!against_T || !against_R) return std::nullopt;
  return std::max(*against_T, *against_R);
}

DeviationConstants deviation_constants(const OperatorFrame& t,
                                       const OperatorFrame& r, double tol) {
  require_same_shape(t, r);
  const ModuleOperator d = frame_operator(difference_family(t, r));
  DeviationConstants out;
  if (is_frame(t, tol)) {
    out.against_T = pencil_max(frame_operator(t), d, tol).value;
  }
  if (is_frame(r, tol)) {
    out.against_R = pencil_max(frame_operator(r), d, tol).value;
  }
  if (out.against_T && out.against_R) {
    out.M = std::min(*out.against_T, *out.against_R);
  } else if (out.against_T) {
    out.M = out.against_T;
  } else if (out.against_R) {
    out.M = out.against_R;
  }
  return out;
}

std::optional<ModuleElement> deviation_witness(const OperatorFrame& t,
                                               const OperatorFrame& r,
                                               bool against_t, double tol) {
  require_same_shape(t, r);
  const OperatorFrame& ref = against_t ? t : r;
  if (!is_frame(ref, tol)) return std::nullopt;
  const PencilMax pm =
      pencil_max(frame_operator(ref), frame_operator(difference_family(t, r)),
                 tol);
  // x with first row v^H on the extremal block and zero elsewhere gives
  // <x, x>-weighted energies v^H D v and v^H G v.
  ModuleElement zero = ModuleElement::zero(t.space());
  std::vector<Matrix> blocks = zero.blocks();
  blocks[pm.block].row(0) = pm.vector.adjoint();
  return ModuleElement(t.space(), std::move(blocks));
}

EquivalenceReport equivalence_check(const OperatorFrame& t,
                                    const OperatorFrame& r, double tol) {
  EquivalenceReport out;
  out.bounds_T = optimal_bounds(t, tol);
  out.bounds_R = optimal_bounds(r, tol);
  out.r_is_frame = out.bounds_R.lower > tol;
  out.constants = deviation_constants(t, r, tol);
  const auto m = out.constants.inequality_constant();
  bool consistent = !out.r_is_frame || m.has_value();
  if (m) {
    const double f = (std::sqrt(*m) + 1.0) * (std::sqrt(*m) + 1.0);
    out.derived_lower = out.bounds_T.lower / f;
    out.derived_upper = out.bounds_T.upper * f;
    consistent = consistent && out.bounds_R.lower >= *out.derived_lower - tol &&
                 out.bounds_R.upper <= *out.derived_upper + tol;
  }
  out.consistent = consistent;
  return out;
}

}  // namespace proframe
