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

#ifndef PROFRAME_PERTURBATION_HPP_
#define PROFRAME_PERTURBATION_HPP_

#include <optional>

#include "proframe/frame.hpp"

namespace proframe {

/// {T_i - R_i}.
OperatorFrame difference_family(const OperatorFrame& t, const OperatorFrame& r);

struct PerturbationReport {
  FrameBounds bounds_T;
  double bessel_R = 0.0;  // optimal Bessel bound M of R
  FrameBounds frame_diff;
  // (sqrt(A) - sqrt(M))^2 and (sqrt(B) + sqrt(M))^2.
  double guaranteed_lower = 0.0;
  double guaranteed_upper = 0.0;
  bool hypothesis = false;  // M < A
  bool satisfied = false;   // hypothesis implies {T_i - R_i} is a frame
};

PerturbationReport perturb_check(const OperatorFrame& t, const OperatorFrame& r,
                                 double tol = kDefaultTol);

/// Smallest constants c with p(sum <(T_i - R_i)x, (T_i - R_i)x>) <=
/// c p(sum <Ref_i x, Ref_i x>) for every x and every block seminorm, where
/// Ref is T (against_T) or R (against_R). Each side is present only when its
/// reference family is a frame.
struct DeviationConstants {
  std::optional<double> against_T;
  std::optional<double> against_R;
  // Minimum of the present one-sided constants.
  std::optional<double> M;

  /// max(against_T, against_R): the smallest constant for which the
  /// two-sided inequality with min(p(sum T), p(sum R)) holds.
  std::optional<double> inequality_constant() const;
};

DeviationConstants deviation_constants(const OperatorFrame& t,
                                       const OperatorFrame& r,
                                       double tol = kDefaultTol);

/// Rank-one element attaining the one-sided constant against `reference`.
/// Returns nullopt when the reference family is not a frame.
std::optional<ModuleElement> deviation_witness(const OperatorFrame& t,
                                               const OperatorFrame& r,
                                               bool against_t,
                                               double tol = kDefaultTol);

struct EquivalenceReport {
  bool r_is_frame = false;
  DeviationConstants constants;
  FrameBounds bounds_T;
  FrameBounds bounds_R;
  // A / (sqrt(M) + 1)^2 and B (sqrt(M) + 1)^2 with M the inequality constant.
  std::optional<double> derived_lower;
  std::optional<double> derived_upper;
  bool consistent = false;
};

/// R is a frame iff the deviation inequality holds with a finite constant.
EquivalenceReport equivalence_check(const OperatorFrame& t,
                                    const OperatorFrame& r,
                                    double tol = kDefaultTol);

}  // namespace proframe

#endif  // PROFRAME_PERTURBATION_HPP_
