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

#ifndef PROFRAME_RANDOM_HPP_
#define PROFRAME_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "proframe/algebra.hpp"
#include "proframe/module.hpp"

namespace proframe {

/// Seeded source of random test instances. Same seed, same sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);

  // Entries are standard complex Gaussians: real and imaginary parts
  // N(0, 1/2).
  Matrix gaussian_matrix(int rows, int cols);
  Matrix unitary(int n);
  // Hermitian positive definite with eigenvalues in [lo, hi].
  Matrix positive_definite(int n, double lo, double hi);

  AlgebraElement element(const AlgebraSignature& sig);
  AlgebraElement positive_element(const AlgebraSignature& sig, double lo = 0.0,
                                  double hi = 2.0);
  ModuleElement module_element(const ModuleSpace& space);
  ModuleOperator module_operator(const ModuleSpace& space);
  ModuleOperator self_adjoint_invertible(const ModuleSpace& space,
                                         double min_abs = 0.2,
                                         double max_abs = 2.0);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace proframe

#endif  // PROFRAME_RANDOM_HPP_
