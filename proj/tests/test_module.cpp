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

#include <gtest/gtest.h>

#include <cmath>

#include "proframe/module.hpp"
#include "proframe/random.hpp"
#include "support.hpp"

namespace proframe {
namespace {

using testing::diag;
using testing::mat;
using testing::max_abs;
using testing::order_margin;
using testing::sig;

ModuleElement scalar_row(std::initializer_list<Complex> xs) {
  Matrix row(1, xs.size());
  int i = 0;
  for (const Complex& x : xs) row(0, i++) = x;
  return ModuleElement(ModuleSpace(sig({1}), static_cast<int>(xs.size())),
                       {row});
}

TEST(ModuleSpace, Shapes) {
  const ModuleSpace s(sig({1, 2}), 3);
  EXPECT_EQ(s.element_rows(1), 2);
  EXPECT_EQ(s.element_cols(1), 6);
  EXPECT_THROW(ModuleSpace(sig({1}), 0), Error);
  EXPECT_THROW(ModuleElement(s, {Matrix::Zero(1, 3), Matrix::Zero(2, 5)}),
               Error);
  EXPECT_THROW(ModuleOperator(s, {Matrix::Zero(3, 3), Matrix::Zero(5, 5)}),
               Error);
}

TEST(InnerProduct, Examples) {
  const ModuleSpace s(sig({1}), 2);
  EXPECT_EQ(inner_product(ModuleElement::zero(s), ModuleElement::zero(s))
                .block(0)(0, 0),
            Complex(0));
  EXPECT_EQ(inner_product(scalar_row({1, 0}), scalar_row({0, 1})).block(0)(0, 0),
            Complex(0));
  EXPECT_EQ(inner_product(scalar_row({1, 2}), scalar_row({3, 1})).block(0)(0, 0),
            Complex(5));
  const ModuleElement c = scalar_row({Complex(0, 1), 0});
  EXPECT_EQ(inner_product(c, scalar_row({1, 0})).block(0)(0, 0),
            Complex(0, 1));
}

TEST(InnerProduct, Axioms) {
  Rng rng(11);
  const ModuleSpace s(sig({1, 2}), 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const ModuleElement x = rng.module_element(s);
    const ModuleElement x2 = rng.module_element(s);
    const ModuleElement y = rng.module_element(s);
    const AlgebraElement a = rng.element(s.signature());
    const AlgebraElement xy = inner_product(x, y);
    const AlgebraElement yx = inner_product(y, x);
    const AlgebraElement lin = inner_product(x.left_multiply(a) + x2, y);
    const AlgebraElement lin_ref = a * xy + inner_product(x2, y);
    const AlgebraElement xx = inner_product(x, x);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_LT(max_abs(xy.block(k) - yx.block(k).adjoint()),
                1e-12 * std::max(1.0, max_abs(xy.block(k))));
      EXPECT_LT(testing::rel_diff(lin.block(k), lin_ref.block(k)), 1e-12);
      EXPECT_GE(testing::scaled_min_eig(xx.block(k)), -1e-12);
      EXPECT_GT(seminorm(xx, k), 0.0);
    }
  }
}

TEST(ModuleSeminorm, Examples) {
  const ModuleSpace s(sig({1, 2}), 2);
  EXPECT_EQ(module_seminorm(ModuleElement::zero(s), 1), 0.0);
  EXPECT_NEAR(module_seminorm(scalar_row({3, 4}), 0), 5.0, 1e-14);
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const ModuleElement x = rng.module_element(s);
    const AlgebraElement a = rng.element(s.signature());
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_LE(module_seminorm(x.left_multiply(a), k),
                seminorm(a, k) * module_seminorm(x, k) * (1 + 1e-12));
    }
  }
}

TEST(Coordinates, RoundTrip) {
  Rng rng(13);
  const ModuleSpace s(sig({2, 1}), 3);
  std::vector<AlgebraElement> coords;
  for (int i = 0; i < 3; ++i) coords.push_back(rng.element(s.signature()));
  const ModuleElement x = ModuleElement::from_coordinates(s, coords);
  for (int i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_EQ(x.coordinate(i).block(k), coords[i].block(k));
    }
  }
  EXPECT_THROW(x.coordinate(3), Error);
}

TEST(Operators, ApplyExamples) {
  const ModuleSpace s(sig({1}), 2);
  const ModuleElement x = scalar_row({1, 2});
  EXPECT_EQ(ModuleOperator::identity(s).apply(x).block(0), x.block(0));
  EXPECT_EQ(op_apply(ModuleOperator::zero(s), x).block(0), Matrix::Zero(1, 2));
  const ModuleOperator t(s, {mat({{1, 1}, {0, 1}})});
  EXPECT_EQ(t.apply(x).block(0), scalar_row({1, 3}).block(0));
}

TEST(Operators, AdjointComposeAndLinearity) {
  Rng rng(14);
  const ModuleSpace s(sig({1, 2}), 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const ModuleOperator t = rng.module_operator(s);
    const ModuleOperator u = rng.module_operator(s);
    const ModuleElement x = rng.module_element(s);
    const ModuleElement y = rng.module_element(s);
    const AlgebraElement a = rng.element(s.signature());
    const AlgebraElement lhs = inner_product(t.apply(x), y);
    const AlgebraElement rhs = inner_product(x, op_adjoint(t).apply(y));
    const ModuleElement tu = op_compose(t, u).apply(x);
    const ModuleElement t_u = t.apply(u.apply(x));
    const ModuleElement tax = t.apply(x.left_multiply(a));
    const ModuleElement atx = t.apply(x).left_multiply(a);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_LT(max_abs(lhs.block(k) - rhs.block(k)),
                1e-12 * std::max(1.0, max_abs(lhs.block(k))));
      EXPECT_LT(testing::rel_diff(tu.block(k), t_u.block(k)), 1e-12);
      EXPECT_LT(testing::rel_diff(tax.block(k), atx.block(k)), 1e-12);
      EXPECT_LE(module_seminorm(t.apply(x), k),
                op_seminorm(t, k) * module_seminorm(x, k) * (1 + 1e-12) +
                    kDefaultTol);
    }
  }
  const ModuleOperator t = rng.module_operator(s);
  EXPECT_EQ(op_compose(t, ModuleOperator::identity(s)).block(1), t.block(1));
  EXPECT_EQ(t.adjoint().adjoint().block(0), t.block(0));
}

TEST(Operators, Norms) {
  const ModuleSpace one(sig({1}), 2);
  EXPECT_NEAR(op_uniform_norm(ModuleOperator::identity(one)), 1.0, 1e-14);
  EXPECT_NEAR(op_seminorm(ModuleOperator(one, {diag({2, 3})}), 0), 3.0, 1e-14);
  const ModuleSpace two(sig({1, 1}), 1);
  const ModuleOperator t(two, {diag({2}), diag({5})});
  EXPECT_NEAR(op_uniform_norm(t), 5.0, 1e-14);
}

TEST(Operators, PositivityAndCalculus) {
  Rng rng(15);
  const ModuleSpace s(sig({2, 1}), 2);
  const ModuleOperator id = ModuleOperator::identity(s);
  const ModuleOperator sq = op_calculus(id, Calculus::kSqrt);
  EXPECT_LT(max_abs(sq.block(0) - id.block(0)), 1e-14);
  for (int trial = 0; trial < 200; ++trial) {
    const ModuleOperator t = rng.module_operator(s);
    const ModuleOperator pos = op_compose(op_adjoint(t), t);
    EXPECT_TRUE(op_is_positive(pos));
    EXPECT_TRUE(op_is_self_adjoint(pos));
    const ModuleOperator shifted = pos + id.scaled(0.1);
    const ModuleOperator is = op_calculus(shifted, Calculus::kInvSqrt);
    const ModuleOperator inv = op_calculus(shifted, Calculus::kInv);
    const ModuleOperator lu_inv = op_inverse(shifted);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_LT(testing::rel_diff(is.block(k) * is.block(k), inv.block(k)),
                1e-10);
      EXPECT_LT(testing::rel_diff(inv.block(k), lu_inv.block(k)), 1e-10);
    }
  }
  EXPECT_FALSE(op_is_invertible(ModuleOperator::zero(s)));
  EXPECT_THROW(op_inverse(ModuleOperator::zero(s)), Error);
}

TEST(Sandwich, Examples) {
  Rng rng(16);
  const ModuleSpace s(sig({1, 2}), 2);
  const ModuleElement x = rng.module_element(s);
  EXPECT_TRUE(sandwich_check(ModuleOperator::identity(s), x));
  EXPECT_TRUE(sandwich_check(ModuleOperator::identity(s).scaled(2.0), x));
  EXPECT_THROW(sandwich_check(ModuleOperator::zero(s), x), Error);
}

// Prop 2.6 with a direct PSD oracle on both differences.
TEST(Sandwich, RandomInstances) {
  Rng rng(17);
  for (const std::vector<int>& dims :
       {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2}}) {
    const ModuleSpace s(sig(dims), 2);
    for (int trial = 0; trial < 1000; ++trial) {
      const ModuleOperator t = rng.module_operator(s);
      const ModuleElement x = rng.module_element(s);
      ASSERT_TRUE(sandwich_check(t, x));
      const double hi = std::pow(op_uniform_norm(t), 2);
      const double lo = std::pow(op_uniform_norm(op_inverse(t)), -2);
      const AlgebraElement xx = inner_product(x, x);
      const AlgebraElement tt = inner_product(t.apply(x), t.apply(x));
      EXPECT_GE(order_margin(xx.scaled(lo), tt), -1e-9);
      EXPECT_GE(order_margin(tt, xx.scaled(hi)), -1e-9);
    }
  }
}

TEST(Surjectivity, Examples) {
  const ModuleSpace s(sig({1}), 2);
  const auto id = surjectivity_bounds(ModuleOperator::identity(s));
  ASSERT_TRUE(id);
  EXPECT_NEAR(id->lower, 1.0, 1e-14);
  EXPECT_NEAR(id->upper, 1.0, 1e-14);
  const auto d = surjectivity_bounds(ModuleOperator(s, {diag({2, 3})}));
  ASSERT_TRUE(d);
  EXPECT_NEAR(d->lower, 4.0, 1e-12);
  EXPECT_NEAR(d->upper, 9.0, 1e-12);
  EXPECT_FALSE(surjectivity_bounds(ModuleOperator(s, {diag({1, 0})})));
  try {
    surjectivity_bounds(ModuleOperator(s, {mat({{1, 1}, {0, 1}})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotSelfAdjoint);
  }
}

// Lemma 1.9: for self-adjoint T, surjective iff bounded below in norm iff
// bounded below in the inner-product order.
TEST(Surjectivity, EquivalencesOnRandomSelfAdjoint) {
  Rng rng(18);
  const ModuleSpace s(sig({1, 2}), 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool singular = trial % 4 == 0;
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < 2; ++k) {
      const int d = s.element_cols(k);
      const Matrix u = rng.unitary(d);
      Matrix dg = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i) {
        const double mag = rng.uniform(0.2, 2.0);
        dg(i, i) = rng.uniform(0, 1) < 0.5 ? -mag : mag;
      }
      if (singular && k == 1) dg(0, 0) = 0.0;
      blocks.push_back(u * dg * u.adjoint());
    }
    const ModuleOperator t(s, blocks);
    const auto b = surjectivity_bounds(t);
    ASSERT_EQ(b.has_value(), !singular);
    ASSERT_EQ(op_is_invertible(t), !singular);
    const ModuleElement x = rng.module_element(s);
    if (b) {
      const AlgebraElement xx = inner_product(x, x);
      const AlgebraElement tt = inner_product(t.apply(x), t.apply(x));
      EXPECT_GE(order_margin(xx.scaled(b->lower), tt), -1e-9);
      EXPECT_GE(order_margin(tt, xx.scaled(b->upper)), -1e-9);
      for (std::size_t k = 0; k < 2; ++k) {
        const double px = module_seminorm(x, k);
        const double ptx = module_seminorm(t.apply(x), k);
        EXPECT_GE(ptx, std::sqrt(b->lower) * px * (1 - 1e-12));
        EXPECT_LE(ptx, std::sqrt(b->upper) * px * (1 + 1e-12));
      }
    } else {
      // A kernel vector: zero lower norm bound.
      const Eigen::JacobiSVD<Matrix> svd(t.block(1), Eigen::ComputeFullV);
      Matrix row = Matrix::Zero(2, 4);
      row.row(0) = svd.matrixV().col(3).adjoint();
      const ModuleElement z(s, {Matrix::Zero(1, 2), row});
      EXPECT_LT(module_seminorm(t.apply(z), 1), 1e-12);
      EXPECT_NEAR(module_seminorm(z, 1), 1.0, 1e-12);
    }
  }
}

TEST(L2InnerProduct, SumsCoordinatewise) {
  Rng rng(19);
  const ModuleSpace s(sig({2}), 1);
  CoefficientSequence c{s, {rng.module_element(s), rng.module_element(s)}};
  CoefficientSequence d{s, {rng.module_element(s), rng.module_element(s)}};
  const AlgebraElement want =
      inner_product(c.items[0], d.items[0]) + inner_product(c.items[1], d.items[1]);
  EXPECT_LT(max_abs(l2_inner_product(c, d).block(0) - want.block(0)), 1e-14);
  d.items.pop_back();
  EXPECT_THROW(l2_inner_product(c, d), Error);
}

}  // namespace
}  // namespace proframe
