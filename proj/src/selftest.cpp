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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "proframe/commands.hpp"
#include "proframe/perturbation.hpp"
#include "proframe/random.hpp"
#include "proframe/tensor.hpp"

namespace proframe {
namespace {

constexpr int kFrames = 8;
constexpr int kSamples = 16;

// Most negative scaled eigenvalue of b - a over all blocks.
double order_gap(const AlgebraElement& a, const AlgebraElement& b) {
  double worst = 0.0;
  const AlgebraElement d = b - a;
  for (std::size_t k = 0; k < d.num_blocks(); ++k) {
    const RealVector ev = linalg::hermitian_eigenvalues(d.block(k));
    const double scale = std::max(1.0, linalg::spectral_norm(d.block(k)));
    worst = std::max(worst, -ev(0) / scale);
  }
  return worst;
}

ModuleOperator random_projection(Rng& rng, const ModuleSpace& space) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const int d = space.element_cols(k);
    const int rank = 1 + static_cast<int>(rng.index(d));
    const Matrix u = rng.unitary(d);
    const Matrix basis = u.leftCols(rank);
    blocks.push_back(basis * basis.adjoint());
  }
  return ModuleOperator(space, std::move(blocks));
}

struct Tracker {
  double worst = 0.0;
  void see(double v) { worst = std::max(worst, v); }
};

}  // namespace

Report run_selftest(const ModuleSpace& space, std::uint64_t seed, double tol,
                    double rtol) {
  Report r{"selftest", {}, {}, {}};
  Rng rng(seed);
  const std::size_t nblocks = space.num_blocks();
  const ModuleSpace scalar_space(AlgebraSignature({1}), 1);

  Tracker sandwich, extremal, seminorm_char, recon, dual_res, dual_op,
      dual_bounds, compose, transport, perturb, deviation, tensor_op,
      tensor_bounds, fusion_dual, fusion_conj, prop26;
  bool extremal_ok = true;
  bool perturb_ok = true;

  for (int f_idx = 0; f_idx < kFrames; ++f_idx) {
    const int count = 1 + static_cast<int>(rng.index(4));
    const OperatorFrame f =
        gen_frame(seed * 1000 + f_idx, space, count, {GenMode::kGeneric});
    const ModuleOperator s = frame_operator(f);
    const FrameBounds b = optimal_bounds(f, tol);

    for (int s_idx = 0; s_idx < kSamples; ++s_idx) {
      const ModuleElement x = rng.module_element(space);
      const AlgebraElement xx = inner_product(x, x);
      const AlgebraElement energy = inner_product(s.apply(x), x);
      sandwich.see(order_gap(xx.scaled(b.lower), energy));
      sandwich.see(order_gap(energy, xx.scaled(b.upper)));
      for (std::size_t k = 0; k < nblocks; ++k) {
        const double p2 = std::pow(module_seminorm(x, k), 2);
        const double pe = seminorm(energy, k);
        const double scale = std::max(1.0, b.upper * p2);
        seminorm_char.see((b.lower * p2 - pe) / scale);
        seminorm_char.see((pe - b.upper * p2) / scale);
      }
      const ModuleElement rec = reconstruct(f, x, tol);
      for (std::size_t k = 0; k < nblocks; ++k) {
        recon.see(linalg::spectral_norm(rec.block(k) - x.block(k)) /
                  std::max(1.0, linalg::spectral_norm(x.block(k))));
      }
    }

    // The bounds cannot be improved: the extremal eigenvector violates
    // A + eps and B - eps.
    for (std::size_t k = 0; k < nblocks; ++k) {
      const linalg::HermitianEigen eig = linalg::hermitian_eigen(s.block(k));
      const double lo = eig.values(0);
      const double hi = eig.values(eig.values.size() - 1);
      if (std::abs(lo - b.lower) <= 1e-12 * std::max(1.0, b.lower)) {
        extremal_ok = extremal_ok && lo < b.lower + 1e-6;
      }
      if (std::abs(hi - b.upper) <= 1e-12 * std::max(1.0, b.upper)) {
        extremal_ok = extremal_ok && hi > b.upper - 1e-6;
      }
    }

    const OperatorFrame dual = canonical_dual(f, tol);
    dual_res.see(dual_residual(f, dual));
    const ModuleOperator s_inv = op_calculus(s, Calculus::kInv, tol);
    dual_op.see(op_uniform_norm(frame_operator(dual) - s_inv) /
                std::max(1.0, op_uniform_norm(s_inv)));
    const FrameBounds db = optimal_bounds(dual, tol);
    dual_bounds.see(std::abs(db.lower - 1.0 / b.upper) /
                    std::max(1.0, 1.0 / b.upper));
    dual_bounds.see(std::abs(db.upper - 1.0 / b.lower) /
                    std::max(1.0, 1.0 / b.lower));

    const ModuleOperator q = rng.self_adjoint_invertible(space);
    const ComposedFrame c = compose_right(f, q, tol);
    compose.see(c.guaranteed_lower - c.bounds.lower);
    compose.see(c.bounds.upper - c.guaranteed_upper);

    std::vector<Matrix> g;
    std::vector<Matrix> u;
    std::vector<std::size_t> map;
    for (std::size_t k = 0; k < nblocks; ++k) {
      map.push_back(k);
      u.push_back(rng.unitary(space.element_rows(k)));
      g.push_back(rng.unitary(space.element_cols(k)));
    }
    const BlockHom hom(space.signature(), space.signature(), map, u);
    const ThetaMap theta(space, hom, g);
    const TransformResult tr = transform(f, theta, tol);
    transport.see(tr.transport_residual);
    transport.see(tr.energy_residual);
    transport.see(std::abs(tr.bounds.lower - b.lower) /
                  std::max(1.0, b.upper));
    transport.see(std::abs(tr.bounds.upper - b.upper) /
                  std::max(1.0, b.upper));

    const double shrink = rng.uniform(0.05, 0.9);
    OperatorFrame rf =
        gen_frame(seed * 1000 + 500 + f_idx, space, count, {GenMode::kGeneric});
    const double rb = optimal_bounds(rf, tol).upper;
    std::vector<ModuleOperator> r_ops;
    for (const auto& t : rf.ops()) {
      r_ops.push_back(t.scaled(std::sqrt(shrink * b.lower / rb)));
    }
    rf = OperatorFrame(space, std::move(r_ops));
    const PerturbationReport p = perturb_check(f, rf, tol);
    perturb_ok = perturb_ok && p.hypothesis && p.satisfied;
    perturb.see(p.guaranteed_lower - p.frame_diff.lower);
    perturb.see(p.frame_diff.upper - p.guaranteed_upper);

    const DeviationConstants dc = deviation_constants(f, rf, tol);
    const ModuleOperator sd = frame_operator(difference_family(f, rf));
    for (int s_idx = 0; s_idx < kSamples; ++s_idx) {
      const ModuleElement x = rng.module_element(space);
      const AlgebraElement ed = inner_product(sd.apply(x), x);
      const AlgebraElement et = inner_product(s.apply(x), x);
      for (std::size_t k = 0; k < nblocks; ++k) {
        deviation.see(seminorm(ed, k) / seminorm(et, k) - *dc.against_T);
      }
    }

    const OperatorFrame small = gen_frame(seed * 1000 + 900 + f_idx,
                                          scalar_space, 2, {GenMode::kGeneric});
    const TensorFrame tf = tensor_frame(f, small, tol);
    const ModuleOperator expected = tensor_operator(
        s, frame_operator(small), tf.layout);
    tensor_op.see(op_uniform_norm(frame_operator(tf.frame) - expected) /
                  std::max(1.0, op_uniform_norm(expected)));
    const FrameBounds bs = optimal_bounds(small, tol);
    const double tscale = std::max(1.0, b.upper * bs.upper);
    tensor_bounds.see(std::abs(tf.bounds.lower - b.lower * bs.lower) / tscale);
    tensor_bounds.see(std::abs(tf.bounds.upper - b.upper * bs.upper) / tscale);

    std::vector<FusionPair> pairs;
    pairs.push_back({SubmoduleProjection(ModuleOperator::identity(space)),
                     CentralWeight::uniform(space.signature(), 1.0)});
    for (int i = 0; i < 3; ++i) {
      std::vector<double> w;
      for (std::size_t k = 0; k < nblocks; ++k) w.push_back(rng.uniform(0.5, 2));
      pairs.push_back({SubmoduleProjection(random_projection(rng, space)),
                       CentralWeight(std::move(w))});
    }
    const FusionSystem sys(space, std::move(pairs));
    const FusionDualPair fp = fusion_dual_pair(sys, tol);
    fusion_dual.see(dual_residual(fp.t, fp.q));
    fusion_conj.see(conjugation_residual(sys, tol));

    const ModuleOperator t_inv = rng.module_operator(space);
    for (int s_idx = 0; s_idx < kSamples; ++s_idx) {
      const ModuleElement x = rng.module_element(space);
      prop26.see(sandwich_check(t_inv, x, tol) ? 0.0 : 1.0);
    }
  }

  const auto add = [&r](const std::string& name, const Tracker& t,
                        double limit) {
    r.checks.push_back({name, t.worst <= limit,
                        "worst " + format_number(t.worst) + " (limit " +
                            format_number(limit) + ")"});
  };
  add("frame sandwich A<x,x> <= sum <T_i x,T_i x> <= B<x,x>", sandwich, tol);
  r.checks.push_back({"optimal bounds attained", extremal_ok, ""});
  add("seminorm characterization", seminorm_char, rtol);
  add("reconstruction", recon, rtol);
  add("canonical dual identity", dual_res, tol);
  add("dual frame operator = S^-1", dual_op, tol);
  add("dual bounds = (1/B, 1/A)", dual_bounds, rtol);
  add("surjective composition bounds", compose, rtol);
  add("theta/phi transport", transport, rtol);
  r.checks.push_back({"perturbation hypothesis and conclusion", perturb_ok,
                      ""});
  add("perturbation bounds", perturb, rtol);
  add("deviation constant dominates sampled ratio", deviation, rtol);
  add("tensor frame operator", tensor_op, tol);
  add("tensor bounds multiply", tensor_bounds, rtol);
  add("fusion dual pair", fusion_dual, tol);
  add("fusion conjugation invariance", fusion_conj, tol);
  add("operator sandwich", prop26, 0.0);

  std::string sig;
  for (int n : space.signature().dims()) {
    sig += (sig.empty() ? "" : ",") + std::to_string(n);
  }
  r.tables.push_back({"Instance",
                      {"signature", "rank", "seed", "frames", "samples"},
                      {{"(" + sig + ")", std::to_string(space.rank()),
                        std::to_string(seed), std::to_string(kFrames),
                        std::to_string(kSamples)}}});
  return r;
}

}  // namespace proframe
