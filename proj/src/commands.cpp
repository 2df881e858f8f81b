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

#include "proframe/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "proframe/error.hpp"
#include "proframe/perturbation.hpp"
#include "proframe/random.hpp"
#include "proframe/tensor.hpp"

namespace proframe {
namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Check make_check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::string first_frame(const FrameDocument& doc, const CommandOptions& opts) {
  if (!opts.frame.empty()) return opts.frame;
  if (doc.frames.empty()) {
    throw Error(ErrorKind::kUnknownName, "document has no frames");
  }
  return doc.frames.begin()->first;
}

const std::string& require_other(const CommandOptions& opts,
                                 const std::string& command) {
  if (opts.other.empty()) {
    throw Error(ErrorKind::kUnknownName,
                "command '" + command + "' needs --other NAME");
  }
  return opts.other;
}

std::uint64_t seed_of(const FrameDocument& doc, const CommandOptions& opts) {
  if (opts.seed) return *opts.seed;
  if (doc.seed) return *doc.seed;
  return 0;
}

Table bounds_table(const std::string& name, const OperatorFrame& f,
                   double tol) {
  const FrameBounds b = optimal_bounds(f, tol);
  return {"Optimal bounds",
          {"frame", "A", "B", "class"},
          {{name, format_number(b.lower), format_number(b.upper),
            classify(b, tol).name()}}};
}

Table block_table(const OperatorFrame& f, double tol) {
  Table t{"Frame operator spectrum per block",
          {"block", "lambda_min", "lambda_max"},
          {}};
  const auto per_block = block_bounds(f, tol);
  for (std::size_t k = 0; k < per_block.size(); ++k) {
    t.rows.push_back({std::to_string(k), format_number(per_block[k].lower),
                      format_number(per_block[k].upper)});
  }
  return t;
}

Report cmd_bounds(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const OperatorFrame f = document_frame(doc, name);
  Report r{"bounds", {}, {}, {}};
  r.tables.push_back(bounds_table(name, f, opts.tol));
  r.tables.push_back(block_table(f, opts.tol));
  return r;
}

Report cmd_dual(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const OperatorFrame f = document_frame(doc, name);
  const OperatorFrame dual = canonical_dual(f, opts.tol);
  const double residual = dual_residual(f, dual);
  Report r{"dual", {}, {}, {}};
  r.tables.push_back(bounds_table(name + "_dual", dual, opts.tol));
  r.checks.push_back(make_check("dual reconstruction identity",
                                residual <= opts.tol,
                                "residual " + format_number(residual)));
  FrameDocument out = doc;
  put_frame(out, name + "_dual", dual);
  r.document = std::move(out);
  return r;
}

Report cmd_verify_dual(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const std::string other = require_other(opts, "verify-dual");
  const OperatorFrame f = document_frame(doc, name);
  const OperatorFrame g = document_frame(doc, other);
  const double residual = dual_residual(f, g);
  Report r{"verify-dual", {}, {}, {}};
  r.tables.push_back({"Dual residual",
                      {"frame", "dual", "residual"},
                      {{name, other, format_number(residual)}}});
  r.checks.push_back(make_check("sum T_i^* G_i = I", residual <= opts.tol,
                                "residual " + format_number(residual)));
  return r;
}

Report cmd_reconstruct(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const OperatorFrame f = document_frame(doc, name);
  ModuleElement x = ModuleElement::zero(f.space());
  std::string source;
  if (!opts.other.empty()) {
    x = document_element(doc, opts.other);
    source = opts.other;
  } else {
    Rng rng(seed_of(doc, opts));
    x = rng.module_element(f.space());
    source = "random(seed=" + std::to_string(seed_of(doc, opts)) + ")";
  }
  const ModuleElement rec = reconstruct(f, x, opts.tol);
  Report r{"reconstruct", {}, {}, {}};
  Table t{"Reconstruction residual (" + source + ")",
          {"block", "residual", "bound"},
          {}};
  bool ok = true;
  for (std::size_t k = 0; k < f.space().num_blocks(); ++k) {
    const double res = linalg::spectral_norm(rec.block(k) - x.block(k));
    const double bound =
        opts.rtol * std::max(1.0, linalg::spectral_norm(x.block(k)));
    ok = ok && res <= bound;
    t.rows.push_back({std::to_string(k), format_number(res),
                      format_number(bound)});
  }
  r.tables.push_back(std::move(t));
  r.checks.push_back(make_check("sum S^-1 T_i^* T_i x = x", ok, ""));
  return r;
}

Report cmd_compose(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const std::string qname = require_other(opts, "compose");
  const OperatorFrame f = document_frame(doc, name);
  const ModuleOperator q = document_operator(doc, qname);
  const FrameBounds b = optimal_bounds(f, opts.tol);
  const ComposedFrame c = compose_right(f, q, opts.tol);
  Report r{"compose", {}, {}, {}};
  r.tables.push_back(
      {"Right composition with " + qname,
       {"A", "B", "m'", "M'", "A m'", "B M'", "A(TQ)", "B(TQ)"},
       {{format_number(b.lower), format_number(b.upper),
         format_number(c.q_bounds.lower), format_number(c.q_bounds.upper),
         format_number(c.guaranteed_lower), format_number(c.guaranteed_upper),
         format_number(c.bounds.lower), format_number(c.bounds.upper)}}});
  r.checks.push_back(make_check(
      "A m' <= A(TQ)", c.bounds.lower >= c.guaranteed_lower - opts.rtol, ""));
  r.checks.push_back(make_check(
      "B(TQ) <= B M'", c.bounds.upper <= c.guaranteed_upper + opts.rtol, ""));
  return r;
}

Report cmd_transform(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const std::string tname = require_other(opts, "transform");
  const OperatorFrame f = document_frame(doc, name);
  const ThetaMap theta = document_theta(doc, tname, opts.tol);
  const TransformResult res = transform(f, theta, opts.tol);
  const auto source_blocks = block_bounds(f, opts.tol);
  const FrameBounds b = optimal_bounds(f, opts.tol);
  Report r{"transform", {}, {}, {}};
  Table t{"Transported spectrum per target block",
          {"target block", "source block", "lambda_min", "lambda_max"},
          {}};
  bool blocks_match = true;
  for (std::size_t l = 0; l < res.block_bounds.size(); ++l) {
    const std::size_t k = theta.hom().source_block(l);
    const double scale = std::max(1.0, source_blocks[k].upper);
    blocks_match =
        blocks_match &&
        std::abs(res.block_bounds[l].lower - source_blocks[k].lower) <=
            opts.rtol * scale &&
        std::abs(res.block_bounds[l].upper - source_blocks[k].upper) <=
            opts.rtol * scale;
    t.rows.push_back({std::to_string(l), std::to_string(k),
                      format_number(res.block_bounds[l].lower),
                      format_number(res.block_bounds[l].upper)});
  }
  r.tables.push_back(std::move(t));
  r.tables.push_back({"Bounds",
                      {"A", "B", "A(theta T)", "B(theta T)"},
                      {{format_number(b.lower), format_number(b.upper),
                        format_number(res.bounds.lower),
                        format_number(res.bounds.upper)}}});
  r.checks.push_back(make_check("energy transport",
                                res.energy_residual <= opts.rtol,
                                "residual " +
                                    format_number(res.energy_residual)));
  r.checks.push_back(make_check("<S_B theta x, theta y> = phi(<S_A x, y>)",
                                res.transport_residual <= opts.rtol,
                                "residual " +
                                    format_number(res.transport_residual)));
  r.checks.push_back(make_check("block bounds preserved", blocks_match, ""));
  r.checks.push_back(make_check(
      "bounds within [A, B]",
      res.bounds.lower >= b.lower - opts.rtol &&
          res.bounds.upper <= b.upper + opts.rtol,
      ""));
  return r;
}

Report cmd_perturb(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const std::string rname = require_other(opts, "perturb");
  const OperatorFrame t = document_frame(doc, name);
  const OperatorFrame rf = document_frame(doc, rname);
  const PerturbationReport p = perturb_check(t, rf, opts.tol);
  Report r{"perturb", {}, {}, {}};
  r.tables.push_back(
      {"Perturbation " + name + " - " + rname,
       {"A", "B", "M", "M < A", "A(T-R)", "B(T-R)", "(sqrtA-sqrtM)^2",
        "(sqrtB+sqrtM)^2"},
       {{format_number(p.bounds_T.lower), format_number(p.bounds_T.upper),
         format_number(p.bessel_R), yes_no(p.hypothesis),
         format_number(p.frame_diff.lower), format_number(p.frame_diff.upper),
         format_number(p.guaranteed_lower),
         format_number(p.guaranteed_upper)}}});
  r.checks.push_back(make_check("M < A implies T - R is a frame", p.satisfied,
                                ""));
  if (p.hypothesis) {
    r.checks.push_back(make_check(
        "lower bound >= (sqrtA-sqrtM)^2",
        p.frame_diff.lower >= p.guaranteed_lower - opts.rtol, ""));
  }
  r.checks.push_back(make_check(
      "upper bound <= (sqrtB+sqrtM)^2",
      p.frame_diff.upper <= p.guaranteed_upper + opts.rtol, ""));
  return r;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : "absent";
}

Report cmd_deviation(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const std::string rname = require_other(opts, "deviation");
  const OperatorFrame t = document_frame(doc, name);
  const OperatorFrame rf = document_frame(doc, rname);
  const EquivalenceReport e = equivalence_check(t, rf, opts.tol);
  Report r{"deviation", {}, {}, {}};
  r.tables.push_back({"Deviation constants " + name + " / " + rname,
                      {"M against T", "M against R", "M", "max", "R frame"},
                      {{optional_number(e.constants.against_T),
                        optional_number(e.constants.against_R),
                        optional_number(e.constants.M),
                        optional_number(e.constants.inequality_constant()),
                        yes_no(e.r_is_frame)}}});
  r.tables.push_back({"Derived bounds for R",
                      {"A(R)", "B(R)", "A/(sqrtM+1)^2", "B(sqrtM+1)^2"},
                      {{format_number(e.bounds_R.lower),
                        format_number(e.bounds_R.upper),
                        optional_number(e.derived_lower),
                        optional_number(e.derived_upper)}}});
  r.checks.push_back(make_check("equivalence consistent", e.consistent, ""));

  // Sampled ratio against T never exceeds the pencil constant.
  if (e.constants.against_T) {
    const OperatorFrame diff = difference_family(t, rf);
    const ModuleOperator sd = frame_operator(diff);
    const ModuleOperator st = frame_operator(t);
    Rng rng(seed_of(doc, opts));
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const ModuleElement x = rng.module_element(t.space());
      const AlgebraElement ed = inner_product(sd.apply(x), x);
      const AlgebraElement et = inner_product(st.apply(x), x);
      for (std::size_t k = 0; k < t.space().num_blocks(); ++k) {
        worst = std::max(worst, seminorm(ed, k) / seminorm(et, k));
      }
    }
    r.checks.push_back(make_check(
        "sampled ratio <= M against T",
        worst <= *e.constants.against_T + opts.rtol,
        "max sampled " + format_number(worst)));
  }
  return r;
}

Report cmd_tensor(const FrameDocument& doc, const CommandOptions& opts) {
  const std::string name = first_frame(doc, opts);
  const std::string gname = opts.other.empty() ? name : opts.other;
  const OperatorFrame f = document_frame(doc, name);
  const OperatorFrame g = document_frame(doc, gname);
  const TensorFrame tf = tensor_frame(f, g, opts.tol);
  const FrameBounds bf = optimal_bounds(f, opts.tol);
  const FrameBounds bg = optimal_bounds(g, opts.tol);
  const ModuleOperator expected =
      tensor_operator(frame_operator(f), frame_operator(g), tf.layout);
  const double op_res = op_uniform_norm(frame_operator(tf.frame) - expected);
  Report r{"tensor", {}, {}, {}};
  r.tables.push_back(
      {"Tensor bounds",
       {"frame", "A", "B", "class"},
       {{name, format_number(bf.lower), format_number(bf.upper),
         classify(bf, opts.tol).name()},
        {gname, format_number(bg.lower), format_number(bg.upper),
         classify(bg, opts.tol).name()},
        {name + "(x)" + gname, format_number(tf.bounds.lower),
         format_number(tf.bounds.upper),
         classify(tf.bounds, opts.tol).name()}}});
  r.checks.push_back(make_check("S_(T(x)L) = S_T (x) S_L", op_res <= opts.tol,
                                "residual " + format_number(op_res)));
  const double scale = std::max(1.0, bf.upper * bg.upper);
  r.checks.push_back(make_check(
      "bounds multiply",
      std::abs(tf.bounds.lower - bf.lower * bg.lower) <= opts.rtol * scale &&
          std::abs(tf.bounds.upper - bf.upper * bg.upper) <= opts.rtol * scale,
      ""));
  if (bf.lower > opts.tol && bg.lower > opts.tol) {
    const double res = tensor_dual_residual(
        f, canonical_dual(f, opts.tol), g, canonical_dual(g, opts.tol),
        opts.tol);
    r.checks.push_back(make_check("tensor of duals is a dual", res <= opts.tol,
                                  "residual " + format_number(res)));
  }
  return r;
}

Report cmd_fusion(const FrameDocument& doc, const CommandOptions& opts) {
  std::string name = opts.frame;
  if (name.empty()) {
    if (doc.fusion.empty()) {
      throw Error(ErrorKind::kUnknownName, "document has no fusion systems");
    }
    name = doc.fusion.begin()->first;
  }
  const FusionSystem sys = document_fusion(doc, name, opts.tol);
  const OperatorFrame f = fusion_to_operator_frame(sys);
  Report r{"fusion", {}, {}, {}};
  r.tables.push_back(bounds_table(name, f, opts.tol));
  const FusionDualPair pair = fusion_dual_pair(sys, opts.tol);
  const double res = dual_residual(pair.t, pair.q);
  const double conj = conjugation_residual(sys, opts.tol);
  const bool parseval = parseval_self_dual_check(sys, opts.tol);
  r.tables.push_back({"Dual pair",
                      {"A(T)", "B(T)", "A(Q)", "B(Q)", "dual residual",
                       "conjugation residual", "parseval self-dual"},
                      {{format_number(optimal_bounds(pair.t, opts.tol).lower),
                        format_number(optimal_bounds(pair.t, opts.tol).upper),
                        format_number(optimal_bounds(pair.q, opts.tol).lower),
                        format_number(optimal_bounds(pair.q, opts.tol).upper),
                        format_number(res), format_number(conj),
                        yes_no(parseval)}}});
  r.checks.push_back(make_check("Q is a dual of T", res <= opts.tol, ""));
  r.checks.push_back(make_check(
      "T and Q are frames",
      classify(pair.t, opts.tol).kind != FrameKind::kBesselOnly &&
          classify(pair.q, opts.tol).kind != FrameKind::kBesselOnly,
      ""));
  r.checks.push_back(make_check("conjugation invariance", conj <= opts.tol,
                                ""));
  return r;
}

GenSpec to_gen_spec(const GenerateSpec& g) {
  if (g.mode == "parseval") return {GenMode::kParseval, 1.0};
  if (g.mode == "tight") return {GenMode::kTight, g.lambda};
  if (g.mode == "near_singular") return {GenMode::kNearSingular, 1.0};
  return {GenMode::kGeneric, 1.0};
}

Report cmd_gen(const FrameDocument& doc, const CommandOptions& opts) {
  const GenerateSpec spec = doc.generate.value_or(GenerateSpec{});
  const std::uint64_t seed = seed_of(doc, opts);
  const OperatorFrame f =
      gen_frame(seed, document_space(doc), spec.count, to_gen_spec(spec));
  Report r{"gen", {}, {}, {}};
  r.tables.push_back(bounds_table(spec.name, f, opts.tol));
  FrameDocument out = doc;
  put_frame(out, spec.name, f);
  r.document = std::move(out);
  return r;
}

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# proframe " << command << "\n";
  for (const auto& t : tables) {
    os << "\n## " << t.title << "\n\n|";
    for (const auto& h : t.headers) os << " " << escape_cell(h) << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : t.rows) {
      os << "|";
      for (const auto& cell : row) os << " " << escape_cell(cell) << " |";
      os << "\n";
    }
  }
  if (!checks.empty()) {
    os << "\n## Checks\n\n| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : checks) {
      os << "| " << escape_cell(c.name) << " | "
         << (c.passed ? "pass" : "FAIL") << " | " << escape_cell(c.detail)
         << " |\n";
    }
  }
  os << "\nstatus: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    j["tables"].push_back(
        {{"title", t.title}, {"headers", t.headers}, {"rows", t.rows}});
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["status"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

Report run_command(const std::string& command, const FrameDocument& doc,
                   const CommandOptions& opts) {
  if (command == "bounds") return cmd_bounds(doc, opts);
  if (command == "dual") return cmd_dual(doc, opts);
  if (command == "verify-dual") return cmd_verify_dual(doc, opts);
  if (command == "reconstruct") return cmd_reconstruct(doc, opts);
  if (command == "compose") return cmd_compose(doc, opts);
  if (command == "transform") return cmd_transform(doc, opts);
  if (command == "perturb") return cmd_perturb(doc, opts);
  if (command == "deviation") return cmd_deviation(doc, opts);
  if (command == "tensor") return cmd_tensor(doc, opts);
  if (command == "fusion") return cmd_fusion(doc, opts);
  if (command == "gen") return cmd_gen(doc, opts);
  if (command == "selftest") {
    return run_selftest(document_space(doc), seed_of(doc, opts), opts.tol,
                        opts.rtol);
  }
  throw Error(ErrorKind::kUnknownName, "unknown command '" + command + "'");
}

}  // namespace proframe
