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

#include "proframe/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "proframe/error.hpp"

namespace proframe {
namespace {

using nlohmann::json;

bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

bool same_blocks(const BlockList& a, const BlockList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_matrix(a[i], b[i])) return false;
  }
  return true;
}

template <typename Map, typename Eq>
bool same_map(const Map& a, const Map& b, Eq eq) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !eq(ia->second, ib->second)) return false;
  }
  return true;
}

[[noreturn]] void shape_error(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::kShapeMismatch, where + ": " + msg);
}

double read_number(const json& j, const std::string& where) {
  if (!j.is_number()) shape_error(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) shape_error(where, "number is not finite");
  return v;
}

int read_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) shape_error(where, "expected an integer");
  return j.get<int>();
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    shape_error(where, std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

Matrix read_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) shape_error(where, "expected a matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols =
      j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      shape_error(where, "row " + std::to_string(r) + " has the wrong length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[c];
      const std::string at =
          where + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (!e.is_array() || e.size() != 2) shape_error(at, "expected [re, im]");
      m(r, c) = Complex(read_number(e[0], at), read_number(e[1], at));
    }
  }
  return m;
}

json write_matrix(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BlockList read_blocks(const json& j, const std::string& where) {
  if (!j.is_array()) shape_error(where, "expected a list of blocks");
  BlockList out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(read_matrix(j[k], where + " block " + std::to_string(k)));
  }
  return out;
}

json write_blocks(const BlockList& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(write_matrix(b));
  return out;
}

void check_blocks(const BlockList& blocks, const std::vector<int>& rows,
                  const std::vector<int>& cols, const std::string& where) {
  if (blocks.size() != rows.size()) {
    shape_error(where, "expected " + std::to_string(rows.size()) +
                           " blocks, got " + std::to_string(blocks.size()));
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].rows() != rows[k] || blocks[k].cols() != cols[k]) {
      shape_error(where + " block " + std::to_string(k),
                  "expected " + std::to_string(rows[k]) + "x" +
                      std::to_string(cols[k]) + ", got " +
                      std::to_string(blocks[k].rows()) + "x" +
                      std::to_string(blocks[k].cols()));
    }
  }
}

void validate(const FrameDocument& doc) {
  if (doc.signature.empty()) shape_error("signature", "must be nonempty");
  for (int n : doc.signature) {
    if (n < 1) shape_error("signature", "block dimensions must be >= 1");
  }
  if (doc.rank < 1) shape_error("rank", "must be >= 1");
  std::vector<int> dims = doc.signature;
  std::vector<int> wide;
  for (int n : dims) wide.push_back(doc.rank * n);

  for (const auto& [name, ops] : doc.frames) {
    if (ops.empty()) shape_error("frame '" + name + "'", "must be nonempty");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      check_blocks(ops[i], wide, wide,
                   "frame '" + name + "' operator " + std::to_string(i));
    }
  }
  for (const auto& [name, blocks] : doc.operators) {
    check_blocks(blocks, wide, wide, "operator '" + name + "'");
  }
  for (const auto& [name, blocks] : doc.elements) {
    check_blocks(blocks, dims, wide, "element '" + name + "'");
  }
  for (const auto& [name, sys] : doc.fusion) {
    const std::string where = "fusion '" + name + "'";
    if (sys.projections.empty()) shape_error(where, "must be nonempty");
    if (sys.projections.size() != sys.weights.size()) {
      shape_error(where, "needs one weight per projection");
    }
    for (std::size_t i = 0; i < sys.projections.size(); ++i) {
      check_blocks(sys.projections[i], wide, wide,
                   where + " projection " + std::to_string(i));
      if (sys.weights[i].size() != dims.size()) {
        shape_error(where + " weight " + std::to_string(i),
                    "needs one scalar per block");
      }
    }
  }
  for (const auto& [name, hom] : doc.homs) {
    const std::string where = "hom '" + name + "'";
    if (hom.target.empty()) shape_error(where, "target must be nonempty");
    if (hom.block_map.size() != hom.target.size()) {
      shape_error(where, "block_map needs one entry per target block");
    }
    for (std::size_t l = 0; l < hom.target.size(); ++l) {
      if (hom.block_map[l] >= dims.size()) {
        shape_error(where, "block_map entry " + std::to_string(l) +
                               " out of range");
      }
      if (hom.target[l] != dims[hom.block_map[l]]) {
        shape_error(where, "target block " + std::to_string(l) +
                               " dimension differs from its source block");
      }
    }
    check_blocks(hom.conjugators, hom.target, hom.target,
                 where + " conjugators");
  }
  for (const auto& [name, theta] : doc.thetas) {
    const std::string where = "theta '" + name + "'";
    const auto it = doc.homs.find(theta.hom);
    if (it == doc.homs.end()) {
      shape_error(where, "unknown hom '" + theta.hom + "'");
    }
    std::vector<int> target_wide;
    for (int n : it->second.target) target_wide.push_back(doc.rank * n);
    check_blocks(theta.module_conjugators, target_wide, target_wide,
                 where + " module_conjugators");
  }
  if (doc.generate) {
    const auto& g = *doc.generate;
    if (g.count < 1) shape_error("generate", "count must be >= 1");
    if (g.mode != "generic" && g.mode != "parseval" && g.mode != "tight" &&
        g.mode != "near_singular") {
      shape_error("generate", "unknown mode '" + g.mode + "'");
    }
    if (!std::isfinite(g.lambda) || g.lambda <= 0.0) {
      shape_error("generate", "lambda must be positive");
    }
  }
}

[[noreturn]] void unknown(const std::string& what, const std::string& name) {
  throw Error(ErrorKind::kUnknownName, "no " + what + " named '" + name + "'");
}

}  // namespace

bool HomSpec::operator==(const HomSpec& o) const {
  return target == o.target && block_map == o.block_map &&
         same_blocks(conjugators, o.conjugators);
}

bool ThetaSpec::operator==(const ThetaSpec& o) const {
  return hom == o.hom && same_blocks(module_conjugators, o.module_conjugators);
}

bool FusionSpec::operator==(const FusionSpec& o) const {
  if (weights != o.weights || projections.size() != o.projections.size()) {
    return false;
  }
  for (std::size_t i = 0; i < projections.size(); ++i) {
    if (!same_blocks(projections[i], o.projections[i])) return false;
  }
  return true;
}

bool FrameDocument::operator==(const FrameDocument& o) const {
  const auto frames_eq = [](const std::vector<BlockList>& a,
                            const std::vector<BlockList>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_blocks(a[i], b[i])) return false;
    }
    return true;
  };
  const auto eq = [](const auto& a, const auto& b) { return a == b; };
  return signature == o.signature && rank == o.rank &&
         same_map(frames, o.frames, frames_eq) &&
         same_map(operators, o.operators, same_blocks) &&
         same_map(elements, o.elements, same_blocks) &&
         same_map(fusion, o.fusion, eq) && same_map(homs, o.homs, eq) &&
         same_map(thetas, o.thetas, eq) && generate == o.generate &&
         seed == o.seed;
}

namespace {

FrameDocument from_json(const json& j) {
  if (!j.is_object()) shape_error("document", "top level must be an object");

  FrameDocument doc;
  const json& sig = require(j, "signature", "document");
  if (!sig.is_array()) shape_error("signature", "expected a list of integers");
  for (std::size_t k = 0; k < sig.size(); ++k) {
    doc.signature.push_back(read_int(sig[k], "signature"));
  }
  doc.rank = read_int(require(j, "rank", "document"), "rank");

  if (j.contains("frames")) {
    for (const auto& [name, ops] : j.at("frames").items()) {
      if (!ops.is_array()) shape_error("frame '" + name + "'", "expected a list");
      std::vector<BlockList> list;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        list.push_back(read_blocks(
            ops[i], "frame '" + name + "' operator " + std::to_string(i)));
      }
      doc.frames.emplace(name, std::move(list));
    }
  }
  if (j.contains("operators")) {
    for (const auto& [name, blocks] : j.at("operators").items()) {
      doc.operators.emplace(name,
                            read_blocks(blocks, "operator '" + name + "'"));
    }
  }
  if (j.contains("elements")) {
    for (const auto& [name, blocks] : j.at("elements").items()) {
      doc.elements.emplace(name, read_blocks(blocks, "element '" + name + "'"));
    }
  }
  if (j.contains("fusion")) {
    for (const auto& [name, sys] : j.at("fusion").items()) {
      const std::string where = "fusion '" + name + "'";
      FusionSpec spec;
      const json& projs = require(sys, "projections", where);
      const json& weights = require(sys, "weights", where);
      if (!projs.is_array() || !weights.is_array()) {
        shape_error(where, "projections and weights must be lists");
      }
      for (std::size_t i = 0; i < projs.size(); ++i) {
        spec.projections.push_back(
            read_blocks(projs[i], where + " projection " + std::to_string(i)));
      }
      for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::string at = where + " weight " + std::to_string(i);
        if (!weights[i].is_array()) shape_error(at, "expected a list");
        std::vector<double> w;
        for (const auto& v : weights[i]) w.push_back(read_number(v, at));
        spec.weights.push_back(std::move(w));
      }
      doc.fusion.emplace(name, std::move(spec));
    }
  }
  if (j.contains("homs")) {
    for (const auto& [name, h] : j.at("homs").items()) {
      const std::string where = "hom '" + name + "'";
      HomSpec spec;
      for (const auto& n : require(h, "target", where)) {
        spec.target.push_back(read_int(n, where + " target"));
      }
      for (const auto& s : require(h, "block_map", where)) {
        const int v = read_int(s, where + " block_map");
        if (v < 0) shape_error(where, "block_map entries must be >= 0");
        spec.block_map.push_back(static_cast<std::size_t>(v));
      }
      spec.conjugators =
          read_blocks(require(h, "conjugators", where), where + " conjugators");
      doc.homs.emplace(name, std::move(spec));
    }
  }
  if (j.contains("thetas")) {
    for (const auto& [name, t] : j.at("thetas").items()) {
      const std::string where = "theta '" + name + "'";
      ThetaSpec spec;
      const json& hom = require(t, "hom", where);
      if (!hom.is_string()) shape_error(where, "hom must be a name");
      spec.hom = hom.get<std::string>();
      spec.module_conjugators =
          read_blocks(require(t, "module_conjugators", where),
                      where + " module_conjugators");
      doc.thetas.emplace(name, std::move(spec));
    }
  }
  if (j.contains("generate")) {
    const json& g = j.at("generate");
    if (!g.is_object()) shape_error("generate", "expected an object");
    GenerateSpec spec;
    if (g.contains("name")) spec.name = g.at("name").get<std::string>();
    if (g.contains("count")) spec.count = read_int(g.at("count"), "generate");
    if (g.contains("mode")) spec.mode = g.at("mode").get<std::string>();
    if (g.contains("lambda")) {
      spec.lambda = read_number(g.at("lambda"), "generate");
    }
    doc.generate = spec;
  }
  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_unsigned()) {
      shape_error("seed", "expected a nonnegative integer");
    }
    doc.seed = s.get<std::uint64_t>();
  }
  validate(doc);
  return doc;
}

}  // namespace

FrameDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    // Syntax errors and numeric overflow such as 1e999.
    throw Error(ErrorKind::kParse, e.what());
  }
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    // Wrong JSON types inside an otherwise well-formed document.
    throw Error(ErrorKind::kShapeMismatch, e.what());
  }
}

FrameDocument parse_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

std::string emit_document(const FrameDocument& doc) {
  json j;
  j["signature"] = doc.signature;
  j["rank"] = doc.rank;
  if (!doc.frames.empty()) {
    json frames = json::object();
    for (const auto& [name, ops] : doc.frames) {
      json list = json::array();
      for (const auto& op : ops) list.push_back(write_blocks(op));
      frames[name] = std::move(list);
    }
    j["frames"] = std::move(frames);
  }
  if (!doc.operators.empty()) {
    for (const auto& [name, b] : doc.operators) {
      j["operators"][name] = write_blocks(b);
    }
  }
  if (!doc.elements.empty()) {
    for (const auto& [name, b] : doc.elements) {
      j["elements"][name] = write_blocks(b);
    }
  }
  for (const auto& [name, sys] : doc.fusion) {
    json projs = json::array();
    for (const auto& p : sys.projections) projs.push_back(write_blocks(p));
    j["fusion"][name] = {{"projections", projs}, {"weights", sys.weights}};
  }
  for (const auto& [name, h] : doc.homs) {
    j["homs"][name] = {{"target", h.target},
                       {"block_map", h.block_map},
                       {"conjugators", write_blocks(h.conjugators)}};
  }
  for (const auto& [name, t] : doc.thetas) {
    j["thetas"][name] = {{"hom", t.hom},
                         {"module_conjugators",
                          write_blocks(t.module_conjugators)}};
  }
  if (doc.generate) {
    j["generate"] = {{"name", doc.generate->name},
                     {"count", doc.generate->count},
                     {"mode", doc.generate->mode},
                     {"lambda", doc.generate->lambda}};
  }
  if (doc.seed) j["seed"] = *doc.seed;
  return j.dump(2) + "\n";
}

ModuleSpace document_space(const FrameDocument& doc) {
  return ModuleSpace(AlgebraSignature(doc.signature), doc.rank);
}

OperatorFrame document_frame(const FrameDocument& doc, const std::string& name) {
  const auto it = doc.frames.find(name);
  if (it == doc.frames.end()) unknown("frame", name);
  const ModuleSpace space = document_space(doc);
  std::vector<ModuleOperator> ops;
  for (const auto& blocks : it->second) ops.emplace_back(space, blocks);
  return OperatorFrame(space, std::move(ops));
}

ModuleOperator document_operator(const FrameDocument& doc,
                                 const std::string& name) {
  const auto it = doc.operators.find(name);
  if (it == doc.operators.end()) unknown("operator", name);
  return ModuleOperator(document_space(doc), it->second);
}

ModuleElement document_element(const FrameDocument& doc,
                               const std::string& name) {
  const auto it = doc.elements.find(name);
  if (it == doc.elements.end()) unknown("element", name);
  return ModuleElement(document_space(doc), it->second);
}

FusionSystem document_fusion(const FrameDocument& doc, const std::string& name,
                             double tol) {
  const auto it = doc.fusion.find(name);
  if (it == doc.fusion.end()) unknown("fusion system", name);
  const ModuleSpace space = document_space(doc);
  std::vector<FusionPair> pairs;
  for (std::size_t i = 0; i < it->second.projections.size(); ++i) {
    pairs.push_back(
        {SubmoduleProjection(ModuleOperator(space, it->second.projections[i]),
                             tol),
         CentralWeight(it->second.weights[i])});
  }
  return FusionSystem(space, std::move(pairs));
}

ThetaMap document_theta(const FrameDocument& doc, const std::string& name,
                        double tol) {
  const auto it = doc.thetas.find(name);
  if (it == doc.thetas.end()) unknown("theta map", name);
  const HomSpec& h = doc.homs.at(it->second.hom);
  const ModuleSpace space = document_space(doc);
  BlockHom hom(space.signature(), AlgebraSignature(h.target), h.block_map,
               h.conjugators, tol);
  return ThetaMap(space, std::move(hom), it->second.module_conjugators, tol);
}

void put_frame(FrameDocument& doc, const std::string& name,
               const OperatorFrame& frame) {
  if (!(frame.space() == document_space(doc))) {
    throw Error(ErrorKind::kShapeMismatch,
                "frame '" + name + "' does not live on the document space");
  }
  std::vector<BlockList> ops;
  for (const auto& t : frame.ops()) ops.push_back(t.blocks());
  doc.frames[name] = std::move(ops);
}

}  // namespace proframe
