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

#ifndef PROFRAME_DOCUMENT_HPP_
#define PROFRAME_DOCUMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proframe/frame.hpp"
#include "proframe/fusion.hpp"

namespace proframe {

// A frame document is a single JSON file. Every matrix is an array of rows
// and every entry a two-element array [re, im]:
//
//   {
//     "signature": [1, 2],
//     "rank": 2,
//     "frames":    { "F": [ [block_0, block_1], ... ] },
//     "operators": { "Q": [block_0, block_1] },
//     "elements":  { "x": [block_0, block_1] },
//     "fusion":    { "sys": { "projections": [[block_0, block_1], ...],
//                             "weights": [[v_0, v_1], ...] } },
//     "homs":      { "phi": { "target": [2, 2], "block_map": [1, 1],
//                             "conjugators": [U_0, U_1] } },
//     "thetas":    { "theta": { "hom": "phi",
//                               "module_conjugators": [G_0, G_1] } },
//     "generate":  { "name": "G", "count": 3, "mode": "parseval",
//                    "lambda": 1.0 },
//     "seed": 7
//   }

using BlockList = std::vector<Matrix>;

struct HomSpec {
  std::vector<int> target;
  std::vector<std::size_t> block_map;
  BlockList conjugators;

  bool operator==(const HomSpec&) const;
};

struct ThetaSpec {
  std::string hom;
  BlockList module_conjugators;

  bool operator==(const ThetaSpec&) const;
};

struct FusionSpec {
  std::vector<BlockList> projections;
  std::vector<std::vector<double>> weights;

  bool operator==(const FusionSpec&) const;
};

struct GenerateSpec {
  std::string name = "G";
  int count = 3;
  std::string mode = "generic";  // generic | parseval | tight | near_singular
  double lambda = 1.0;

  bool operator==(const GenerateSpec&) const = default;
};

struct FrameDocument {
  std::vector<int> signature;
  int rank = 1;
  std::map<std::string, std::vector<BlockList>> frames;
  std::map<std::string, BlockList> operators;
  std::map<std::string, BlockList> elements;
  std::map<std::string, FusionSpec> fusion;
  std::map<std::string, HomSpec> homs;
  std::map<std::string, ThetaSpec> thetas;
  std::optional<GenerateSpec> generate;
  std::optional<std::uint64_t> seed;

  bool operator==(const FrameDocument&) const;
};

/// Parses and validates; throws Error(kParse) with line/column for malformed
/// JSON and Error(kShapeMismatch) naming the offending object otherwise.
FrameDocument parse_document_text(const std::string& text);
FrameDocument parse_document(const std::string& path);

/// Pretty-printed JSON with sorted keys; parse(emit(d)) == d.
std::string emit_document(const FrameDocument& doc);

ModuleSpace document_space(const FrameDocument& doc);
OperatorFrame document_frame(const FrameDocument& doc, const std::string& name);
ModuleOperator document_operator(const FrameDocument& doc,
                                 const std::string& name);
ModuleElement document_element(const FrameDocument& doc,
                               const std::string& name);
FusionSystem document_fusion(const FrameDocument& doc, const std::string& name,
                             double tol = kDefaultTol);
ThetaMap document_theta(const FrameDocument& doc, const std::string& name,
                        double tol = kDefaultTol);

/// Stores a frame under `name`, replacing any existing entry.
void put_frame(FrameDocument& doc, const std::string& name,
               const OperatorFrame& frame);

}  // namespace proframe

#endif  // PROFRAME_DOCUMENT_HPP_
