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

#ifndef PROFRAME_ERROR_HPP_
#define PROFRAME_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace proframe {

enum class ErrorKind {
  kIncompatibleSignature,
  kIndexOutOfRange,
  kHermitianRequired,
  kNotPositive,
  kNotInvertible,
  kNotSelfAdjoint,
  kNotSurjective,
  kNotAFrame,
  kShapeMismatch,
  kInvalidProjection,
  kIncompatibleTheta,
  kPreconditionViolated,
  kParse,
  kUnknownName,
};

std::string_view error_kind_name(ErrorKind kind);

// True for errors that describe a failed mathematical hypothesis rather than
// malformed input.
bool is_math_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace proframe

#endif  // PROFRAME_ERROR_HPP_
