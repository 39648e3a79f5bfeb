// Copyright 2026 The mec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mec {

enum class ErrorCode {
  kParse = 1,
  kNotATree = 2,
  kBudgetExceeded = 3,
  kInvalidArgument = 4,
  kInvalidSolution = 5,
  kIo = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class ParseErrorKind {
  kMalformed,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kBadWeight,
  kEdgeCountMismatch,
};

/// Error raised while reading an instance or solution file. `line` is
/// 1-based and refers to the raw input, counting comment lines.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

enum class TreeDefect {
  kNotConnected,
  kEdgeCountWrong,
};

class NotATreeError : public Error {
 public:
  NotATreeError(TreeDefect defect, const std::string& what)
      : Error(ErrorCode::kNotATree, what), defect_(defect) {}

  TreeDefect defect() const noexcept { return defect_; }

 private:
  TreeDefect defect_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

}  // namespace mec
