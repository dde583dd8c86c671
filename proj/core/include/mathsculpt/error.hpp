// Copyright 2026 The MathSculpt Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mathsculpt {

/// Half-open character range [begin, end) into an expression source string.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text: syntax, unknown function, arity or type misuse.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Runtime failure while evaluating an expression (domain error, unbound
/// variable). The span points at the offending node.
class EvalError : public Error {
 public:
  EvalError(const std::string& message, SourceSpan span)
      : Error(message + " at [" + std::to_string(span.begin) + ", " +
              std::to_string(span.end) + ")"),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Invalid geometric input: zero axis, non-positive radius, degenerate
/// parametrization, and similar.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A quality budget that cannot be met within the generator's limits.
class BudgetError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A mesh failed a precondition that requires a closed, consistently
/// oriented surface.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// File system failure (missing file, unwritable path).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content. offset is the byte offset of the problem.
class FormatError : public Error {
 public:
  FormatError(const std::string& message, std::size_t offset)
      : Error(message + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Scene document violates the schema or references invalid content.
class SceneError : public Error {
 public:
  using Error::Error;
};

}  // namespace mathsculpt
