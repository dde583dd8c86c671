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

#include <string>
#include <string_view>
#include <vector>

#include "mathsculpt/error.hpp"

namespace mathsculpt::expr::detail {

enum class TokenKind {
  kNumber,
  kIdentifier,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kCaret,
  kLess,
  kLessEqual,
  kGreater,
  kGreaterEqual,
  kEqualEqual,
  kAndAnd,
  kOrOr,
  kBang,
  kLParen,
  kRParen,
  kComma,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string_view text;
  double number = 0;
  std::size_t offset = 0;
};

std::string_view describe(TokenKind kind);

/// Splits src into tokens, ending with kEnd. Throws ParseError on stray
/// characters or malformed numbers.
std::vector<Token> tokenize(std::string_view src);

}  // namespace mathsculpt::expr::detail
