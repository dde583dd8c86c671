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

#include "expr/lexer.hpp"

#include <cctype>
#include <charconv>

namespace mathsculpt::expr::detail {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::kNumber: return "number";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kCaret: return "'^'";
    case TokenKind::kLess: return "'<'";
    case TokenKind::kLessEqual: return "'<='";
    case TokenKind::kGreater: return "'>'";
    case TokenKind::kGreaterEqual: return "'>='";
    case TokenKind::kEqualEqual: return "'=='";
    case TokenKind::kAndAnd: return "'&&'";
    case TokenKind::kOrOr: return "'||'";
    case TokenKind::kBang: return "'!'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kComma: return "','";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::size_t len) {
    out.push_back({kind, src.substr(i, len), 0, i});
    i += len;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && is_digit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && is_digit(src[k])) {
          while (k < src.size() && is_digit(src[k])) ++k;
          j = k;
        }
      }
      double value = 0;
      const auto res = std::from_chars(src.data() + i, src.data() + j, value);
      if (res.ec != std::errc() || res.ptr != src.data() + j) {
        throw ParseError("malformed number '" + std::string(src.substr(i, j - i)) + "'", i);
      }
      out.push_back({TokenKind::kNumber, src.substr(i, j - i), value, i});
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      push(TokenKind::kIdentifier, j - i);
      continue;
    }
    const char next = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (c) {
      case '+': push(TokenKind::kPlus, 1); break;
      case '-': push(TokenKind::kMinus, 1); break;
      case '*': push(TokenKind::kStar, 1); break;
      case '/': push(TokenKind::kSlash, 1); break;
      case '^': push(TokenKind::kCaret, 1); break;
      case '(': push(TokenKind::kLParen, 1); break;
      case ')': push(TokenKind::kRParen, 1); break;
      case ',': push(TokenKind::kComma, 1); break;
      case '<':
        if (next == '=') push(TokenKind::kLessEqual, 2);
        else push(TokenKind::kLess, 1);
        break;
      case '>':
        if (next == '=') push(TokenKind::kGreaterEqual, 2);
        else push(TokenKind::kGreater, 1);
        break;
      case '=':
        if (next != '=') throw ParseError("expected '==' but found '='", i);
        push(TokenKind::kEqualEqual, 2);
        break;
      case '&':
        if (next != '&') throw ParseError("expected '&&' but found '&'", i);
        push(TokenKind::kAndAnd, 2);
        break;
      case '|':
        if (next != '|') throw ParseError("expected '||' but found '|'", i);
        push(TokenKind::kOrOr, 2);
        break;
      case '!': push(TokenKind::kBang, 1); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({TokenKind::kEnd, src.substr(src.size()), 0, src.size()});
  return out;
}

}  // namespace mathsculpt::expr::detail
