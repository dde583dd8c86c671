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

#include <algorithm>
#include <array>
#include <charconv>
#include <numbers>

#include "expr/lexer.hpp"
#include "mathsculpt/expr.hpp"

namespace mathsculpt::expr {

namespace {

using detail::Token;
using detail::TokenKind;

struct FunctionInfo {
  std::string_view name;
  Function function;
  int arity;
};

constexpr std::array<FunctionInfo, 15> kFunctions{{
    {"sin", Function::kSin, 1},     {"cos", Function::kCos, 1},
    {"tan", Function::kTan, 1},     {"asin", Function::kAsin, 1},
    {"acos", Function::kAcos, 1},   {"atan", Function::kAtan, 1},
    {"exp", Function::kExp, 1},     {"log", Function::kLog, 1},
    {"sqrt", Function::kSqrt, 1},   {"abs", Function::kAbs, 1},
    {"min", Function::kMin, 2},     {"max", Function::kMax, 2},
    {"floor", Function::kFloor, 1}, {"ceil", Function::kCeil, 1},
    {"sign", Function::kSign, 1},
}};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(detail::tokenize(src)) {}

  ExprAst parse() {
    ExprAst root = parse_or();
    if (peek().kind != TokenKind::kEnd) {
      fail_expected("operator or end of input");
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail_expected(std::string_view what) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::kEnd
                            ? std::string("end of input")
                            : "'" + std::string(t.text) + "'";
    throw ParseError("expected " + std::string(what) + " but found " + found, t.offset);
  }

  const Token& expect(TokenKind kind) {
    if (peek().kind != kind) fail_expected(detail::describe(kind));
    return advance();
  }

  static void require_arith(const ExprAst& node, std::string_view context) {
    if (is_boolean(node)) {
      throw ParseError("boolean operand not allowed in " + std::string(context),
                       node.span.begin);
    }
  }

  static void require_bool(const ExprAst& node, std::string_view context) {
    if (!is_boolean(node)) {
      throw ParseError("arithmetic operand not allowed in " + std::string(context),
                       node.span.begin);
    }
  }

  static ExprAst make(NodeKind kind, Op op, std::vector<ExprAst> children) {
    ExprAst n;
    n.kind = kind;
    n.op = op;
    n.span = {children.front().span.begin, children.back().span.end};
    n.children = std::move(children);
    return n;
  }

  ExprAst parse_or() {
    ExprAst lhs = parse_and();
    while (peek().kind == TokenKind::kOrOr) {
      advance();
      ExprAst rhs = parse_and();
      require_bool(lhs, "'||'");
      require_bool(rhs, "'||'");
      lhs = make(NodeKind::kLogical, Op::kOr, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst parse_and() {
    ExprAst lhs = parse_not();
    while (peek().kind == TokenKind::kAndAnd) {
      advance();
      ExprAst rhs = parse_not();
      require_bool(lhs, "'&&'");
      require_bool(rhs, "'&&'");
      lhs = make(NodeKind::kLogical, Op::kAnd, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst parse_not() {
    if (peek().kind == TokenKind::kBang) {
      const std::size_t start = advance().offset;
      ExprAst operand = parse_not();
      require_bool(operand, "'!'");
      ExprAst n = make(NodeKind::kLogical, Op::kNot, {std::move(operand)});
      n.span.begin = start;
      return n;
    }
    return parse_comparison();
  }

  static Op comparison_op(TokenKind kind) {
    switch (kind) {
      case TokenKind::kLess: return Op::kLt;
      case TokenKind::kLessEqual: return Op::kLe;
      case TokenKind::kGreater: return Op::kGt;
      case TokenKind::kGreaterEqual: return Op::kGe;
      case TokenKind::kEqualEqual: return Op::kEq;
      default: return Op::kNone;
    }
  }

  ExprAst parse_comparison() {
    ExprAst lhs = parse_additive();
    const Op op = comparison_op(peek().kind);
    if (op == Op::kNone) return lhs;
    const Token& op_token = advance();
    ExprAst rhs = parse_additive();
    require_arith(lhs, "comparison");
    require_arith(rhs, "comparison");
    if (comparison_op(peek().kind) != Op::kNone) {
      throw ParseError("comparisons do not chain; combine them with '&&'", peek().offset);
    }
    (void)op_token;
    return make(NodeKind::kCompare, op, {std::move(lhs), std::move(rhs)});
  }

  ExprAst parse_additive() {
    ExprAst lhs = parse_term();
    while (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      const Op op = advance().kind == TokenKind::kPlus ? Op::kAdd : Op::kSub;
      ExprAst rhs = parse_term();
      require_arith(lhs, "arithmetic");
      require_arith(rhs, "arithmetic");
      lhs = make(NodeKind::kBinary, op, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst parse_term() {
    ExprAst lhs = parse_unary();
    while (peek().kind == TokenKind::kStar || peek().kind == TokenKind::kSlash) {
      const Op op = advance().kind == TokenKind::kStar ? Op::kMul : Op::kDiv;
      ExprAst rhs = parse_unary();
      require_arith(lhs, "arithmetic");
      require_arith(rhs, "arithmetic");
      lhs = make(NodeKind::kBinary, op, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst parse_unary() {
    if (peek().kind == TokenKind::kMinus || peek().kind == TokenKind::kPlus) {
      const Token& t = advance();
      ExprAst operand = parse_unary();
      require_arith(operand, "arithmetic");
      if (t.kind == TokenKind::kPlus) return operand;
      ExprAst n = make(NodeKind::kUnary, Op::kNeg, {std::move(operand)});
      n.span.begin = t.offset;
      return n;
    }
    return parse_power();
  }

  ExprAst parse_power() {
    ExprAst base = parse_primary();
    if (peek().kind != TokenKind::kCaret) return base;
    advance();
    ExprAst exponent = parse_unary();
    require_arith(base, "'^'");
    require_arith(exponent, "'^'");
    return make(NodeKind::kBinary, Op::kPow, {std::move(base), std::move(exponent)});
  }

  ExprAst parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kNumber: {
        advance();
        ExprAst n;
        n.kind = NodeKind::kConstant;
        n.value = t.number;
        n.span = {t.offset, t.offset + t.text.size()};
        return n;
      }
      case TokenKind::kIdentifier:
        return parse_identifier();
      case TokenKind::kLParen: {
        advance();
        ExprAst inner = parse_or();
        const Token& close = expect(TokenKind::kRParen);
        inner.span = {t.offset, close.offset + 1};
        return inner;
      }
      default:
        fail_expected("number, identifier, or '('");
    }
  }

  ExprAst parse_identifier() {
    const Token& t = advance();
    const SourceSpan span{t.offset, t.offset + t.text.size()};
    if (t.text == "pi" || t.text == "e") {
      ExprAst n;
      n.kind = NodeKind::kConstant;
      n.value = t.text == "pi" ? std::numbers::pi : std::numbers::e;
      n.name = std::string(t.text);
      n.span = span;
      return n;
    }
    if (peek().kind != TokenKind::kLParen) {
      ExprAst n;
      n.kind = NodeKind::kVariable;
      n.name = std::string(t.text);
      n.span = span;
      return n;
    }
    const FunctionInfo* info = find_function(t.text);
    if (info == nullptr) {
      throw ParseError("unknown function '" + std::string(t.text) + "'", t.offset);
    }
    advance();  // '('
    std::vector<ExprAst> args;
    if (peek().kind != TokenKind::kRParen) {
      args.push_back(parse_or());
      while (accept(TokenKind::kComma)) args.push_back(parse_or());
    }
    const Token& close = expect(TokenKind::kRParen);
    if (static_cast<int>(args.size()) != info->arity) {
      throw ParseError("function '" + std::string(info->name) + "' expects " +
                           std::to_string(info->arity) + " argument(s) but got " +
                           std::to_string(args.size()),
                       t.offset);
    }
    for (const auto& a : args) require_arith(a, "function argument");
    ExprAst n;
    n.kind = NodeKind::kCall;
    n.function = info->function;
    n.children = std::move(args);
    n.span = {t.offset, close.offset + 1};
    return n;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view op_text(Op op) {
  switch (op) {
    case Op::kAdd: return "+";
    case Op::kSub: return "-";
    case Op::kMul: return "*";
    case Op::kDiv: return "/";
    case Op::kPow: return "^";
    case Op::kLt: return "<";
    case Op::kLe: return "<=";
    case Op::kGt: return ">";
    case Op::kGe: return ">=";
    case Op::kEq: return "==";
    case Op::kAnd: return "&&";
    case Op::kOr: return "||";
    case Op::kNot: return "!";
    case Op::kNeg: return "-";
    case Op::kNone: break;
  }
  return "?";
}

void print(const ExprAst& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::kConstant: {
      if (!n.name.empty()) {
        out += n.name;
        break;
      }
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
      const std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
      if (n.value < 0 || text.find_first_of("ni") != std::string_view::npos) {
        out += '(';
        out += text;
        out += ')';
      } else {
        out += text;
      }
      break;
    }
    case NodeKind::kVariable:
      out += n.name;
      break;
    case NodeKind::kUnary:
      out += "(-";
      print(n.children[0], out);
      out += ')';
      break;
    case NodeKind::kLogical:
      if (n.op == Op::kNot) {
        out += "(!";
        print(n.children[0], out);
        out += ')';
        break;
      }
      [[fallthrough]];
    case NodeKind::kBinary:
    case NodeKind::kCompare:
      out += '(';
      print(n.children[0], out);
      out += ' ';
      out += op_text(n.op);
      out += ' ';
      print(n.children[1], out);
      out += ')';
      break;
    case NodeKind::kCall:
      out += function_name(n.function);
      out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += ", ";
        print(n.children[i], out);
      }
      out += ')';
      break;
  }
}

void collect_variables(const ExprAst& n, std::set<std::string>& out) {
  if (n.kind == NodeKind::kVariable) out.insert(n.name);
  for (const auto& c : n.children) collect_variables(c, out);
}

}  // namespace

bool ExprAst::same_structure(const ExprAst& o) const {
  if (kind != o.kind || op != o.op || name != o.name ||
      children.size() != o.children.size()) {
    return false;
  }
  if (kind == NodeKind::kCall && function != o.function) return false;
  if (kind == NodeKind::kConstant && value != o.value) return false;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].same_structure(o.children[i])) return false;
  }
  return true;
}

bool is_boolean(const ExprAst& ast) {
  return ast.kind == NodeKind::kCompare || ast.kind == NodeKind::kLogical;
}

std::string_view function_name(Function f) {
  for (const auto& info : kFunctions) {
    if (info.function == f) return info.name;
  }
  return "?";
}

int function_arity(Function f) {
  for (const auto& info : kFunctions) {
    if (info.function == f) return info.arity;
  }
  return 0;
}

ExprAst parse_expression(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const ExprAst& ast) {
  std::string out;
  print(ast, out);
  return out;
}

std::set<std::string> free_variables(const ExprAst& ast) {
  std::set<std::string> out;
  collect_variables(ast, out);
  return out;
}

void require_variables(const ExprAst& ast, std::span<const std::string> allowed) {
  if (ast.kind == NodeKind::kVariable &&
      std::find(allowed.begin(), allowed.end(), ast.name) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    throw ParseError("unknown variable '" + ast.name + "' (allowed: " + list + ")",
                     ast.span.begin);
  }
  for (const auto& c : ast.children) require_variables(c, allowed);
}

}  // namespace mathsculpt::expr
