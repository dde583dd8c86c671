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

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathsculpt/error.hpp"
#include "mathsculpt/field.hpp"

/// Scene-language expressions.
///
/// Grammar, loosest binding first:
///
///   or         := and ('||' and)*
///   and        := not ('&&' not)*
///   not        := '!' not | comparison
///   comparison := additive (('<' | '<=' | '>' | '>=' | '==') additive)?
///   additive   := term (('+' | '-') term)*
///   term       := unary (('*' | '/') unary)*
///   unary      := ('-' | '+') unary | power
///   power      := primary ('^' unary)?          right-associative
///   primary    := number | 'pi' | 'e' | identifier
///               | function '(' or (',' or)* ')' | '(' or ')'
///
/// so `-x^2` is `-(x^2)` and `2^-1` is `2^(-1)`. Function names are lowercase
/// and case-sensitive; `pi` and `e` are reserved constants.
namespace mathsculpt::expr {

enum class NodeKind {
  kConstant,
  kVariable,
  kUnary,
  kBinary,
  kCall,
  kCompare,
  kLogical,
};

enum class Op {
  kNone,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kAnd,
  kOr,
  kNot,
};

enum class Function {
  kSin,
  kCos,
  kTan,
  kAsin,
  kAcos,
  kAtan,
  kExp,
  kLog,
  kSqrt,
  kAbs,
  kMin,
  kMax,
  kFloor,
  kCeil,
  kSign,
};

/// Parsed expression tree. Immutable once built; evaluation is reentrant.
struct ExprAst {
  NodeKind kind = NodeKind::kConstant;
  Op op = Op::kNone;
  Function function = Function::kSin;  // kCall only
  double value = 0;                    // kConstant only
  std::string name;                    // variable name, or "pi"/"e" for named constants
  std::vector<ExprAst> children;
  SourceSpan span;

  /// Structural equality: kinds, operators, names, values and shape.
  /// Source spans are ignored.
  bool same_structure(const ExprAst& other) const;
};

/// True for comparison and logical nodes.
bool is_boolean(const ExprAst& ast);

std::string_view function_name(Function f);
int function_arity(Function f);

ExprAst parse_expression(std::string_view src);

/// Fully parenthesized text that parses back to the same structure.
std::string to_string(const ExprAst& ast);

std::set<std::string> free_variables(const ExprAst& ast);

/// Throws ParseError at the first variable not in `allowed`.
void require_variables(const ExprAst& ast, std::span<const std::string> allowed);

using Environment = std::map<std::string, double, std::less<>>;

/// Evaluates an arithmetic expression. Throws EvalError for boolean nodes,
/// unbound variables, and domain errors (log of non-positive, sqrt of
/// negative, asin/acos outside [-1, 1], negative base with a non-integer
/// exponent).
double eval_scalar(const ExprAst& ast, const Environment& env);

/// An arithmetic expression with variables resolved to argument slots, for
/// hot evaluation loops. Same semantics and errors as eval_scalar.
class CompiledExpr {
 public:
  CompiledExpr() = default;

  /// Throws ParseError when the expression uses a variable outside `variables`
  /// or is boolean.
  static CompiledExpr compile(const ExprAst& ast, std::vector<std::string> variables);

  double operator()(std::span<const double> args) const;
  const std::vector<std::string>& variables() const { return variables_; }

 private:
  struct Node {
    NodeKind kind;
    Op op;
    Function function;
    double value;
    int slot;
    int first;  // children are contiguous: [first, first + count)
    int count;
    SourceSpan span;
  };
  double eval(int index, std::span<const double> args) const;

  std::shared_ptr<const std::vector<Node>> nodes_;
  std::vector<std::string> variables_;
};

/// Converts a boolean region predicate over x, y, z into a signed field:
/// `f <= k`, `f < k` become f - k; `f >= k`, `f > k` become k - f; `&&` is
/// max, `||` is min, `!` is negation. Equality is rejected (level sets go
/// through the iso-shell path). Throws ParseError on other variables,
/// equality, or a non-boolean root.
SignedField to_signed_field(const ExprAst& ast);

}  // namespace mathsculpt::expr
