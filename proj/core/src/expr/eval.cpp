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
#include <cmath>

#include "mathsculpt/expr.hpp"

namespace mathsculpt::expr {

namespace {

double apply_binary(Op op, double a, double b, SourceSpan span) {
  switch (op) {
    case Op::kAdd: return a + b;
    case Op::kSub: return a - b;
    case Op::kMul: return a * b;
    case Op::kDiv: return a / b;
    case Op::kPow:
      if (a < 0 && std::isfinite(b) && b != std::trunc(b)) {
        throw EvalError("negative base raised to a non-integer power", span);
      }
      return std::pow(a, b);
    default: break;
  }
  throw EvalError("not an arithmetic operator", span);
}

double apply_function(Function f, double a, double b, SourceSpan span) {
  switch (f) {
    case Function::kSin: return std::sin(a);
    case Function::kCos: return std::cos(a);
    case Function::kTan: return std::tan(a);
    case Function::kAsin:
      if (a < -1 || a > 1) throw EvalError("asin argument outside [-1, 1]", span);
      return std::asin(a);
    case Function::kAcos:
      if (a < -1 || a > 1) throw EvalError("acos argument outside [-1, 1]", span);
      return std::acos(a);
    case Function::kAtan: return std::atan(a);
    case Function::kExp: return std::exp(a);
    case Function::kLog:
      if (!(a > 0)) throw EvalError("log of a non-positive value", span);
      return std::log(a);
    case Function::kSqrt:
      if (a < 0) throw EvalError("sqrt of a negative value", span);
      return std::sqrt(a);
    case Function::kAbs: return std::abs(a);
    case Function::kMin: return std::min(a, b);
    case Function::kMax: return std::max(a, b);
    case Function::kFloor: return std::floor(a);
    case Function::kCeil: return std::ceil(a);
    case Function::kSign: return a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0);
  }
  return 0;
}

double eval_tree(const ExprAst& n, const Environment& env) {
  switch (n.kind) {
    case NodeKind::kConstant:
      return n.value;
    case NodeKind::kVariable: {
      const auto it = env.find(n.name);
      if (it == env.end()) throw EvalError("unbound variable '" + n.name + "'", n.span);
      return it->second;
    }
    case NodeKind::kUnary:
      return -eval_tree(n.children[0], env);
    case NodeKind::kBinary:
      return apply_binary(n.op, eval_tree(n.children[0], env),
                          eval_tree(n.children[1], env), n.span);
    case NodeKind::kCall: {
      const double a = eval_tree(n.children[0], env);
      const double b = n.children.size() > 1 ? eval_tree(n.children[1], env) : 0.0;
      return apply_function(n.function, a, b, n.span);
    }
    case NodeKind::kCompare:
    case NodeKind::kLogical:
      break;
  }
  throw EvalError("boolean expression used where a number is required", n.span);
}

}  // namespace

double eval_scalar(const ExprAst& ast, const Environment& env) {
  return eval_tree(ast, env);
}

CompiledExpr CompiledExpr::compile(const ExprAst& ast, std::vector<std::string> variables) {
  if (is_boolean(ast)) {
    throw ParseError("expected an arithmetic expression, found a predicate", ast.span.begin);
  }
  require_variables(ast, variables);

  // Breadth-first layout so each node's children occupy a contiguous run.
  auto nodes = std::make_shared<std::vector<Node>>();
  std::vector<const ExprAst*> order{&ast};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& c : order[i]->children) order.push_back(&c);
  }
  nodes->reserve(order.size());
  int next_child = 1;
  for (const ExprAst* n : order) {
    if (is_boolean(*n)) {
      throw ParseError("predicate nested inside an arithmetic expression", n->span.begin);
    }
    int slot = -1;
    if (n->kind == NodeKind::kVariable) {
      slot = static_cast<int>(std::find(variables.begin(), variables.end(), n->name) -
                              variables.begin());
    }
    const int count = static_cast<int>(n->children.size());
    nodes->push_back({n->kind, n->op, n->function, n->value, slot, next_child, count, n->span});
    next_child += count;
  }

  CompiledExpr out;
  out.nodes_ = std::move(nodes);
  out.variables_ = std::move(variables);
  return out;
}

double CompiledExpr::operator()(std::span<const double> args) const {
  return eval(0, args);
}

double CompiledExpr::eval(int index, std::span<const double> args) const {
  const Node& n = (*nodes_)[static_cast<std::size_t>(index)];
  switch (n.kind) {
    case NodeKind::kConstant:
      return n.value;
    case NodeKind::kVariable:
      return args[static_cast<std::size_t>(n.slot)];
    case NodeKind::kUnary:
      return -eval(n.first, args);
    case NodeKind::kBinary:
      return apply_binary(n.op, eval(n.first, args), eval(n.first + 1, args), n.span);
    case NodeKind::kCall: {
      const double a = eval(n.first, args);
      const double b = n.count > 1 ? eval(n.first + 1, args) : 0.0;
      return apply_function(n.function, a, b, n.span);
    }
    default:
      break;
  }
  throw EvalError("boolean expression used where a number is required", n.span);
}

}  // namespace mathsculpt::expr
