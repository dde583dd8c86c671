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

#include "mathsculpt/expr.hpp"

namespace mathsculpt::expr {

namespace {

const std::vector<std::string>& xyz() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

std::function<double(const Vec3&)> lower(const ExprAst& n) {
  switch (n.kind) {
    case NodeKind::kCompare: {
      if (n.op == Op::kEq) {
        throw ParseError(
            "equality defines a surface with no volume; use an iso_shell object "
            "with a thickness instead",
            n.span.begin);
      }
      const bool lhs_minus_rhs = n.op == Op::kLe || n.op == Op::kLt;
      const CompiledExpr lhs = CompiledExpr::compile(n.children[0], xyz());
      const CompiledExpr rhs = CompiledExpr::compile(n.children[1], xyz());
      return [lhs, rhs, lhs_minus_rhs](const Vec3& p) {
        const std::array<double, 3> args{p.x, p.y, p.z};
        const double d = lhs(args) - rhs(args);
        return lhs_minus_rhs ? d : -d;
      };
    }
    case NodeKind::kLogical: {
      if (n.op == Op::kNot) {
        auto inner = lower(n.children[0]);
        return [inner](const Vec3& p) { return -inner(p); };
      }
      auto a = lower(n.children[0]);
      auto b = lower(n.children[1]);
      if (n.op == Op::kAnd) {
        return [a, b](const Vec3& p) { return std::max(a(p), b(p)); };
      }
      return [a, b](const Vec3& p) { return std::min(a(p), b(p)); };
    }
    default:
      throw ParseError("region predicate must be a comparison or logical expression",
                       n.span.begin);
  }
}

}  // namespace

SignedField to_signed_field(const ExprAst& ast) {
  require_variables(ast, xyz());
  return SignedField(lower(ast), Continuity::kContinuous, FieldSource::kExpression);
}

}  // namespace mathsculpt::expr
