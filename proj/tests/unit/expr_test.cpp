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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mathsculpt/expr.hpp"

using namespace mathsculpt;
using namespace mathsculpt::expr;

namespace {

double eval(std::string_view src, const Environment& env = {}) {
  return eval_scalar(parse_expression(src), env);
}

// Reference generator: builds trees directly, independent of the parser.
class AstGenerator {
 public:
  explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

  ExprAst arithmetic(int depth) {
    const int pick = depth <= 0 ? pick_int(0, 1) : pick_int(0, 5);
    switch (pick) {
      case 0: {
        ExprAst c;
        c.kind = NodeKind::kConstant;
        if (pick_int(0, 9) == 0) {
          c.name = "pi";
          c.value = std::numbers::pi;
        } else {
          c.value = pick_int(0, 40) / 4.0;
        }
        return c;
      }
      case 1: {
        ExprAst v;
        v.kind = NodeKind::kVariable;
        static const char* names[] = {"x", "y", "z"};
        v.name = names[pick_int(0, 2)];
        return v;
      }
      case 2: {
        ExprAst n;
        n.kind = NodeKind::kUnary;
        n.op = Op::kNeg;
        n.children.push_back(arithmetic(depth - 1));
        return n;
      }
      case 3: {
        ExprAst n;
        n.kind = NodeKind::kCall;
        static const Function unary[] = {Function::kSin, Function::kCos, Function::kAtan,
                                         Function::kAbs, Function::kFloor, Function::kSign};
        static const Function binary[] = {Function::kMin, Function::kMax};
        if (pick_int(0, 2) == 0) {
          n.function = binary[pick_int(0, 1)];
          n.children.push_back(arithmetic(depth - 1));
          n.children.push_back(arithmetic(depth - 1));
        } else {
          n.function = unary[pick_int(0, 5)];
          n.children.push_back(arithmetic(depth - 1));
        }
        return n;
      }
      default: {
        ExprAst n;
        n.kind = NodeKind::kBinary;
        static const Op ops[] = {Op::kAdd, Op::kSub, Op::kMul, Op::kDiv, Op::kPow};
        n.op = ops[pick_int(0, 4)];
        n.children.push_back(arithmetic(depth - 1));
        n.children.push_back(arithmetic(depth - 1));
        return n;
      }
    }
  }

  ExprAst predicate(int depth) {
    const int pick = depth <= 0 ? 0 : pick_int(0, 3);
    ExprAst n;
    if (pick == 0) {
      n.kind = NodeKind::kCompare;
      static const Op ops[] = {Op::kLt, Op::kLe, Op::kGt, Op::kGe};
      n.op = ops[pick_int(0, 3)];
      n.children.push_back(arithmetic(2));
      n.children.push_back(arithmetic(1));
    } else if (pick == 1) {
      n.kind = NodeKind::kLogical;
      n.op = Op::kNot;
      n.children.push_back(predicate(depth - 1));
    } else {
      n.kind = NodeKind::kLogical;
      n.op = pick == 2 ? Op::kAnd : Op::kOr;
      n.children.push_back(predicate(depth - 1));
      n.children.push_back(predicate(depth - 1));
    }
    return n;
  }

  Environment environment() {
    std::uniform_real_distribution<double> u(-3, 3);
    return {{"x", u(rng_)}, {"y", u(rng_)}, {"z", u(rng_)}};
  }

 private:
  int pick_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

// Outcome of evaluation: a value or "threw".
struct Outcome {
  bool threw = false;
  double value = 0;
};

Outcome run(const ExprAst& ast, const Environment& env) {
  try {
    return {false, eval_scalar(ast, env)};
  } catch (const EvalError&) {
    return {true, 0};
  }
}

bool identical(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return a == b;
}

}  // namespace

TEST(ExprParse, CurveComponent) {
  const ExprAst ast = parse_expression("t/pi");
  ASSERT_EQ(ast.kind, NodeKind::kBinary);
  EXPECT_EQ(ast.op, Op::kDiv);
  EXPECT_EQ(ast.children[0].kind, NodeKind::kVariable);
  EXPECT_EQ(ast.children[0].name, "t");
  EXPECT_EQ(ast.children[1].kind, NodeKind::kConstant);
  EXPECT_EQ(ast.children[1].value, std::numbers::pi);
}

TEST(ExprParse, ParenthesizedProduct) { EXPECT_EQ(eval("2*(3+4)"), 14); }

TEST(ExprParse, TwoSpherePredicate) {
  const ExprAst ast = parse_expression("x^2 + y^2 + z^2 <= 1 && (x-1)^2 + y^2 + z^2 <= 1");
  ASSERT_EQ(ast.kind, NodeKind::kLogical);
  EXPECT_EQ(ast.op, Op::kAnd);
  EXPECT_EQ(ast.children[0].op, Op::kLe);
  EXPECT_EQ(ast.children[1].op, Op::kLe);
}

TEST(ExprParse, Precedence) {
  EXPECT_EQ(eval("-2^2"), -4);
  EXPECT_EQ(eval("2^3^2"), 512);
  EXPECT_EQ(eval("2^-1"), 0.5);
  EXPECT_EQ(eval("1 + 2 * 3"), 7);
  EXPECT_EQ(eval("8 / 4 / 2"), 1);
  EXPECT_EQ(eval("10 - 4 - 3"), 3);
  EXPECT_EQ(eval("1.5e2 + 2E-1"), 150.2);
  EXPECT_EQ(eval("e"), std::numbers::e);
  // ! binds tighter than &&, which binds tighter than ||.
  const ExprAst ast = parse_expression("!x < 0 && y < 0 || z < 0");
  ASSERT_EQ(ast.op, Op::kOr);
  ASSERT_EQ(ast.children[0].op, Op::kAnd);
  EXPECT_EQ(ast.children[0].children[0].op, Op::kNot);
}

TEST(ExprParse, Errors) {
  EXPECT_THROW(parse_expression("sin(t"), ParseError);
  EXPECT_THROW(parse_expression("foo(1)"), ParseError);
  EXPECT_THROW(parse_expression("min(1)"), ParseError);
  EXPECT_THROW(parse_expression("sin(1, 2)"), ParseError);
  EXPECT_THROW(parse_expression("1 +"), ParseError);
  EXPECT_THROW(parse_expression("x $ y"), ParseError);
  EXPECT_THROW(parse_expression("(x < 1) + 2"), ParseError);
  EXPECT_THROW(parse_expression("Sin(x)"), ParseError);
  try {
    parse_expression("sin(t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ExprEval, NestedRoot) { EXPECT_NEAR(eval("sqrt(5+sqrt(3))"), 2.59462, 5e-6); }

TEST(ExprEval, GraphAtOrigin) { EXPECT_EQ(eval("sin(x+y^2)", {{"x", 0}, {"y", 0}}), 0); }

TEST(ExprEval, TorusAtOrigin) { EXPECT_EQ(eval("(3+cos(v))*cos(u)", {{"u", 0}, {"v", 0}}), 4); }

TEST(ExprEval, Functions) {
  EXPECT_EQ(eval("min(2, 3) + max(2, 3)"), 5);
  EXPECT_EQ(eval("floor(-1.5) + ceil(1.2)"), 0);
  EXPECT_EQ(eval("sign(-3) + sign(0) + sign(2)"), 0);
  EXPECT_EQ(eval("abs(-2)"), 2);
  EXPECT_DOUBLE_EQ(eval("exp(log(3))"), 3);
  EXPECT_DOUBLE_EQ(eval("atan(1)*4"), std::numbers::pi);
  EXPECT_DOUBLE_EQ(eval("asin(1) + acos(1)"), std::numbers::pi / 2);
  EXPECT_EQ(eval("(-8)^(1/3*3)"), -8);
  EXPECT_EQ(eval("(-2)^3"), -8);
}

TEST(ExprEval, DomainErrors) {
  EXPECT_THROW(eval("log(0)"), EvalError);
  EXPECT_THROW(eval("log(-1)"), EvalError);
  EXPECT_THROW(eval("sqrt(-1)"), EvalError);
  EXPECT_THROW(eval("asin(2)"), EvalError);
  EXPECT_THROW(eval("(-8)^(1/3)"), EvalError);
  EXPECT_THROW(eval("x + 1"), EvalError);
  EXPECT_THROW(eval("x < 1", {{"x", 0}}), EvalError);
  try {
    eval("1 + sqrt(0 - 4)");
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.span().begin, 4u);
    EXPECT_EQ(e.span().end, 15u);
  }
}

TEST(ExprEval, CompiledMatchesTree) {
  const ExprAst ast = parse_expression("sin(x)*y^2 - max(x, y)/3");
  const auto f = CompiledExpr::compile(ast, {"x", "y"});
  for (double x = -2; x <= 2; x += 0.25) {
    for (double y = -2; y <= 2; y += 0.25) {
      const double args[] = {x, y};
      EXPECT_EQ(f(args), eval_scalar(ast, {{"x", x}, {"y", y}}));
    }
  }
  EXPECT_THROW(CompiledExpr::compile(ast, {"x"}), ParseError);
  EXPECT_THROW(CompiledExpr::compile(parse_expression("x < 1"), {"x"}), ParseError);
}

TEST(ExprField, HalfSpace) {
  const SignedField f = to_signed_field(parse_expression("x <= 0"));
  EXPECT_EQ(f({-1, 0, 0}), -1);
}

TEST(ExprField, Lens) {
  const SignedField f =
      to_signed_field(parse_expression("x^2+y^2+z^2 <= 1 && (x-1)^2+y^2+z^2 <= 1"));
  EXPECT_EQ(f({0.5, 0, 0}), -0.75);
}

TEST(ExprField, SlabComplement) {
  const SignedField f = to_signed_field(parse_expression("x<=0 || x>=1"));
  EXPECT_EQ(f({0.5, 0, 0}), 0.5);
}

TEST(ExprField, StrictAndNonStrictCollapse) {
  const SignedField a = to_signed_field(parse_expression("x < 2"));
  const SignedField b = to_signed_field(parse_expression("x <= 2"));
  const SignedField c = to_signed_field(parse_expression("2 > x"));
  for (double x : {-1.0, 2.0, 3.5}) {
    EXPECT_EQ(a({x, 0, 0}), b({x, 0, 0}));
    EXPECT_EQ(a({x, 0, 0}), c({x, 0, 0}));
  }
}

TEST(ExprField, Rejections) {
  EXPECT_THROW(to_signed_field(parse_expression("x == 1")), ParseError);
  EXPECT_THROW(to_signed_field(parse_expression("t <= 1")), ParseError);
  EXPECT_THROW(to_signed_field(parse_expression("x + 1")), ParseError);
}

TEST(ExprProperty, PrintParseRoundTrip) {
  AstGenerator gen(20260101);
  for (int i = 0; i < 1000; ++i) {
    const ExprAst ast = gen.arithmetic(5);
    const std::string text = to_string(ast);
    const ExprAst back = parse_expression(text);
    ASSERT_TRUE(back.same_structure(ast)) << text;
    ASSERT_EQ(to_string(back), text);
    for (int k = 0; k < 10; ++k) {
      const Environment env = gen.environment();
      const Outcome a = run(ast, env);
      const Outcome b = run(back, env);
      ASSERT_EQ(a.threw, b.threw) << text;
      ASSERT_TRUE(identical(a.value, b.value)) << text;
    }
  }
}

TEST(ExprProperty, PredicateRoundTrip) {
  AstGenerator gen(77);
  for (int i = 0; i < 300; ++i) {
    const ExprAst ast = gen.predicate(3);
    const ExprAst back = parse_expression(to_string(ast));
    ASSERT_TRUE(back.same_structure(ast)) << to_string(ast);
  }
}

TEST(ExprProperty, DeMorganOnSigns) {
  const char* pairs[][2] = {
      {"x^2 + y^2 <= 1", "z >= 0.3"},
      {"sin(x) + sin(y) > z", "x*y < 0.5"},
      {"abs(x) + abs(y) + abs(z) <= 2", "(x-1)^2 + y^2 + z^2 <= 1"},
  };
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (const auto& pair : pairs) {
    const std::string a = pair[0];
    const std::string b = pair[1];
    const SignedField lhs = to_signed_field(parse_expression("!((" + a + ") && (" + b + "))"));
    const SignedField rhs = to_signed_field(parse_expression("!(" + a + ") || !(" + b + ")"));
    const SignedField fa = to_signed_field(parse_expression(a));
    const SignedField fb = to_signed_field(parse_expression(b));
    int checked = 0;
    for (int i = 0; i < 5000; ++i) {
      const Vec3 p{u(rng), u(rng), u(rng)};
      if (fa(p) == 0 || fb(p) == 0) continue;
      ++checked;
      ASSERT_EQ(std::signbit(lhs(p)), std::signbit(rhs(p)));
      ASSERT_EQ(lhs(p) <= 0, rhs(p) <= 0);
    }
    EXPECT_GT(checked, 4900);
  }
}

TEST(ExprVariables, FreeAndRequired) {
  const ExprAst ast = parse_expression("x*pi + sin(y) - e");
  EXPECT_EQ(free_variables(ast), (std::set<std::string>{"x", "y"}));
  const std::vector<std::string> xy = {"x", "y"};
  const std::vector<std::string> x = {"x"};
  EXPECT_NO_THROW(require_variables(ast, xy));
  EXPECT_THROW(require_variables(ast, x), ParseError);
}
