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
#include <string>

#include "mathsculpt/error.hpp"
#include "mathsculpt/tessellate.hpp"
#include "tessellate/internal.hpp"

namespace mathsculpt::tessellate {

namespace {

double polyline_length(const std::vector<Vec3>& pts) {
  double len = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
  return len;
}

Vec3 reflect(const Vec3& v, const Vec3& axis, double axis_sq) {
  return v - axis * (2 * dot(axis, v) / axis_sq);
}

/// Double-reflection step (Wang et al.) carrying normal n from (x0, t0) to
/// (x1, t1).
Vec3 transport(const Vec3& x0, const Vec3& t0, const Vec3& n0, const Vec3& x1, const Vec3& t1) {
  const Vec3 v1 = x1 - x0;
  const double c1 = dot(v1, v1);
  if (c1 == 0) return n0;
  const Vec3 nl = reflect(n0, v1, c1);
  const Vec3 tl = reflect(t0, v1, c1);
  const Vec3 v2 = t1 - tl;
  const double c2 = dot(v2, v2);
  const Vec3 n1 = c2 == 0 ? nl : reflect(nl, v2, c2);
  // Re-orthonormalize against drift.
  return normalized(n1 - t1 * dot(n1, t1));
}

}  // namespace

std::vector<Vec3> sample_curve(const CurveFn& curve, Interval t, int count, bool closed) {
  if (!(t.lo < t.hi)) throw GeometryError("curve parameter interval is empty");
  if (count < 2) throw GeometryError("points_along must be at least 2");
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double step = (t.hi - t.lo) / (closed ? count : count - 1);
  for (int i = 0; i < count; ++i) {
    const double s = i == count - 1 && !closed ? t.hi : t.lo + step * i;
    const Vec3 p = curve(s);
    if (!is_finite(p)) {
      throw GeometryError("curve is not finite at t = " + std::to_string(s));
    }
    pts.push_back(p);
  }
  return pts;
}

CurveFn curve_from_exprs(const std::array<expr::ExprAst, 3>& curve) {
  std::array<expr::CompiledExpr, 3> fns;
  for (int k = 0; k < 3; ++k) fns[k] = expr::CompiledExpr::compile(curve[k], {"t"});
  return [fns](double t) {
    const double arg[1] = {t};
    return Vec3{fns[0](arg), fns[1](arg), fns[2](arg)};
  };
}

TriangleMesh tube_sweep(const CurveFn& curve, Interval t, const TubeOptions& options,
                        const QualityParams& q) {
  q.check();
  if (!(options.radius > 0) || !std::isfinite(options.radius)) {
    throw GeometryError("tube radius must be positive");
  }
  const int n = q.points_along;
  const int around = q.points_around;
  const bool closed = options.closed;
  const std::vector<Vec3> pts = sample_curve(curve, t, n, closed);

  if (closed) {
    const Vec3 end = curve(t.hi);
    const double len = polyline_length(pts) + distance(pts.back(), end);
    if (distance(pts.front(), end) > 1e-6 * len) {
      throw GeometryError("closed tube requested but the curve endpoints do not meet");
    }
  }

  std::vector<Vec3> tangent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec3 d;
    if (closed) {
      d = pts[(i + 1) % n] - pts[(i + n - 1) % n];
    } else {
      d = pts[std::min(i + 1, n - 1)] - pts[std::max(i - 1, 0)];
    }
    const double len = norm(d);
    if (!(len > 0)) {
      throw GeometryError("curve tangent vanishes at sample " + std::to_string(i));
    }
    tangent[i] = d / len;
  }

  std::vector<Vec3> normal(static_cast<std::size_t>(n));
  Vec3 b0;
  detail::perpendicular_frame(tangent[0], normal[0], b0);
  for (int i = 1; i < n; ++i) {
    normal[i] = transport(pts[i - 1], tangent[i - 1], normal[i - 1], pts[i], tangent[i]);
  }

  std::vector<double> twist(static_cast<std::size_t>(n), 0.0);
  if (closed) {
    const Vec3 back = transport(pts[n - 1], tangent[n - 1], normal[n - 1], pts[0], tangent[0]);
    const double holonomy =
        std::atan2(dot(cross(normal[0], back), tangent[0]), dot(normal[0], back));
    for (int i = 0; i < n; ++i) twist[i] = -holonomy * i / n;
  }

  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(n) * around + 2);
  for (int i = 0; i < n; ++i) {
    const Vec3& tn = tangent[i];
    const Vec3& nn = normal[i];
    const Vec3 bn = cross(tn, nn);
    for (int j = 0; j < around; ++j) {
      const double a = 2 * std::numbers::pi * j / around + twist[i];
      verts.push_back(pts[i] + (nn * std::cos(a) + bn * std::sin(a)) * options.radius);
    }
  }

  auto at = [around](int i, int j) { return static_cast<std::uint32_t>(i * around + j % around); };
  std::vector<Triangle> tris;
  const int segments = closed ? n : n - 1;
  for (int i = 0; i < segments; ++i) {
    const int i1 = (i + 1) % n;
    for (int j = 0; j < around; ++j) {
      const auto a = at(i, j);
      const auto b = at(i, j + 1);
      const auto c = at(i1, j + 1);
      const auto d = at(i1, j);
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
    }
  }
  if (!closed && options.caps == CapStyle::kFlat) {
    const auto start = static_cast<std::uint32_t>(verts.size());
    verts.push_back(pts.front());
    const auto end = static_cast<std::uint32_t>(verts.size());
    verts.push_back(pts.back());
    for (int j = 0; j < around; ++j) {
      tris.push_back({start, at(0, j + 1), at(0, j)});
      tris.push_back({end, at(n - 1, j), at(n - 1, j + 1)});
    }
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

TriangleMesh tube_sweep(const std::array<expr::ExprAst, 3>& curve, Interval t,
                        const TubeOptions& options, const QualityParams& q) {
  return tube_sweep(curve_from_exprs(curve), t, options, q);
}

}  // namespace mathsculpt::tessellate
