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
#include <map>
#include <numbers>
#include <string>

#include "mathsculpt/error.hpp"
#include "mathsculpt/tessellate.hpp"
#include "mesh/topology.hpp"
#include "tessellate/internal.hpp"

namespace mathsculpt::tessellate {

namespace {

void require_interval(Interval i, const char* what) {
  if (!(i.lo < i.hi) || !std::isfinite(i.lo) || !std::isfinite(i.hi)) {
    throw GeometryError(std::string(what) + " interval is empty");
  }
}

void require_thickness(double t) {
  if (!(t > 0) || !std::isfinite(t)) throw GeometryError("thickness must be positive");
}

double eval_graph(const GraphFn& f, double x, double y) {
  const double z = f(x, y);
  if (!std::isfinite(z)) {
    throw GeometryError("graph function is not finite at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
  }
  return z;
}

double sample_at(Interval i, int k, int count, bool periodic) {
  if (!periodic && k == count - 1) return i.hi;
  return i.lo + (i.hi - i.lo) * k / (periodic ? count : count - 1);
}

double scale_of(const std::vector<Vec3>& pts) {
  Aabb box;
  for (const Vec3& p : pts) box.include(p);
  return std::max(box.diagonal(), 1e-300);
}

}  // namespace

TriangleMesh sample_graph(const GraphFn& f, const GraphDomain& domain, const QualityParams& q) {
  q.check();
  const int n = q.points_along;
  std::vector<Vec3> verts;
  std::vector<Triangle> tris;
  auto quad = [&tris](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    tris.push_back({a, b, c});
    tris.push_back({a, c, d});
  };
  if (const auto* rect = std::get_if<RectDomain>(&domain)) {
    require_interval(rect->x, "graph x");
    require_interval(rect->y, "graph y");
    for (int i = 0; i < n; ++i) {
      const double x = sample_at(rect->x, i, n, false);
      for (int j = 0; j < n; ++j) {
        const double y = sample_at(rect->y, j, n, false);
        verts.push_back({x, y, eval_graph(f, x, y)});
      }
    }
    auto at = [n](int i, int j) { return static_cast<std::uint32_t>(i * n + j); };
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j) quad(at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
  } else {
    const auto& disk = std::get<DiskDomain>(domain);
    if (!(disk.radius > 0) || !std::isfinite(disk.radius)) {
      throw GeometryError("disk radius must be positive");
    }
    const int rings = n - 1;
    const int around = q.points_around;
    verts.push_back({disk.cx, disk.cy, eval_graph(f, disk.cx, disk.cy)});
    for (int k = 1; k <= rings; ++k) {
      const double r = disk.radius * k / rings;
      for (int j = 0; j < around; ++j) {
        const double a = 2 * std::numbers::pi * j / around;
        const double x = disk.cx + r * std::cos(a);
        const double y = disk.cy + r * std::sin(a);
        verts.push_back({x, y, eval_graph(f, x, y)});
      }
    }
    auto at = [around](int k, int j) {
      return static_cast<std::uint32_t>(1 + (k - 1) * around + j % around);
    };
    for (int j = 0; j < around; ++j) tris.push_back({0, at(1, j), at(1, j + 1)});
    for (int k = 1; k < rings; ++k)
      for (int j = 0; j < around; ++j) quad(at(k, j), at(k + 1, j), at(k + 1, j + 1), at(k, j + 1));
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

TriangleMesh offset_shell(const TriangleMesh& sheet, double thickness) {
  require_thickness(thickness);
  if (sheet.empty()) throw GeometryError("cannot thicken an empty sheet");
  const std::vector<Vec3> normals = vertex_normals(sheet);
  const auto nv = static_cast<std::uint32_t>(sheet.vertex_count());
  const double half = thickness / 2;

  std::vector<Vec3> verts;
  verts.reserve(2 * nv);
  for (std::uint32_t i = 0; i < nv; ++i) {
    if (normals[i] == Vec3{}) {
      throw GeometryError("degenerate surface normal at sample " + std::to_string(i));
    }
    verts.push_back(sheet.vertices()[i] + normals[i] * half);
  }
  for (std::uint32_t i = 0; i < nv; ++i) verts.push_back(sheet.vertices()[i] - normals[i] * half);

  std::vector<Triangle> tris;
  tris.reserve(2 * sheet.triangle_count());
  for (const Triangle& t : sheet.triangles()) tris.push_back(t);
  for (const Triangle& t : sheet.triangles()) tris.push_back({t[0] + nv, t[2] + nv, t[1] + nv});

  // Boundary edges keep the direction they have in their single triangle.
  std::map<std::uint64_t, std::pair<int, std::array<std::uint32_t, 2>>> edges;
  for (const Triangle& t : sheet.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const auto a = t[k];
      const auto b = t[(k + 1) % 3];
      auto& e = edges[mathsculpt::detail::edge_key(a, b)];
      if (e.first++ == 0) e.second = {a, b};
    }
  }
  for (const auto& [key, use] : edges) {
    if (use.first != 1) continue;
    const auto [a, b] = use.second;
    tris.push_back({b, a, a + nv});
    tris.push_back({b, a + nv, b + nv});
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

TriangleMesh graph_surface(const GraphFn& f, const GraphDomain& domain, double thickness,
                           const QualityParams& q) {
  require_thickness(thickness);
  return offset_shell(sample_graph(f, domain, q), thickness);
}

TriangleMesh graph_surface(const expr::ExprAst& f, const GraphDomain& domain, double thickness,
                           const QualityParams& q) {
  const auto fn = expr::CompiledExpr::compile(f, {"x", "y"});
  return graph_surface(
      [fn](double x, double y) {
        const double args[2] = {x, y};
        return fn(args);
      },
      domain, thickness, q);
}

TriangleMesh sample_parametric(const SurfaceFn& f, Interval u, Interval v, bool periodic_u,
                               bool periodic_v, const QualityParams& q, SurfaceSamples samples) {
  q.check();
  require_interval(u, "surface u");
  require_interval(v, "surface v");
  const int nu = samples.u > 0 ? samples.u : q.points_along;
  const int nv = samples.v > 0 ? samples.v : q.points_along;
  if (nu < 2 || nv < 2 || (periodic_u && nu < 3) || (periodic_v && nv < 3)) {
    throw GeometryError("too few surface samples");
  }
  auto eval = [&f](double a, double b) {
    const Vec3 p = f(a, b);
    if (!is_finite(p)) {
      throw GeometryError("surface is not finite at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
    }
    return p;
  };
  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(nu) * nv);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j)
      verts.push_back(eval(sample_at(u, i, nu, periodic_u), sample_at(v, j, nv, periodic_v)));

  const double tol = 1e-6 * scale_of(verts);
  if (periodic_u) {
    for (int j = 0; j < nv; ++j) {
      const double b = sample_at(v, j, nv, periodic_v);
      if (distance(eval(u.lo, b), eval(u.hi, b)) > tol) {
        throw GeometryError("surface is not periodic in u at v = " + std::to_string(b));
      }
    }
  }
  if (periodic_v) {
    for (int i = 0; i < nu; ++i) {
      const double a = sample_at(u, i, nu, periodic_u);
      if (distance(eval(a, v.lo), eval(a, v.hi)) > tol) {
        throw GeometryError("surface is not periodic in v at u = " + std::to_string(a));
      }
    }
  }

  auto at = [nu, nv](int i, int j) {
    return static_cast<std::uint32_t>((i % nu) * nv + j % nv);
  };
  std::vector<Triangle> tris;
  const int cu = periodic_u ? nu : nu - 1;
  const int cv = periodic_v ? nv : nv - 1;
  for (int i = 0; i < cu; ++i) {
    for (int j = 0; j < cv; ++j) {
      const auto a = at(i, j);
      const auto b = at(i + 1, j);
      const auto c = at(i + 1, j + 1);
      const auto d = at(i, j + 1);
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
    }
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

TriangleMesh parametric_surface(const SurfaceFn& f, Interval u, Interval v,
                                const SurfaceMode& mode, const QualityParams& q,
                                SurfaceSamples samples) {
  if (const auto* closed = std::get_if<ClosedMode>(&mode)) {
    const TriangleMesh grid =
        sample_parametric(f, u, v, closed->periodic_u, closed->periodic_v, q, samples);
    const TriangleMesh m = weld(grid, 1e-9 * scale_of(grid.vertices()));
    const ValidationReport r = validate(m);
    if (!r.watertight) {
      throw GeometryError("closed parametric surface is not watertight (" +
                          std::to_string(r.boundary_edge_count) + " boundary edges)");
    }
    return detail::outward(m);
  }
  const auto& shell = std::get<ShellMode>(mode);
  require_thickness(shell.thickness);
  const TriangleMesh grid =
      sample_parametric(f, u, v, shell.periodic_u, shell.periodic_v, q, samples);
  return offset_shell(weld(grid, 1e-9 * scale_of(grid.vertices())), shell.thickness);
}

TriangleMesh parametric_surface(const std::array<expr::ExprAst, 3>& f, Interval u, Interval v,
                                const SurfaceMode& mode, const QualityParams& q,
                                SurfaceSamples samples) {
  std::array<expr::CompiledExpr, 3> fns;
  for (int k = 0; k < 3; ++k) fns[k] = expr::CompiledExpr::compile(f[k], {"u", "v"});
  return parametric_surface(
      [fns](double a, double b) {
        const double args[2] = {a, b};
        return Vec3{fns[0](args), fns[1](args), fns[2](args)};
      },
      u, v, mode, q, samples);
}

TriangleMesh bspline_surface(const ControlGrid& control, const SurfaceMode& mode,
                             const QualityParams& q, SurfaceSamples samples) {
  if (control.size() < 4 || control.front().size() < 4) {
    throw GeometryError("cubic B-spline surface needs at least a 4x4 control grid");
  }
  for (const auto& row : control) {
    if (row.size() != control.front().size()) {
      throw GeometryError("B-spline control grid rows differ in length");
    }
  }
  return parametric_surface(
      [&control](double a, double b) { return bspline_surface_point(control, 3, a, b); },
      {0, 1}, {0, 1}, mode, q, samples);
}

}  // namespace mathsculpt::tessellate
