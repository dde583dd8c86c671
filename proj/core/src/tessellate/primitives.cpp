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
#include <numbers>
#include <string>
#include <unordered_map>

#include "mathsculpt/error.hpp"
#include "mathsculpt/tessellate.hpp"
#include "mesh/topology.hpp"
#include "tessellate/internal.hpp"

namespace mathsculpt::tessellate {

namespace detail {

void perpendicular_frame(const Vec3& t, Vec3& n, Vec3& b) {
  const Vec3 ax = std::abs(t.x) <= std::abs(t.y) && std::abs(t.x) <= std::abs(t.z)
                      ? Vec3{1, 0, 0}
                      : (std::abs(t.y) <= std::abs(t.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
  n = normalized(cross(t, ax));
  b = cross(t, n);
}

double max_triangle_area(const TriangleMesh& m) {
  double best = 0;
  const auto& v = m.vertices();
  for (const Triangle& t : m.triangles()) {
    best = std::max(best, triangle_area(v[t[0]], v[t[1]], v[t[2]]));
  }
  return best;
}

TriangleMesh outward(TriangleMesh m) {
  if (signed_volume_unchecked(m) >= 0) return m;
  std::vector<Triangle> tris = m.triangles();
  for (auto& t : tris) std::swap(t[1], t[2]);
  return TriangleMesh(m.vertices(), std::move(tris), m.colors());
}

}  // namespace detail

namespace {

using detail::max_triangle_area;

TriangleMesh subdivide_unit(const TriangleMesh& m) {
  std::vector<Vec3> verts = m.vertices();
  std::vector<Triangle> tris;
  tris.reserve(m.triangle_count() * 4);
  std::unordered_map<std::uint64_t, std::uint32_t> midpoint;
  auto mid = [&](std::uint32_t a, std::uint32_t b) {
    const auto key = mathsculpt::detail::edge_key(a, b);
    const auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const auto idx = static_cast<std::uint32_t>(verts.size());
    verts.push_back(normalized(verts[a] + verts[b]));
    midpoint.emplace(key, idx);
    return idx;
  };
  for (const Triangle& t : m.triangles()) {
    const auto ab = mid(t[0], t[1]);
    const auto bc = mid(t[1], t[2]);
    const auto ca = mid(t[2], t[0]);
    tris.push_back({t[0], ab, ca});
    tris.push_back({t[1], bc, ab});
    tris.push_back({t[2], ca, bc});
    tris.push_back({ab, bc, ca});
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

TriangleMesh unit_icosahedron() {
  PolygonMesh ico = polyhedron_polygons(PolyhedronName::kIcosahedron, 1.0);
  for (auto& p : ico.vertices) p = normalized(p);
  return ico.triangulate();
}

TriangleMesh scale_sphere(const TriangleMesh& unit, const Vec3& center, const Vec3& radii) {
  std::vector<Vec3> verts;
  verts.reserve(unit.vertex_count());
  for (const Vec3& p : unit.vertices()) verts.push_back(center + cwise_mul(p, radii));
  return TriangleMesh(std::move(verts), unit.triangles());
}

TriangleMesh ellipsoid_mesh(const EllipsoidSpec& s, const QualityParams& q) {
  TriangleMesh unit = unit_icosahedron();
  if (!q.max_cell_area) {
    for (int d = 0; d < 3; ++d) unit = subdivide_unit(unit);
    return scale_sphere(unit, s.center, s.radii);
  }
  const double budget = *q.max_cell_area;
  for (int depth = 0;; ++depth) {
    TriangleMesh m = scale_sphere(unit, s.center, s.radii);
    if (max_triangle_area(m) <= budget) return m;
    if (depth == kMaxSubdivisionDepth) {
      throw BudgetError("max_cell_area " + std::to_string(budget) +
                        " needs more than " + std::to_string(kMaxSubdivisionDepth) +
                        " sphere subdivision levels");
    }
    unit = subdivide_unit(unit);
  }
}

/// A profile point in (radius, height) coordinates of a solid of revolution.
struct ProfilePoint {
  double r;
  double h;
};

/// Revolves a closed profile polyline (starting and ending on the axis) about
/// the axis through `base` with unit direction `t`. Points with r == 0 become
/// single pole vertices. Rings are rotated half a step so side vertices avoid
/// the coordinate planes.
TriangleMesh revolve(const std::vector<ProfilePoint>& profile, const Vec3& base, const Vec3& t,
                     int around) {
  Vec3 n, b;
  detail::perpendicular_frame(t, n, b);
  std::vector<Vec3> verts;
  std::vector<std::vector<std::uint32_t>> rings;
  for (const ProfilePoint& p : profile) {
    const Vec3 c = base + t * p.h;
    std::vector<std::uint32_t> ring;
    if (p.r == 0) {
      ring.push_back(static_cast<std::uint32_t>(verts.size()));
      verts.push_back(c);
    } else {
      for (int j = 0; j < around; ++j) {
        const double a = 2 * std::numbers::pi * (j + 0.5) / around;
        ring.push_back(static_cast<std::uint32_t>(verts.size()));
        verts.push_back(c + (n * std::cos(a) + b * std::sin(a)) * p.r);
      }
    }
    rings.push_back(std::move(ring));
  }
  std::vector<Triangle> tris;
  for (std::size_t k = 0; k + 1 < rings.size(); ++k) {
    const auto& r0 = rings[k];
    const auto& r1 = rings[k + 1];
    for (int j = 0; j < around; ++j) {
      const int j1 = (j + 1) % around;
      if (r0.size() == 1 && r1.size() == 1) continue;
      if (r0.size() == 1) {
        tris.push_back({r0[0], r1[j1], r1[j]});
      } else if (r1.size() == 1) {
        tris.push_back({r0[j], r0[j1], r1[0]});
      } else {
        tris.push_back({r0[j], r0[j1], r1[j1]});
        tris.push_back({r0[j], r1[j1], r1[j]});
      }
    }
  }
  return detail::outward(TriangleMesh(std::move(verts), std::move(tris)));
}

/// Splits every profile segment into pieces no longer than `step`.
std::vector<ProfilePoint> refine_profile(const std::vector<ProfilePoint>& corners, double step) {
  std::vector<ProfilePoint> out{corners.front()};
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    const ProfilePoint a = corners[i];
    const ProfilePoint b = corners[i + 1];
    const double len = std::hypot(b.r - a.r, b.h - a.h);
    const int pieces = step > 0 ? std::max(1, static_cast<int>(std::ceil(len / step))) : 1;
    for (int k = 1; k <= pieces; ++k) {
      const double f = static_cast<double>(k) / pieces;
      out.push_back({a.r + (b.r - a.r) * f, a.h + (b.h - a.h) * f});
    }
  }
  return out;
}

TriangleMesh revolved_solid(const std::vector<ProfilePoint>& corners, const Vec3& base,
                            const Vec3& axis, double radius, const QualityParams& q) {
  if (!q.max_cell_area) return revolve(corners, base, axis, q.points_around);
  const double budget = *q.max_cell_area;
  double step = std::sqrt(budget);
  int around = std::max(q.points_around,
                        static_cast<int>(std::ceil(2 * std::numbers::pi * radius / step)));
  for (int attempt = 0; attempt < 40; ++attempt) {
    TriangleMesh m = revolve(refine_profile(corners, step), base, axis, around);
    if (max_triangle_area(m) <= budget) return m;
    step *= 0.8;
    around = static_cast<int>(std::ceil(around * 1.25));
  }
  throw BudgetError("max_cell_area " + std::to_string(budget) + " could not be met");
}

TriangleMesh cuboid_mesh(const CuboidSpec& s) {
  PolygonMesh box;
  for (double x : {s.min_corner.x, s.max_corner.x})
    for (double y : {s.min_corner.y, s.max_corner.y})
      for (double z : {s.min_corner.z, s.max_corner.z}) box.vertices.push_back({x, y, z});
  box.faces = detail::convex_faces(box.vertices);
  return box.triangulate();
}

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw GeometryError(std::string(what) + " must be positive");
}

void require_finite(const Vec3& v, const char* what) {
  if (!is_finite(v)) throw GeometryError(std::string(what) + " must be finite");
}

}  // namespace

void QualityParams::check() const {
  if (points_along < 2) throw GeometryError("points_along must be at least 2");
  if (points_around < 3) throw GeometryError("points_around must be at least 3");
  if (max_cell_area && (!(*max_cell_area > 0) || !std::isfinite(*max_cell_area))) {
    throw GeometryError("max_cell_area must be positive");
  }
}

void check(const PrimitiveSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SphereSpec>) {
          require_finite(s.center, "sphere center");
          require_positive(s.radius, "sphere radius");
        } else if constexpr (std::is_same_v<T, EllipsoidSpec>) {
          require_finite(s.center, "ellipsoid center");
          require_positive(s.radii.x, "ellipsoid radii");
          require_positive(s.radii.y, "ellipsoid radii");
          require_positive(s.radii.z, "ellipsoid radii");
        } else if constexpr (std::is_same_v<T, CylinderSpec>) {
          require_finite(s.p1, "cylinder endpoint");
          require_finite(s.p2, "cylinder endpoint");
          require_positive(s.radius, "cylinder radius");
          if (s.p1 == s.p2) throw GeometryError("cylinder endpoints coincide");
        } else if constexpr (std::is_same_v<T, ConeSpec>) {
          require_finite(s.base_center, "cone base");
          require_finite(s.apex, "cone apex");
          require_positive(s.radius, "cone radius");
          if (s.base_center == s.apex) throw GeometryError("cone base and apex coincide");
        } else if constexpr (std::is_same_v<T, CuboidSpec>) {
          require_finite(s.min_corner, "cuboid corner");
          require_finite(s.max_corner, "cuboid corner");
          if (!(s.min_corner.x < s.max_corner.x && s.min_corner.y < s.max_corner.y &&
                s.min_corner.z < s.max_corner.z)) {
            throw GeometryError("cuboid min corner must be below max corner on every axis");
          }
        } else {
          require_positive(s.edge_length, "polyhedron edge length");
        }
      },
      spec);
}

TriangleMesh icosphere(int depth) {
  if (depth < 0 || depth > kMaxSubdivisionDepth) {
    throw GeometryError("icosphere depth out of range");
  }
  TriangleMesh m = unit_icosahedron();
  for (int d = 0; d < depth; ++d) m = subdivide_unit(m);
  return m;
}

TriangleMesh primitive(const PrimitiveSpec& spec, const QualityParams& q) {
  check(spec);
  q.check();
  return std::visit(
      [&q](const auto& s) -> TriangleMesh {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SphereSpec>) {
          return ellipsoid_mesh({s.center, {s.radius, s.radius, s.radius}}, q);
        } else if constexpr (std::is_same_v<T, EllipsoidSpec>) {
          return ellipsoid_mesh(s, q);
        } else if constexpr (std::is_same_v<T, CylinderSpec>) {
          const Vec3 d = s.p2 - s.p1;
          const double len = norm(d);
          return revolved_solid({{0, 0}, {s.radius, 0}, {s.radius, len}, {0, len}}, s.p1,
                                d / len, s.radius, q);
        } else if constexpr (std::is_same_v<T, ConeSpec>) {
          const Vec3 d = s.apex - s.base_center;
          const double len = norm(d);
          return revolved_solid({{0, 0}, {s.radius, 0}, {0, len}}, s.base_center, d / len,
                                s.radius, q);
        } else if constexpr (std::is_same_v<T, CuboidSpec>) {
          return cuboid_mesh(s);
        } else {
          return polyhedron_polygons(s.name, s.edge_length).triangulate();
        }
      },
      spec);
}

}  // namespace mathsculpt::tessellate
