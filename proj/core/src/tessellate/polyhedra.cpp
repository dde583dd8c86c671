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
#include <map>
#include <numbers>
#include <set>

#include "mathsculpt/error.hpp"
#include "mathsculpt/tessellate.hpp"
#include "mesh/topology.hpp"
#include "tessellate/internal.hpp"

namespace mathsculpt::tessellate {

namespace {

struct BaseSolid {
  std::vector<Vec3> vertices;
  double edge_length;
};

BaseSolid base_solid(PolyhedronName name) {
  constexpr double phi = std::numbers::phi;
  BaseSolid s;
  auto& v = s.vertices;
  switch (name) {
    case PolyhedronName::kTetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      s.edge_length = 2 * std::numbers::sqrt2;
      break;
    case PolyhedronName::kCube:
      for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
          for (double z : {-1.0, 1.0}) v.push_back({x, y, z});
      s.edge_length = 2;
      break;
    case PolyhedronName::kOctahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      s.edge_length = std::numbers::sqrt2;
      break;
    case PolyhedronName::kIcosahedron:
      for (double a : {-1.0, 1.0}) {
        for (double b : {-phi, phi}) {
          v.push_back({0, a, b});
          v.push_back({a, b, 0});
          v.push_back({b, 0, a});
        }
      }
      s.edge_length = 2;
      break;
    case PolyhedronName::kDodecahedron:
      for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
          for (double z : {-1.0, 1.0}) v.push_back({x, y, z});
      for (double a : {-1.0 / phi, 1.0 / phi}) {
        for (double b : {-phi, phi}) {
          v.push_back({0, a, b});
          v.push_back({a, b, 0});
          v.push_back({b, 0, a});
        }
      }
      s.edge_length = 2 / phi;
      break;
  }
  return s;
}

}  // namespace

/// Faces of the convex hull of points in convex position: every supporting
/// plane through three points, with all coplanar points collected and ordered
/// counterclockwise about the outward normal.
std::vector<std::vector<std::uint32_t>> detail::convex_faces(const std::vector<Vec3>& pts) {
  Aabb box;
  for (const auto& p : pts) box.include(p);
  const double scale = std::max(box.diagonal(), 1e-300);
  const double eps = 1e-9 * scale;

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> faces;
  const auto n = static_cast<std::uint32_t>(pts.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      for (std::uint32_t k = j + 1; k < n; ++k) {
        Vec3 normal = cross(pts[j] - pts[i], pts[k] - pts[i]);
        const double len = norm(normal);
        if (len <= eps * scale) continue;
        normal = normal / len;
        bool any_pos = false;
        bool any_neg = false;
        std::vector<std::uint32_t> on_plane;
        for (std::uint32_t m = 0; m < n; ++m) {
          const double s = dot(normal, pts[m] - pts[i]);
          if (s > eps) any_pos = true;
          else if (s < -eps) any_neg = true;
          else on_plane.push_back(m);
        }
        if (any_pos && any_neg) continue;
        if (!seen.insert(on_plane).second) continue;
        if (any_pos) normal = -normal;

        Vec3 c;
        for (auto m : on_plane) c += pts[m];
        c = c / static_cast<double>(on_plane.size());
        const Vec3 u = normalized(pts[on_plane[0]] - c);
        const Vec3 w = cross(normal, u);
        std::sort(on_plane.begin(), on_plane.end(), [&](std::uint32_t a, std::uint32_t b) {
          const Vec3 da = pts[a] - c;
          const Vec3 db = pts[b] - c;
          return std::atan2(dot(da, w), dot(da, u)) < std::atan2(dot(db, w), dot(db, u));
        });
        faces.push_back(std::move(on_plane));
      }
    }
  }
  return faces;
}

std::optional<PolyhedronName> polyhedron_from_name(std::string_view name) {
  if (name == "tetrahedron") return PolyhedronName::kTetrahedron;
  if (name == "cube") return PolyhedronName::kCube;
  if (name == "octahedron") return PolyhedronName::kOctahedron;
  if (name == "icosahedron") return PolyhedronName::kIcosahedron;
  if (name == "dodecahedron") return PolyhedronName::kDodecahedron;
  return std::nullopt;
}

std::string_view polyhedron_name(PolyhedronName name) {
  switch (name) {
    case PolyhedronName::kTetrahedron: return "tetrahedron";
    case PolyhedronName::kCube: return "cube";
    case PolyhedronName::kOctahedron: return "octahedron";
    case PolyhedronName::kIcosahedron: return "icosahedron";
    case PolyhedronName::kDodecahedron: return "dodecahedron";
  }
  return "?";
}

PolygonMesh polyhedron_polygons(PolyhedronName name, double edge_length) {
  if (!(edge_length > 0) || !std::isfinite(edge_length)) {
    throw GeometryError("polyhedron edge length must be positive");
  }
  BaseSolid s = base_solid(name);
  const double k = edge_length / s.edge_length;
  for (auto& p : s.vertices) p = p * k;
  PolygonMesh out;
  out.faces = detail::convex_faces(s.vertices);
  out.vertices = std::move(s.vertices);
  return out;
}

std::vector<std::array<std::uint32_t, 2>> PolygonMesh::edges() const {
  std::set<std::uint64_t> seen;
  std::vector<std::array<std::uint32_t, 2>> out;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto a = f[i];
      const auto b = f[(i + 1) % f.size()];
      if (seen.insert(mathsculpt::detail::edge_key(a, b)).second) out.push_back({a, b});
    }
  }
  return out;
}

TriangleMesh PolygonMesh::triangulate() const {
  std::vector<Triangle> tris;
  for (const auto& f : faces) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) tris.push_back({f[0], f[i], f[i + 1]});
  }
  return TriangleMesh(vertices, std::move(tris));
}

}  // namespace mathsculpt::tessellate
