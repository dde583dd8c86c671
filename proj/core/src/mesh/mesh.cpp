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

#include "mathsculpt/error.hpp"
#include "mathsculpt/mesh.hpp"

namespace mathsculpt {

TriangleMesh::TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles,
                           std::optional<std::vector<Rgb>> colors)
    : vertices_(std::move(vertices)),
      triangles_(std::move(triangles)),
      colors_(std::move(colors)) {
  const auto n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(vertices_[i])) {
      throw GeometryError("vertex " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    if (tri[0] >= n || tri[1] >= n || tri[2] >= n) {
      throw GeometryError("triangle " + std::to_string(t) + " has an out-of-range index");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw GeometryError("triangle " + std::to_string(t) + " repeats a vertex index");
    }
  }
  if (colors_ && colors_->size() != n) {
    throw GeometryError("color count " + std::to_string(colors_->size()) +
                        " does not match vertex count " + std::to_string(n));
  }
}

TriangleMesh TriangleMesh::with_color(const Rgb& color) const {
  return TriangleMesh(vertices_, triangles_, std::vector<Rgb>(vertices_.size(), color));
}

TriangleMesh TriangleMesh::without_colors() const {
  return TriangleMesh(vertices_, triangles_);
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

Vec3 triangle_normal(const Vec3& a, const Vec3& b, const Vec3& c) {
  return normalized(cross(b - a, c - a));
}

std::vector<Vec3> vertex_normals(const TriangleMesh& m) {
  const auto& v = m.vertices();
  std::vector<Vec3> sum(v.size());
  for (const Triangle& t : m.triangles()) {
    const Vec3 n = triangle_normal(v[t[0]], v[t[1]], v[t[2]]);
    if (n == Vec3{}) continue;
    for (int k = 0; k < 3; ++k) {
      const Vec3& p = v[t[k]];
      const Vec3 e1 = normalized(v[t[(k + 1) % 3]] - p);
      const Vec3 e2 = normalized(v[t[(k + 2) % 3]] - p);
      const double angle = std::acos(std::clamp(dot(e1, e2), -1.0, 1.0));
      sum[t[k]] += n * angle;
    }
  }
  for (auto& n : sum) n = normalized(n);
  return sum;
}

}  // namespace mathsculpt
