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

#include <string>

#include "mathsculpt/error.hpp"
#include "mathsculpt/mesh.hpp"

namespace mathsculpt {

TriangleMesh apply_transform(const TriangleMesh& m, const AffineTransform& t) {
  const double det = t.determinant();
  if (det == 0 || !std::isfinite(det)) throw GeometryError("singular transform");
  std::vector<Vec3> verts;
  verts.reserve(m.vertex_count());
  for (const Vec3& p : m.vertices()) verts.push_back(t.apply(p));
  std::vector<Triangle> tris = m.triangles();
  if (det < 0) {
    for (auto& tri : tris) std::swap(tri[1], tri[2]);
  }
  return TriangleMesh(std::move(verts), std::move(tris), m.colors());
}

AffineTransform resize_transform(const Aabb& box, double target_x) {
  const double w = box.extent().x;
  if (!(w > 0)) throw GeometryError("cannot resize: zero extent along x");
  if (!(target_x > 0) || !std::isfinite(target_x)) {
    throw GeometryError("resize target must be positive");
  }
  const double s = target_x / w;
  return scaling({s, s, s}, box.min);
}

AffineTransform resize_transform(const Aabb& box, const Vec3& target) {
  const Vec3 e = box.extent();
  Vec3 f;
  for (int i = 0; i < 3; ++i) {
    if (!(e[i] > 0)) {
      throw GeometryError(std::string("cannot resize: zero extent along ") + "xyz"[i]);
    }
    if (!(target[i] > 0) || !std::isfinite(target[i])) {
      throw GeometryError("resize targets must be positive");
    }
    f[i] = target[i] / e[i];
  }
  return scaling(f, box.min);
}

TriangleMesh resize(const TriangleMesh& m, double target_x) {
  return apply_transform(m, resize_transform(bounds(m), target_x));
}

TriangleMesh resize(const TriangleMesh& m, const Vec3& target) {
  return apply_transform(m, resize_transform(bounds(m), target));
}

TriangleMesh center_at_origin(const TriangleMesh& m) {
  return apply_transform(m, translation(-centroid(m).point));
}

MergeResult merge(std::span<const TriangleMesh> meshes,
                  std::optional<std::span<const Rgb>> colors) {
  if (colors && colors->size() != meshes.size()) {
    throw GeometryError("merge: " + std::to_string(colors->size()) + " colors for " +
                        std::to_string(meshes.size()) + " meshes");
  }
  bool keep_colors = colors.has_value();
  if (!keep_colors && !meshes.empty()) {
    keep_colors = true;
    for (const auto& m : meshes) keep_colors = keep_colors && m.has_colors();
  }

  std::size_t nv = 0;
  std::size_t nt = 0;
  Aabb box;
  for (const auto& m : meshes) {
    nv += m.vertex_count();
    nt += m.triangle_count();
    for (const Vec3& p : m.vertices()) box.include(p);
  }
  const double diag = box.diagonal();
  const double area_floor = 1e-14 * diag * diag;

  std::vector<Vec3> verts;
  std::vector<Triangle> tris;
  std::vector<Rgb> cols;
  verts.reserve(nv);
  tris.reserve(nt);
  if (keep_colors) cols.reserve(nv);

  MergeResult out;
  for (std::size_t i = 0; i < meshes.size(); ++i) {
    const TriangleMesh& m = meshes[i];
    const auto offset = static_cast<std::uint32_t>(verts.size());
    verts.insert(verts.end(), m.vertices().begin(), m.vertices().end());
    if (keep_colors) {
      if (colors) {
        cols.insert(cols.end(), m.vertex_count(), (*colors)[i]);
      } else {
        cols.insert(cols.end(), m.colors()->begin(), m.colors()->end());
      }
    }
    const auto& v = m.vertices();
    for (const Triangle& t : m.triangles()) {
      if (triangle_area(v[t[0]], v[t[1]], v[t[2]]) < area_floor) {
        ++out.dropped_degenerate;
        continue;
      }
      tris.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
    }
  }
  out.mesh = TriangleMesh(std::move(verts), std::move(tris),
                          keep_colors ? std::optional(std::move(cols)) : std::nullopt);
  return out;
}

}  // namespace mathsculpt
