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

#include <unordered_set>

#include "mathsculpt/error.hpp"
#include "mathsculpt/mesh.hpp"
#include "mathsculpt/parallel.hpp"
#include "mesh/topology.hpp"

namespace mathsculpt {

namespace {

void require_nonempty(const TriangleMesh& m) {
  if (m.empty() || m.vertex_count() == 0) throw GeometryError("mesh is empty");
}

/// Reference point for moment sums; keeps volume and centroid sums well
/// conditioned for meshes far from the origin.
Vec3 reference_point(const TriangleMesh& m) {
  Aabb box;
  for (const Triangle& t : m.triangles()) {
    for (auto i : t) box.include(m.vertices()[i]);
  }
  return box.empty() ? Vec3{} : box.center();
}

struct Moments {
  double volume = 0;  // signed, times 6
  Vec3 first;         // integral of position relative to origin, times 24
};

Moments volume_moments(const TriangleMesh& m, const Vec3& origin) {
  const auto& v = m.vertices();
  const auto& tris = m.triangles();
  std::vector<double> dets(tris.size());
  std::vector<double> mx(tris.size()), my(tris.size()), mz(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const Vec3 a = v[tris[i][0]] - origin;
    const Vec3 b = v[tris[i][1]] - origin;
    const Vec3 c = v[tris[i][2]] - origin;
    const double d = dot(a, cross(b, c));
    const Vec3 s = (a + b + c) * d;
    dets[i] = d;
    mx[i] = s.x;
    my[i] = s.y;
    mz[i] = s.z;
  }
  return {pairwise_sum(dets), {pairwise_sum(mx), pairwise_sum(my), pairwise_sum(mz)}};
}

}  // namespace

Aabb bounds(const TriangleMesh& m) {
  require_nonempty(m);
  Aabb box;
  for (const Vec3& p : m.vertices()) box.include(p);
  return box;
}

double signed_volume_unchecked(const TriangleMesh& m) {
  return volume_moments(m, reference_point(m)).volume / 6.0;
}

double signed_volume(const TriangleMesh& m) {
  require_nonempty(m);
  const ValidationReport r = validate(m, 0.0);
  if (!r.watertight || !r.orientation_consistent) {
    throw ValidationError("signed volume requires a watertight, consistently oriented mesh (" +
                          std::to_string(r.boundary_edge_count) + " boundary edges, " +
                          std::to_string(r.nonmanifold_edge_count) + " non-manifold edges)");
  }
  return signed_volume_unchecked(m);
}

double surface_area(const TriangleMesh& m) {
  std::vector<double> areas;
  areas.reserve(m.triangle_count());
  const auto& v = m.vertices();
  for (const Triangle& t : m.triangles()) areas.push_back(triangle_area(v[t[0]], v[t[1]], v[t[2]]));
  return pairwise_sum(areas);
}

CentroidResult centroid(const TriangleMesh& m) {
  require_nonempty(m);
  const Vec3 origin = reference_point(m);
  const ValidationReport r = validate(m, 0.0);
  if (r.watertight && r.orientation_consistent) {
    const Moments mo = volume_moments(m, origin);
    if (std::abs(mo.volume) <= 0 || !std::isfinite(mo.volume)) {
      throw GeometryError("mesh encloses zero volume");
    }
    return {origin + mo.first / (4.0 * mo.volume), false};
  }

  const auto& v = m.vertices();
  const auto& tris = m.triangles();
  std::vector<double> w(tris.size()), sx(tris.size()), sy(tris.size()), sz(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const Vec3 a = v[tris[i][0]] - origin;
    const Vec3 b = v[tris[i][1]] - origin;
    const Vec3 c = v[tris[i][2]] - origin;
    const double area = triangle_area(a, b, c);
    const Vec3 s = (a + b + c) * (area / 3.0);
    w[i] = area;
    sx[i] = s.x;
    sy[i] = s.y;
    sz[i] = s.z;
  }
  const double total = pairwise_sum(w);
  if (!(total > 0)) throw GeometryError("mesh has zero surface area");
  return {origin + Vec3{pairwise_sum(sx), pairwise_sum(sy), pairwise_sum(sz)} / total, true};
}

std::vector<Vec3> extract_points(const TriangleMesh& m) {
  const WeldMap w = weld_vertices(m.vertices(), 0.0);
  std::vector<bool> seen(w.positions.size(), false);
  std::vector<Vec3> out;
  for (const Triangle& t : m.triangles()) {
    for (auto i : t) {
      const auto r = w.remap[i];
      if (!seen[r]) {
        seen[r] = true;
        out.push_back(w.positions[r]);
      }
    }
  }
  return out;
}

std::vector<Segment> extract_edges(const TriangleMesh& m) {
  const WeldMap w = weld_vertices(m.vertices(), 0.0);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Segment> out;
  for (const Triangle& t : m.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const auto a = w.remap[t[k]];
      const auto b = w.remap[t[(k + 1) % 3]];
      if (a == b) continue;
      if (seen.insert(detail::edge_key(a, b)).second) {
        out.push_back({w.positions[a], w.positions[b]});
      }
    }
  }
  return out;
}

std::vector<TrianglePoints> extract_faces(const TriangleMesh& m) {
  std::vector<TrianglePoints> out;
  out.reserve(m.triangle_count());
  const auto& v = m.vertices();
  for (const Triangle& t : m.triangles()) out.push_back({v[t[0]], v[t[1]], v[t[2]]});
  return out;
}

std::vector<MeshPrimitive> extract(const TriangleMesh& m, int dim) {
  std::vector<MeshPrimitive> out;
  switch (dim) {
    case 0:
      for (const auto& p : extract_points(m)) out.emplace_back(p);
      break;
    case 1:
      for (const auto& s : extract_edges(m)) out.emplace_back(s);
      break;
    case 2:
      for (const auto& f : extract_faces(m)) out.emplace_back(f);
      break;
    default:
      throw GeometryError("extract dimension must be 0, 1 or 2");
  }
  return out;
}

}  // namespace mathsculpt
