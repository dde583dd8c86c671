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
#include <memory>
#include <numeric>
#include <string>

#include "mathsculpt/error.hpp"
#include "mathsculpt/implicit.hpp"

namespace mathsculpt::implicit {

namespace {

/// Bounding-volume hierarchy over triangles, built by median splits.
class Bvh {
 public:
  explicit Bvh(const TriangleMesh& m) : verts_(m.vertices()), tris_(m.triangles()) {
    order_.resize(tris_.size());
    std::iota(order_.begin(), order_.end(), std::uint32_t{0});
    centers_.reserve(tris_.size());
    for (const Triangle& t : tris_) {
      centers_.push_back((verts_[t[0]] + verts_[t[1]] + verts_[t[2]]) / 3.0);
    }
    nodes_.reserve(2 * tris_.size() / kLeafSize + 2);
    nodes_.emplace_back();
    build(0, 0, order_.size());
    for (const Vec3& v : verts_) box_.include(v);
  }

  const Aabb& box() const { return box_; }

  /// Number of crossings of the ray origin + t * dir, t > 0. Sets `grazing`
  /// when any hit is too close to a triangle edge or to the origin.
  int crossings(const Vec3& origin, const Vec3& dir, bool& grazing) const {
    const Vec3 inv{1 / dir.x, 1 / dir.y, 1 / dir.z};
    int count = 0;
    std::uint32_t stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const Node& n = nodes_[stack[--top]];
      if (!hits_box(n.box, origin, inv)) continue;
      if (n.count > 0) {
        for (std::uint32_t k = n.first; k < n.first + n.count; ++k) {
          count += intersect(tris_[order_[k]], origin, dir, grazing);
        }
      } else {
        stack[top++] = n.first;
        stack[top++] = n.first + 1;
      }
    }
    return count;
  }

 private:
  static constexpr std::size_t kLeafSize = 4;

  struct Node {
    Aabb box;
    std::uint32_t first = 0;  // child index (inner) or first triangle (leaf)
    std::uint32_t count = 0;  // 0 for inner nodes
  };

  void build(std::uint32_t slot, std::size_t begin, std::size_t end) {
    Aabb box;
    Aabb centers;
    for (std::size_t k = begin; k < end; ++k) {
      const Triangle& t = tris_[order_[k]];
      for (auto v : t) box.include(verts_[v]);
      centers.include(centers_[order_[k]]);
    }
    nodes_[slot].box = box;
    if (end - begin <= kLeafSize) {
      nodes_[slot].first = static_cast<std::uint32_t>(begin);
      nodes_[slot].count = static_cast<std::uint32_t>(end - begin);
      return;
    }
    const Vec3 ext = centers.extent();
    const int axis = ext.x >= ext.y && ext.x >= ext.z ? 0 : (ext.y >= ext.z ? 1 : 2);
    const std::size_t mid = (begin + end) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) {
                       return centers_[a][axis] < centers_[b][axis];
                     });
    // Children are stored next to each other.
    const auto left = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_.emplace_back();
    nodes_[slot].first = left;
    build(left, begin, mid);
    build(left + 1, mid, end);
  }

  static bool hits_box(const Aabb& b, const Vec3& o, const Vec3& inv) {
    double t0 = 0;
    double t1 = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a) {
      double lo = (b.min[a] - o[a]) * inv[a];
      double hi = (b.max[a] - o[a]) * inv[a];
      if (lo > hi) std::swap(lo, hi);
      t0 = std::max(t0, lo);
      t1 = std::min(t1, hi);
      if (t0 > t1) return false;
    }
    return true;
  }

  int intersect(const Triangle& t, const Vec3& o, const Vec3& d, bool& grazing) const {
    constexpr double kEdge = 1e-9;
    const Vec3& a = verts_[t[0]];
    const Vec3 e1 = verts_[t[1]] - a;
    const Vec3 e2 = verts_[t[2]] - a;
    const Vec3 pv = cross(d, e2);
    const double det = dot(e1, pv);
    const double scale = norm(e1) * norm(e2);
    if (std::abs(det) <= 1e-14 * scale) return 0;  // parallel to the plane
    const double inv = 1 / det;
    const Vec3 s = o - a;
    const double u = dot(s, pv) * inv;
    if (u < -kEdge || u > 1 + kEdge) return 0;
    const Vec3 qv = cross(s, e1);
    const double v = dot(d, qv) * inv;
    if (v < -kEdge || u + v > 1 + kEdge) return 0;
    const double dist = dot(e2, qv) * inv;
    const double len = std::sqrt(scale);
    if (dist < -kEdge * len) return 0;
    if (std::abs(dist) <= kEdge * len || u <= kEdge || v <= kEdge || u + v >= 1 - kEdge) {
      grazing = true;
    }
    return dist > 0 ? 1 : 0;
  }

  std::vector<Vec3> verts_;
  std::vector<Triangle> tris_;
  std::vector<Vec3> centers_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
  Aabb box_;
};

}  // namespace

SignedField mesh_to_field(const TriangleMesh& m) {
  const ValidationReport r = validate(m);
  if (!r.watertight) {
    throw ValidationError("mesh is not watertight (" + std::to_string(r.boundary_edge_count) +
                          " boundary edges); its inside is undefined");
  }
  auto bvh = std::make_shared<const Bvh>(m);
  static const std::array<Vec3, 3> kDirections{
      normalized(Vec3{1, 0.3127, 0.1419}),
      normalized(Vec3{-0.2351, 1, 0.4123}),
      normalized(Vec3{0.1733, -0.3519, 1}),
  };
  return SignedField(
      [bvh](const Vec3& p) {
        if (!bvh->box().contains(p)) return 1.0;
        int votes_inside = 0;
        for (std::size_t k = 0; k < kDirections.size(); ++k) {
          bool grazing = false;
          const bool odd = bvh->crossings(p, kDirections[k], grazing) % 2 == 1;
          if (!grazing) return odd ? -1.0 : 1.0;
          votes_inside += odd;
        }
        return votes_inside >= 2 ? -1.0 : 1.0;
      },
      Continuity::kSignOnly, FieldSource::kMeshParity);
}

TriangleMesh mesh_boolean(const TriangleMesh& a, const TriangleMesh& b, BooleanOp op,
                          std::array<int, 3> resolution, std::optional<Aabb> box,
                          const MarchingOptions& options) {
  CsgNode fa = CsgNode::leaf(mesh_to_field(a));
  CsgNode fb = CsgNode::leaf(mesh_to_field(b));
  CsgNode node;
  switch (op) {
    case BooleanOp::kUnion:
      node = CsgNode::union_of({std::move(fa), std::move(fb)});
      break;
    case BooleanOp::kIntersection:
      node = CsgNode::intersection_of({std::move(fa), std::move(fb)});
      break;
    case BooleanOp::kDifference:
      node = CsgNode::difference(std::move(fa), std::move(fb));
      break;
  }
  GridSpec grid;
  grid.resolution = resolution;
  if (box) {
    grid.box = *box;
  } else {
    Aabb joint = bounds(a);
    joint.include(bounds(b));
    const Vec3 ext = joint.extent();
    for (int k = 0; k < 3; ++k) {
      if (resolution[k] < 5) throw GeometryError("grid resolution must be at least 5");
      // n cells of size h cover the bounds plus two cells on each side.
      const double h = ext[k] / (resolution[k] - 4);
      joint.min[k] -= 2 * h;
      joint.max[k] += 2 * h;
    }
    grid.box = joint;
  }
  return marching_cubes(node, grid, options);
}

}  // namespace mathsculpt::implicit
